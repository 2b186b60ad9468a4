#include "listchroma/bnp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <set>

#include "listchroma/assignment.hpp"
#include "listchroma/pricing.hpp"

namespace listchroma {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::TimeLimit: return "time_limit";
  }
  return "unknown";
}

std::pair<VertexId, VertexId> select_branching_pair(const MasterProblem& mp, const LpResult& res) {
  const auto& cols = mp.columns();
  std::size_t first = cols.size();
  double best_gap = 2.0;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const double x = res.primal[i];
    if (cols[i].dummy() || cols[i].vertices.size() < 2) continue;
    if (std::fabs(x - std::round(x)) <= kEps) continue;
    const double gap = std::fabs(x - 0.5);
    if (first == cols.size() || gap < best_gap - 1e-12 ||
        (gap <= best_gap + 1e-12 && cols[i].vertices.size() > cols[first].vertices.size())) {
      first = i;
      best_gap = gap;
    }
  }
  if (first == cols.size()) throw std::logic_error("no fractional column with two or more vertices");

  const auto& s1 = cols[first].vertices;
  const VertexId u = s1.front();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i == first || res.primal[i] <= kEps) continue;
    const auto& s2 = cols[i].vertices;
    if (!std::binary_search(s2.begin(), s2.end(), u)) continue;
    for (VertexId w : s2)
      if (!std::binary_search(s1.begin(), s1.end(), w)) return {u, w};
  }
  return {u, s1[1]};
}

std::vector<Column> inherit_columns(const std::vector<Column>& parent_pool,
                                    const std::vector<int>& renaming, const Instance& child,
                                    const ColorPartition& child_partition) {
  std::vector<Column> out;
  std::set<std::pair<ColorId, std::vector<VertexId>>> seen;
  for (const auto& col : parent_pool) {
    if (col.dummy()) continue;
    const int k = child_partition.class_of[col.class_rep];
    if (k < 0) continue;
    const auto& cls = child_partition.classes[k];

    Column mapped{{}, cls.rep, cls.weight};
    bool lost = false;
    for (VertexId v : col.vertices) {
      if (renaming[v] < 0) {
        lost = true;
        break;
      }
      mapped.vertices.push_back(renaming[v]);
    }
    if (lost) continue;
    std::sort(mapped.vertices.begin(), mapped.vertices.end());
    mapped.vertices.erase(std::unique(mapped.vertices.begin(), mapped.vertices.end()),
                          mapped.vertices.end());
    if (!std::includes(cls.vertices.begin(), cls.vertices.end(), mapped.vertices.begin(),
                       mapped.vertices.end()))
      continue;
    if (!child.graph.is_stable(mapped.vertices)) continue;
    if (!seen.insert(mapped.key()).second) continue;
    out.push_back(std::move(mapped));
  }
  return out;
}

bool update_incumbent(std::optional<ListColoring>& current, ListColoring candidate,
                      const Instance& root) {
  if (auto err = validate_coloring(root, candidate.assignment))
    throw InvalidCandidate("invalid incumbent candidate: " + *err);
  if (coloring_weight(root, candidate.assignment) != candidate.weight)
    throw InvalidCandidate("incumbent candidate reports the wrong weight");
  if (current && current->weight <= candidate.weight) return false;
  current = std::move(candidate);
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

struct OpenNode {
  NodeState state;
  std::shared_ptr<const std::vector<Column>> parent_pool;
  std::vector<int> renaming;
  double parent_bound = -1.0;
};

class Search {
 public:
  Search(const Instance& root, const SolveConfig& config)
      : root_(root), config_(config), big_m_(1 + root.total_weight()), start_(Clock::now()) {
    if (config.time_limit_seconds)
      deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(std::max(0.0, *config.time_limit_seconds)));
  }

  SolveReport run() {
    auto root = preprocess_singletons(NodeState::root(root_));
    if (!root) {
      report_.nodes = 1;
      return finish(SolveStatus::Infeasible);
    }
    stack_.push_back({std::move(root->state), nullptr, {}, -1.0});
    while (!stack_.empty()) {
      OpenNode node = std::move(stack_.back());
      stack_.pop_back();
      if (!process(node)) return finish(SolveStatus::TimeLimit);
    }
    return finish(report_.incumbent ? SolveStatus::Optimal : SolveStatus::Infeasible);
  }

 private:
  bool expired() const { return deadline_ && Clock::now() >= *deadline_; }

  SolveReport finish(SolveStatus status) {
    report_.status = status;
    report_.wall_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(report_);
  }

  void offer(const NodeState& state, const std::vector<ColorId>& node_coloring) {
    update_incumbent(report_.incumbent, reconstruct(root_, state, node_coloring), root_);
  }

  // Returns false when the time limit interrupts the node.
  bool process(OpenNode& node) {
    if (expired()) return false;
    ++report_.nodes;
    const NodeState& state = node.state;
    const Instance& inst = state.instance;

    if (inst.num_vertices() == 0) {
      offer(state, {});
      return true;
    }
    if (report_.incumbent && state.fixed_weight >= report_.incumbent->weight) return true;

    const ColorPartition partition = partition_colors(inst);
    if (config_.use_assignment && all_complete(inst, partition)) {
      if (auto coloring = solve_assignment(inst, big_m_)) offer(state, *coloring);
      return true;
    }

    MasterProblem mp(inst, partition, big_m_);
    if (node.parent_pool) {
      mp.add_columns(inherit_columns(*node.parent_pool, node.renaming, inst, partition));
      node.parent_pool.reset();
    }

    const AbortCheck abort = [this] { return expired(); };
    LpResult res;
    for (;;) {
      res = mp.solve();
      report_.lp_iterations += res.iterations;
      PricingOutcome priced = price_all(inst, partition, res.duals, true, abort);
      if (priced.aborted) return false;
      ++report_.pricing_calls;
      if (!priced.any()) {
        if (config_.hooks.pricing_converged) config_.hooks.pricing_converged(mp, res);
        break;
      }
      auto cols = priced.columns();
      report_.columns_generated += cols.size();
      mp.add_columns(cols);
      if (expired()) return false;
    }

    const double bound_value = static_cast<double>(state.fixed_weight) + res.objective;
    if (config_.hooks.node_bound) config_.hooks.node_bound(state.depth, bound_value, node.parent_bound);

    const auto bound = node_lower_bound(res, big_m_);
    if (std::holds_alternative<Infeasible>(bound)) return true;
    const Weight lower = state.fixed_weight + std::get<Weight>(bound);
    if (report_.incumbent && lower >= report_.incumbent->weight) return true;

    const Integrality kind = check_integrality(mp, res);
    if (kind == Integrality::FractionalOnBigSets) {
      branch(node, mp, res, bound_value);
      return true;
    }
    IntegerSelection sel;
    if (kind == Integrality::Integral) {
      sel = integral_selection(mp, res);
    } else {
      sel = extract_integer_solution(mp, res);
      if (config_.hooks.singleton_extraction) config_.hooks.singleton_extraction(mp, res, sel);
    }
    std::vector<Column> chosen;
    for (std::size_t i : sel.chosen) chosen.push_back(mp.columns()[i]);
    offer(state, coloring_from_columns(inst, partition, chosen));
    return true;
  }

  void branch(const OpenNode& node, const MasterProblem& mp, const LpResult& res, double bound) {
    const auto [u, v] = select_branching_pair(mp, res);
    if (config_.hooks.branch) config_.hooks.branch(node.state, u, v);
    auto pool = std::make_shared<const std::vector<Column>>(mp.columns());

    std::vector<OpenNode> children;
    for (int which = 0; which < 2; ++which) {
      const bool same = (which == 0) == config_.same_first;
      Transition t = same ? branch_same(node.state, u, v) : branch_differ(node.state, u, v);
      auto pre = preprocess_singletons(t.state);
      if (!pre) {
        ++report_.nodes;
        continue;
      }
      children.push_back({std::move(pre->state), pool, compose_renaming(t.renaming, pre->renaming), bound});
    }
    // the stack is LIFO: push the child to explore first last
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack_.push_back(std::move(*it));
  }

  const Instance& root_;
  const SolveConfig& config_;
  Weight big_m_;
  Clock::time_point start_;
  std::optional<Clock::time_point> deadline_;
  std::vector<OpenNode> stack_;
  SolveReport report_;
};

}  // namespace

SolveReport solve(const Instance& root, const SolveConfig& config) {
  return Search(root, config).run();
}

}  // namespace listchroma
