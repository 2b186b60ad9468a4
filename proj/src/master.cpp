#include "listchroma/master.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace listchroma {

namespace {

bool near_integer(double x) { return std::fabs(x - std::round(x)) <= kEps; }

}  // namespace

Column make_dummy(VertexId v, Weight big_m) { return Column{{v}, -1, big_m}; }

MasterProblem::MasterProblem(const Instance& inst, const ColorPartition& partition, Weight big_m)
    : inst_(inst), partition_(partition), big_m_(big_m) {
  const int n = inst.num_vertices();
  for (int v = 0; v < n; ++v) lp_.add_row(RowSense::AtLeast, 1.0);
  class_row_.assign(partition.classes.size(), -1);
  for (std::size_t k = 0; k < partition.classes.size(); ++k) {
    const auto& cls = partition.classes[k];
    if (cls.bounded)
      class_row_[k] = static_cast<int>(lp_.add_row(RowSense::AtMost, static_cast<double>(cls.size())));
  }
  std::vector<RevisedSimplex::Var> basis;
  for (int v = 0; v < n; ++v) {
    Column d = make_dummy(v, big_m);
    basis.push_back(static_cast<RevisedSimplex::Var>(lp_.add_column(static_cast<double>(big_m), {v})));
    keys_.insert(d.key());
    columns_.push_back(std::move(d));
  }
  for (std::size_t r = static_cast<std::size_t>(n); r < lp_.num_rows(); ++r)
    basis.push_back(RevisedSimplex::slack(r));
  lp_.set_basis(std::move(basis));
}

void MasterProblem::validate(const Column& col) const {
  if (col.dummy()) throw std::invalid_argument("dummy columns are created by the master only");
  if (col.vertices.empty()) throw std::invalid_argument("empty column");
  if (!std::is_sorted(col.vertices.begin(), col.vertices.end()) ||
      std::adjacent_find(col.vertices.begin(), col.vertices.end()) != col.vertices.end())
    throw std::invalid_argument("column vertices must be sorted and distinct");
  if (col.class_rep >= inst_.color_universe()) throw std::invalid_argument("unknown color class");
  const int k = partition_.class_of[col.class_rep];
  if (k < 0 || partition_.classes[k].rep != col.class_rep)
    throw std::invalid_argument("column class is not a representative color");
  const auto& cls = partition_.classes[k];
  if (col.cost != cls.weight) throw std::invalid_argument("column cost differs from class weight");
  if (!std::includes(cls.vertices.begin(), cls.vertices.end(), col.vertices.begin(),
                     col.vertices.end()))
    throw std::invalid_argument("column leaves the vertex set of its class");
  if (!inst_.graph.is_stable(col.vertices)) throw std::invalid_argument("column is not stable");
}

std::vector<int> MasterProblem::rows_for(const Column& col) const {
  std::vector<int> rows(col.vertices.begin(), col.vertices.end());
  if (!col.dummy()) {
    const int row = class_row_[partition_.class_of[col.class_rep]];
    if (row >= 0) rows.push_back(row);
  }
  return rows;
}

void MasterProblem::add_columns(const std::vector<Column>& cols) {
  std::set<std::pair<ColorId, std::vector<VertexId>>> batch;
  for (const auto& col : cols) {
    validate(col);
    if (contains(col)) throw DuplicateColumn("column already in the pool");
    if (!batch.insert(col.key()).second) throw DuplicateColumn("column added twice");
  }
  for (const auto& col : cols) {
    keys_.insert(col.key());
    lp_.add_column(static_cast<double>(col.cost), rows_for(col));
    columns_.push_back(col);
  }
}

LpResult MasterProblem::solve() {
  RevisedSimplex::Solution sol = lp_.solve();
  LpResult res;
  res.objective = sol.objective;
  res.primal = std::move(sol.primal);
  res.iterations = sol.iterations;
  const int n = inst_.num_vertices();
  res.duals.pi.assign(static_cast<std::size_t>(n), 0.0);
  for (int v = 0; v < n; ++v) res.duals.pi[v] = std::max(0.0, sol.duals[v]);
  res.duals.gamma.assign(partition_.classes.size(), 0.0);
  for (std::size_t k = 0; k < class_row_.size(); ++k)
    if (class_row_[k] >= 0) res.duals.gamma[k] = std::max(0.0, -sol.duals[class_row_[k]]);
  return res;
}

Integrality check_integrality(const MasterProblem& mp, const LpResult& res) {
  bool singleton_issue = false;
  const auto& cols = mp.columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const double x = res.primal[i];
    if (near_integer(x)) {
      if (cols[i].dummy() && x > kEps) singleton_issue = true;
      continue;
    }
    if (!cols[i].dummy() && cols[i].vertices.size() >= 2) return Integrality::FractionalOnBigSets;
    singleton_issue = true;
  }
  return singleton_issue ? Integrality::SingletonFractionalOnly : Integrality::Integral;
}

IntegerSelection integral_selection(const MasterProblem& mp, const LpResult& res) {
  IntegerSelection sel;
  for (std::size_t i = 0; i < mp.columns().size(); ++i) {
    if (res.primal[i] > 0.5) {
      sel.chosen.push_back(i);
      sel.objective += static_cast<double>(mp.columns()[i].cost);
    }
  }
  return sel;
}

IntegerSelection extract_integer_solution(const MasterProblem& mp, const LpResult& res) {
  const auto& cols = mp.columns();
  const auto& part = mp.partition();
  const int n = mp.instance().num_vertices();

  IntegerSelection sel;
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  std::vector<int> used(part.classes.size(), 0);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i].vertices.size() < 2 || res.primal[i] <= 0.5) continue;
    sel.chosen.push_back(i);
    sel.objective += static_cast<double>(cols[i].cost);
    for (VertexId v : cols[i].vertices) covered[v] = 1;
    ++used[part.class_of[cols[i].class_rep]];
  }

  // residual LP over the positive singleton columns of uncovered vertices
  RevisedSimplex lp;
  std::vector<int> row_of_vertex(static_cast<std::size_t>(n), -1);
  for (VertexId v = 0; v < n; ++v)
    if (!covered[v]) row_of_vertex[v] = static_cast<int>(lp.add_row(RowSense::AtLeast, 1.0));
  const std::size_t cover_rows = lp.num_rows();
  if (cover_rows == 0) return sel;

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < cols.size(); ++i)
    if (cols[i].vertices.size() == 1 && res.primal[i] > kEps && !covered[cols[i].vertices[0]])
      candidates.push_back(i);

  std::vector<int> class_rows(part.classes.size(), -1);
  for (std::size_t i : candidates) {
    if (cols[i].dummy()) continue;
    const int k = part.class_of[cols[i].class_rep];
    if (mp.class_row(k) < 0 || class_rows[k] >= 0) continue;
    const double cap = static_cast<double>(part.classes[k].size() - used[k]);
    class_rows[k] = static_cast<int>(lp.add_row(RowSense::AtMost, cap));
  }

  // artificials must cost more than a dummy, or a tie can leave one basic
  const double artificial_cost = 2.0 * static_cast<double>(mp.big_m()) + 1.0;
  std::vector<RevisedSimplex::Var> basis;
  for (std::size_t r = 0; r < cover_rows; ++r)
    basis.push_back(static_cast<RevisedSimplex::Var>(lp.add_column(artificial_cost, {static_cast<int>(r)})));
  for (std::size_t r = cover_rows; r < lp.num_rows(); ++r) basis.push_back(RevisedSimplex::slack(r));
  const std::size_t first_real = lp.num_columns();
  for (std::size_t i : candidates) {
    std::vector<int> rows{row_of_vertex[cols[i].vertices[0]]};
    if (!cols[i].dummy()) {
      const int k = part.class_of[cols[i].class_rep];
      if (class_rows[k] >= 0) rows.push_back(class_rows[k]);
    }
    lp.add_column(static_cast<double>(cols[i].cost), std::move(rows));
  }
  lp.set_basis(std::move(basis));
  RevisedSimplex::Solution sol = lp.solve();

  for (std::size_t c = 0; c < first_real; ++c)
    if (sol.primal[c] > kEps) throw NumericalFailure("residual singleton LP kept an artificial column");
  for (std::size_t c = first_real; c < sol.primal.size(); ++c) {
    const double x = sol.primal[c];
    if (!near_integer(x)) throw NumericalFailure("residual singleton LP has a fractional vertex");
    if (x > 0.5) {
      const std::size_t i = candidates[c - first_real];
      sel.chosen.push_back(i);
      sel.objective += static_cast<double>(cols[i].cost);
    }
  }
  std::sort(sel.chosen.begin(), sel.chosen.end());
  return sel;
}

std::variant<Weight, Infeasible> node_lower_bound(const LpResult& res, Weight big_m) {
  if (res.objective >= static_cast<double>(big_m) - kEps) return Infeasible{};
  return static_cast<Weight>(std::ceil(res.objective - kEps));
}

std::vector<ColorId> coloring_from_columns(const Instance& inst, const ColorPartition& partition,
                                           const std::vector<Column>& chosen) {
  std::vector<const Column*> order;
  for (const auto& col : chosen) {
    if (col.dummy()) throw ReconstructionBug("dummy column in an integer solution");
    order.push_back(&col);
  }
  std::sort(order.begin(), order.end(),
            [](const Column* a, const Column* b) { return a->key() < b->key(); });

  const int n = inst.num_vertices();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < order.size(); ++c)
    for (VertexId v : order[c]->vertices)
      if (owner[v] < 0) owner[v] = static_cast<int>(c);

  std::vector<char> nonempty(order.size(), 0);
  for (int c : owner) {
    if (c < 0) throw ReconstructionBug("selected columns do not cover every vertex");
    nonempty[c] = 1;
  }

  std::vector<int> next_member(partition.classes.size(), 0);
  std::vector<ColorId> color_of_column(order.size(), -1);
  for (std::size_t c = 0; c < order.size(); ++c) {
    if (!nonempty[c]) continue;
    const int k = partition.class_of[order[c]->class_rep];
    const auto& cls = partition.classes[k];
    if (next_member[k] >= cls.size())
      throw ReconstructionBug("class " + std::to_string(cls.rep + 1) + " used more than " +
                              std::to_string(cls.size()) + " times");
    color_of_column[c] = cls.members[next_member[k]++];
  }

  std::vector<ColorId> coloring(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) coloring[v] = color_of_column[owner[v]];
  return coloring;
}

}  // namespace listchroma
