#ifndef LISTCHROMA_BNP_HPP
#define LISTCHROMA_BNP_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "listchroma/core.hpp"
#include "listchroma/master.hpp"

namespace listchroma {

class InvalidCandidate : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class SolveStatus { Optimal, Infeasible, TimeLimit };

const char* to_string(SolveStatus status);

struct SolveReport {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<ListColoring> incumbent;
  std::size_t nodes = 0;
  std::size_t columns_generated = 0;
  std::size_t pricing_calls = 0;
  std::size_t lp_iterations = 0;
  double wall_seconds = 0.0;
};

/// Observation points used by tests and diagnostics. All are optional.
struct SolveHooks {
  /// Pricing found no improving column; `res` is the final node LP.
  std::function<void(const MasterProblem&, const LpResult& res)> pricing_converged;
  /// Node LP bound (fixed weight + LP objective) next to its parent's, -1 at the root.
  std::function<void(int depth, double bound, double parent_bound)> node_bound;
  /// Integer solution extracted from an LP whose only fractional columns are singletons.
  std::function<void(const MasterProblem&, const LpResult&, const IntegerSelection&)> singleton_extraction;
  /// Branching on (u, v) at `state`.
  std::function<void(const NodeState& state, VertexId u, VertexId v)> branch;
};

struct SolveConfig {
  std::optional<double> time_limit_seconds;
  bool same_first = true;      // explore the SAME child before DIFFER
  bool use_assignment = true;  // resolve all-complete nodes by bipartite matching
  SolveHooks hooks;
};

/// Depth-first branch-and-price.
SolveReport solve(const Instance& root, const SolveConfig& config = {});

/// Most fractional column S1 with |S1| >= 2 (ties: larger set, then pool
/// order); u = min S1; v = min(S2 \ S1) for the first other positive column S2
/// through u with S2 \ S1 nonempty, else min(S1 \ {u}).
std::pair<VertexId, VertexId> select_branching_pair(const MasterProblem& mp, const LpResult& res);

/// Translates parent columns through `renaming` (parent vertex -> child vertex
/// or -1) and keeps those still valid in the child: every vertex survives, the
/// set stays stable, and it stays inside V_k of the class now holding color k.
/// Dummies are not inherited.
std::vector<Column> inherit_columns(const std::vector<Column>& parent_pool,
                                    const std::vector<int>& renaming, const Instance& child,
                                    const ColorPartition& child_partition);

/// Keeps the strictly lighter coloring. Throws InvalidCandidate when the
/// candidate is not a valid coloring of `root` or its weight is misreported.
bool update_incumbent(std::optional<ListColoring>& current, ListColoring candidate,
                      const Instance& root);

}  // namespace listchroma

#endif  // LISTCHROMA_BNP_HPP
