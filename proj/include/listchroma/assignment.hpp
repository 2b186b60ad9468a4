#ifndef LISTCHROMA_ASSIGNMENT_HPP
#define LISTCHROMA_ASSIGNMENT_HPP

#include <optional>
#include <vector>

#include "listchroma/core.hpp"

namespace listchroma {

/// Minimum-cost perfect assignment on a square matrix (rows to columns).
/// Returns the column of each row. O(n^3), shortest augmenting paths with
/// potentials.
std::vector<int> hungarian(const std::vector<std::vector<Weight>>& cost);

/// True iff every V_k induces a clique.
bool all_complete(const Instance& inst, const ColorPartition& partition);

/// Node coloring from a min-weight perfect matching between V + Z and the
/// concrete colors, with |Z| = |C| - |V| zero-cost padding rows. Forbidden
/// pairs cost `big_m`; nullopt when |V| > |C| or the optimum uses one.
/// Requires all_complete().
std::optional<std::vector<ColorId>> solve_assignment(const Instance& inst, Weight big_m);

}  // namespace listchroma

#endif  // LISTCHROMA_ASSIGNMENT_HPP
