#ifndef LISTCHROMA_PRICING_HPP
#define LISTCHROMA_PRICING_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "listchroma/core.hpp"
#include "listchroma/master.hpp"

namespace listchroma {

struct PricingTask {
  ColorId class_rep;
  std::vector<VertexId> vertices;  // V_k
  const std::vector<double>* pi;   // indexed by node vertex
  double threshold;                // w_k + gamma_k
};

struct StableSetResult {
  std::vector<VertexId> set;  // sorted
  double weight = 0.0;
  bool complete = true;  // false if the search stopped early or was aborted
  bool aborted = false;
  std::size_t nodes = 0;
};

/// Called every kAbortCheckInterval search nodes; returning true aborts.
using AbortCheck = std::function<bool()>;
inline constexpr std::size_t kAbortCheckInterval = 1000;

/// Include/exclude branch-and-bound over the positive-weight vertices of V_k,
/// taken in decreasing pi (then id) order, pruned by current weight plus the
/// weight of the remaining candidates. With early_exit the search stops at the
/// first set heavier than threshold + eps; otherwise, and whenever no such set
/// exists, the result is a maximum-weight stable set.
StableSetResult mwss_search(const Graph& graph, const PricingTask& task, bool early_exit,
                            const AbortCheck& abort = {});

/// Greedily adds vertices of `candidates` (decreasing pi, then id) that keep
/// `set` stable, until it is maximal within `candidates`.
std::vector<VertexId> extend_to_maximal(const std::vector<VertexId>& set, const Graph& graph,
                                        const std::vector<VertexId>& candidates,
                                        const std::vector<double>& pi);

struct PricingStats {
  std::size_t searches = 0;
  std::size_t nodes = 0;
  std::size_t cache_hits = 0;
};

struct PricingOutcome {
  std::vector<std::optional<Column>> per_class;  // by class index
  PricingStats stats;
  bool aborted = false;

  bool any() const;
  std::vector<Column> columns() const;
};

/// Solves (Aux) for every class, at most one column each. Classes are visited
/// by decreasing threshold; classes with the same vertex set share one search.
PricingOutcome price_all(const Instance& inst, const ColorPartition& partition,
                         const DualSolution& duals, bool early_exit = true,
                         const AbortCheck& abort = {});

}  // namespace listchroma

#endif  // LISTCHROMA_PRICING_HPP
