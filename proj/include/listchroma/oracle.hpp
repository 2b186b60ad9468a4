#ifndef LISTCHROMA_ORACLE_HPP
#define LISTCHROMA_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "listchroma/core.hpp"

namespace listchroma {

class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  std::optional<ListColoring> witness;  // empty when infeasible
  std::uint64_t assignments_explored = 0;

  bool feasible() const { return witness.has_value(); }
  Weight optimum() const { return witness->weight; }
};

inline constexpr int kOracleDefaultCap = 14;

/// Exact minimum-weight list coloring by backtracking, highest degree first.
/// Prunes on the active weight plus a completion bound taken from single
/// vertices and from one greedy clique per vertex.
/// Throws TooLarge when the instance has more than `cap` vertices.
OracleResult oracle_solve(const Instance& inst, int cap = kOracleDefaultCap);

}  // namespace listchroma

#endif  // LISTCHROMA_ORACLE_HPP
