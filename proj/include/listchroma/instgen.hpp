#ifndef LISTCHROMA_INSTGEN_HPP
#define LISTCHROMA_INSTGEN_HPP

#include <cstdint>
#include <string>

#include "listchroma/core.hpp"

namespace listchroma {

enum class WeightMode { Unit, Uniform };

struct GenConfig {
  int n = 0;
  double p = 0.5;  // edge probability
  double c = 1.0;  // |C| = floor(c * n)
  double q = 0.5;  // membership-to-list probability
  WeightMode weight_mode = WeightMode::Unit;
  Weight weight_lo = 1;
  Weight weight_hi = 1;
  std::uint64_t seed = 1;
  bool strict = false;  // redraw instances with an empty list instead of repairing

  int num_colors() const;
  /// Throws std::invalid_argument describing the first bad field.
  void validate() const;
};

inline constexpr const char* kGeneratorAlgorithm = "mt19937_64";

/// Draw order: edges over pairs (u < v) in lexicographic order, then list
/// memberships in (v, j) order, then weights by color, then one uniform color
/// for each vertex whose list came out empty (non-strict mode).
RawInstance generate_raw(const GenConfig& cfg);
Instance generate(const GenConfig& cfg);

}  // namespace listchroma

#endif  // LISTCHROMA_INSTGEN_HPP
