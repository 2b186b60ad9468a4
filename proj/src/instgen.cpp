#include "listchroma/instgen.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace listchroma {

namespace {

// Fixed conversions, so output only depends on the engine's specified sequence.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t index_draw(std::mt19937_64& rng, std::uint64_t bound) {
  return static_cast<std::uint64_t>(unit_draw(rng) * static_cast<double>(bound));
}

constexpr int kMaxStrictAttempts = 10000;

}  // namespace

int GenConfig::num_colors() const {
  return static_cast<int>(std::floor(c * static_cast<double>(n) + 1e-9));
}

void GenConfig::validate() const {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in (0, 1]");
  if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("q must lie in (0, 1]");
  if (!(c > 0.0)) throw std::invalid_argument("c must be positive");
  if (num_colors() < 1) throw std::invalid_argument("floor(c * n) must be at least 1");
  if (weight_mode == WeightMode::Uniform && (weight_lo < 0 || weight_hi < weight_lo))
    throw std::invalid_argument("uniform weights need 0 <= lo <= hi");
}

RawInstance generate_raw(const GenConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  const int ncolors = cfg.num_colors();
  for (int attempt = 0; attempt < kMaxStrictAttempts; ++attempt) {
    RawInstance raw{Graph(cfg.n), {}, {}};
    for (VertexId u = 0; u < cfg.n; ++u)
      for (VertexId v = u + 1; v < cfg.n; ++v)
        if (unit_draw(rng) < cfg.p) raw.graph.add_edge(u, v);

    raw.lists.resize(static_cast<std::size_t>(cfg.n));
    for (VertexId v = 0; v < cfg.n; ++v)
      for (ColorId j = 0; j < ncolors; ++j)
        if (unit_draw(rng) < cfg.q) raw.lists[v].push_back(j);

    raw.weights.assign(static_cast<std::size_t>(ncolors), 1);
    if (cfg.weight_mode == WeightMode::Uniform)
      for (auto& w : raw.weights)
        w = cfg.weight_lo +
            static_cast<Weight>(index_draw(rng, static_cast<std::uint64_t>(cfg.weight_hi - cfg.weight_lo + 1)));

    bool has_empty = false;
    for (auto& list : raw.lists) {
      if (!list.empty()) continue;
      has_empty = true;
      if (!cfg.strict)
        list.push_back(static_cast<ColorId>(index_draw(rng, static_cast<std::uint64_t>(ncolors))));
    }
    if (!has_empty || !cfg.strict) return raw;
  }
  throw std::runtime_error("strict generation kept drawing empty lists; raise q");
}

Instance generate(const GenConfig& cfg) { return build_instance(generate_raw(cfg)); }

}  // namespace listchroma
