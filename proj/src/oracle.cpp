#include "listchroma/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace listchroma {

namespace {

class Backtracker {
 public:
  explicit Backtracker(const Instance& inst)
      : inst_(inst),
        n_(inst.num_vertices()),
        color_(static_cast<std::size_t>(n_), -1),
        uses_(inst.weights.size(), 0),
        order_(static_cast<std::size_t>(n_)) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) {
      return inst_.graph.neighbors(a).count() > inst_.graph.neighbors(b).count();
    });
    // one greedy maximal clique through each vertex
    for (VertexId v = 0; v < n_; ++v) {
      std::vector<VertexId> q{v};
      for (VertexId u : order_) {
        if (u == v) continue;
        if (std::all_of(q.begin(), q.end(), [&](VertexId x) { return inst_.graph.adjacent(u, x); }))
          q.push_back(u);
      }
      if (q.size() >= 2) cliques_.push_back(std::move(q));
    }
  }

  OracleResult run() {
    descend(0, 0);
    OracleResult res;
    res.assignments_explored = explored_;
    if (best_) res.witness = ListColoring{*best_, best_weight_};
    return res;
  }

 private:
  bool available(VertexId w, ColorId j) const {
    const VertexSet& nb = inst_.graph.neighbors(w);
    for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u))
      if (color_[u] == j) return false;
    return true;
  }

  // Extra weight every completion must still pay, or nullopt when none exists.
  std::optional<Weight> completion_bound(std::size_t from) const {
    Weight need = 0;
    // an uncolored vertex with no usable active color forces a new one
    for (std::size_t i = from; i < order_.size(); ++i) {
      const VertexId w = order_[i];
      bool any = false;
      Weight cheapest = -1;
      for (ColorId j : inst_.lists[w]) {
        if (!available(w, j)) continue;
        any = true;
        if (uses_[j] > 0) {
          cheapest = 0;
          break;
        }
        if (cheapest < 0 || inst_.weights[j] < cheapest) cheapest = inst_.weights[j];
      }
      if (!any) return std::nullopt;
      need = std::max(need, cheapest);
    }
    // uncolored clique members need distinct colors not already on the clique
    const std::size_t nc = inst_.weights.size();
    std::vector<char> on_clique(nc), offered(nc);
    std::vector<Weight> fresh;
    for (const auto& q : cliques_) {
      std::fill(on_clique.begin(), on_clique.end(), 0);
      std::fill(offered.begin(), offered.end(), 0);
      int open = 0;
      for (VertexId x : q)
        if (color_[x] >= 0) on_clique[color_[x]] = 1;
      for (VertexId x : q) {
        if (color_[x] >= 0) continue;
        ++open;
        for (ColorId j : inst_.lists[x])
          if (!on_clique[j]) offered[j] = 1;
      }
      if (open == 0) continue;
      int reusable = 0;
      fresh.clear();
      for (std::size_t j = 0; j < nc; ++j) {
        if (!offered[j]) continue;
        if (uses_[j] > 0)
          ++reusable;
        else
          fresh.push_back(inst_.weights[j]);
      }
      const int missing = open - reusable;
      if (missing <= 0) continue;
      if (missing > static_cast<int>(fresh.size())) return std::nullopt;
      std::partial_sort(fresh.begin(), fresh.begin() + missing, fresh.end());
      need = std::max(need, std::accumulate(fresh.begin(), fresh.begin() + missing, Weight{0}));
    }
    return need;
  }

  void descend(std::size_t idx, Weight active) {
    if (best_ && active >= best_weight_) return;
    if (idx == order_.size()) {
      ++explored_;
      best_ = color_;
      best_weight_ = active;
      return;
    }
    const auto need = completion_bound(idx);
    if (!need || (best_ && active + *need >= best_weight_)) return;
    const VertexId v = order_[idx];
    // active colors first: they cost nothing and find good incumbents early
    for (int pass = 0; pass < 2; ++pass)
      for (ColorId j : inst_.lists[v]) {
        if ((uses_[j] > 0) != (pass == 0) || !available(v, j)) continue;
        color_[v] = j;
        const Weight add = uses_[j]++ == 0 ? inst_.weights[j] : 0;
        descend(idx + 1, active + add);
        --uses_[j];
        color_[v] = -1;
      }
  }

  const Instance& inst_;
  int n_;
  std::vector<ColorId> color_;
  std::vector<int> uses_;
  std::vector<VertexId> order_;
  std::vector<std::vector<VertexId>> cliques_;
  std::optional<std::vector<ColorId>> best_;
  Weight best_weight_ = 0;
  std::uint64_t explored_ = 0;
};

}  // namespace

OracleResult oracle_solve(const Instance& inst, int cap) {
  if (inst.num_vertices() > cap)
    throw TooLarge("oracle is limited to " + std::to_string(cap) + " vertices, got " +
                   std::to_string(inst.num_vertices()));
  return Backtracker(inst).run();
}

}  // namespace listchroma
