// Independent reference implementations for tests. They read solver data
// structures but never call solver algorithms.
#ifndef LISTCHROMA_TESTS_SUPPORT_HPP
#define LISTCHROMA_TESTS_SUPPORT_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "listchroma/core.hpp"
#include "listchroma/instgen.hpp"
#include "listchroma/master.hpp"

namespace lctest {

using listchroma::ColorId;
using listchroma::Graph;
using listchroma::Instance;
using listchroma::RawInstance;
using listchroma::VertexId;
using listchroma::Weight;

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Instance make_instance(int n, const std::vector<std::pair<int, int>>& edges,
                              std::vector<Weight> weights, std::vector<std::vector<ColorId>> lists) {
  return listchroma::build_instance(make_graph(n, edges), std::move(weights), std::move(lists));
}

inline std::vector<std::vector<ColorId>> full_lists(int n, int ncolors) {
  std::vector<ColorId> all(static_cast<std::size_t>(ncolors));
  for (int j = 0; j < ncolors; ++j) all[j] = j;
  return std::vector<std::vector<ColorId>>(static_cast<std::size_t>(n), all);
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, i + 5);
  }
  return g;
}

// K_{3,3}; both sides carry lists {1,2}, {1,3}, {2,3}. Each side needs two
// colors, and the sides must use disjoint color sets out of three.
inline Instance k33_mirrored() {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) edges.emplace_back(a, b);
  const std::vector<std::vector<ColorId>> side{{0, 1}, {0, 2}, {1, 2}};
  std::vector<std::vector<ColorId>> lists = side;
  lists.insert(lists.end(), side.begin(), side.end());
  return make_instance(6, edges, {1, 1, 1}, lists);
}

// Minimum over the full product of lists, no pruning. nullopt = infeasible.
inline std::optional<Weight> enumerate_optimum(const Instance& inst) {
  const int n = inst.num_vertices();
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  std::optional<Weight> best;
  std::vector<ColorId> a(static_cast<std::size_t>(n));
  for (;;) {
    for (int v = 0; v < n; ++v) a[v] = inst.lists[v][idx[v]];
    bool proper = true;
    for (auto [u, v] : inst.graph.edges())
      if (a[u] == a[v]) {
        proper = false;
        break;
      }
    if (proper) {
      std::set<ColorId> used(a.begin(), a.end());
      Weight w = 0;
      for (ColorId j : used) w += inst.weights[j];
      if (!best || w < *best) best = w;
    }
    int v = 0;
    while (v < n && ++idx[v] == inst.lists[v].size()) idx[v++] = 0;
    if (v == n) break;
  }
  return best;
}

// Maximum pi-weight over all stable subsets of `vertices` (2^|vertices|).
inline double exhaustive_mwss(const Graph& g, const std::vector<VertexId>& vertices,
                              const std::vector<double>& pi) {
  const std::size_t k = vertices.size();
  double best = 0.0;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    bool stable = true;
    double w = 0.0;
    for (std::size_t i = 0; i < k && stable; ++i) {
      if (!(mask >> i & 1u)) continue;
      w += pi[vertices[i]];
      for (std::size_t j = i + 1; j < k; ++j)
        if ((mask >> j & 1u) && g.adjacent(vertices[i], vertices[j])) {
          stable = false;
          break;
        }
    }
    if (stable) best = std::max(best, w);
  }
  return best;
}

// min c'x  s.t.  sum_{j: r in rows[j]} x_j  (>= or <=)  rhs[r],  x >= 0,
// by enumerating every basis of the equality form with one slack per row.
struct BruteLp {
  std::vector<bool> at_least;  // per row
  std::vector<double> rhs;
  std::vector<double> cost;
  std::vector<std::vector<int>> rows;  // per column
};

inline std::optional<double> brute_lp_optimum(const BruteLp& lp) {
  const int m = static_cast<int>(lp.rhs.size());
  const int ncols = static_cast<int>(lp.cost.size());
  const int total = ncols + m;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, total);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(total);
  Eigen::VectorXd b(m);
  for (int j = 0; j < ncols; ++j) {
    c(j) = lp.cost[j];
    for (int r : lp.rows[j]) a(r, j) = 1.0;
  }
  for (int r = 0; r < m; ++r) {
    a(r, ncols + r) = lp.at_least[r] ? -1.0 : 1.0;
    b(r) = lp.rhs[r];
  }

  std::optional<double> best;
  std::vector<int> pick(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) pick[i] = i;
  for (;;) {
    Eigen::MatrixXd basis(m, m);
    for (int i = 0; i < m; ++i) basis.col(i) = a.col(pick[i]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);
    if (lu.isInvertible()) {
      const Eigen::VectorXd x = lu.solve(b);
      if ((x.array() >= -1e-9).all()) {
        double obj = 0.0;
        for (int i = 0; i < m; ++i) obj += c(pick[i]) * x(i);
        if (!best || obj < *best) best = obj;
      }
    }
    int i = m - 1;
    while (i >= 0 && pick[i] == total - m + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

inline listchroma::GenConfig gen_config(int n, double p, double c, double q, std::uint64_t seed,
                                        bool random_weights = false) {
  listchroma::GenConfig cfg;
  cfg.n = n;
  cfg.p = p;
  cfg.c = c;
  cfg.q = q;
  cfg.seed = seed;
  if (random_weights) {
    cfg.weight_mode = listchroma::WeightMode::Uniform;
    cfg.weight_lo = 1;
    cfg.weight_hi = 9;
  }
  return cfg;
}

// Fixes the pool columns with |S| >= 2 at value > 1/2 and finds the cheapest
// 0/1 completion from singleton pool columns (dummies included) that covers the
// rest within the remaining class capacities. Returns the total cost.
inline std::optional<double> enumerate_singleton_completion(const listchroma::MasterProblem& mp,
                                                            const std::vector<double>& primal) {
  const auto& cols = mp.columns();
  const auto& part = mp.partition();
  const int n = mp.instance().num_vertices();
  double fixed = 0.0;
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  std::vector<int> room(part.classes.size());
  for (std::size_t k = 0; k < part.classes.size(); ++k)
    room[k] = part.classes[k].bounded ? part.classes[k].size() : n;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i].vertices.size() < 2 || primal[i] <= 0.5) continue;
    fixed += static_cast<double>(cols[i].cost);
    for (VertexId v : cols[i].vertices) covered[v] = 1;
    --room[part.class_of[cols[i].class_rep]];
  }
  std::vector<VertexId> open;
  for (VertexId v = 0; v < n; ++v)
    if (!covered[v]) open.push_back(v);
  std::vector<std::vector<std::size_t>> options(open.size());
  for (std::size_t t = 0; t < open.size(); ++t)
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (cols[i].vertices.size() == 1 && cols[i].vertices[0] == open[t]) options[t].push_back(i);

  std::optional<double> best;
  auto rec = [&](auto&& self, std::size_t t, double cost) -> void {
    if (best && cost >= *best) return;
    if (t == open.size()) {
      best = cost;
      return;
    }
    for (std::size_t i : options[t]) {
      const int k = cols[i].dummy() ? -1 : part.class_of[cols[i].class_rep];
      if (k >= 0 && room[k] == 0) continue;
      if (k >= 0) --room[k];
      self(self, t + 1, cost + static_cast<double>(cols[i].cost));
      if (k >= 0) ++room[k];
    }
  };
  rec(rec, 0, 0.0);
  if (!best) return std::nullopt;
  return fixed + *best;
}

}  // namespace lctest

#endif  // LISTCHROMA_TESTS_SUPPORT_HPP
