#include "listchroma/assignment.hpp"

#include <limits>
#include <stdexcept>

namespace listchroma {

std::vector<int> hungarian(const std::vector<std::vector<Weight>>& cost) {
  const int n = static_cast<int>(cost.size());
  for (const auto& row : cost)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("cost matrix must be square");
  constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

  // 1-based arrays; column 0 is the virtual start of each augmenting path
  std::vector<Weight> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<Weight> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      Weight delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const Weight cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> col_of_row(static_cast<std::size_t>(n), -1);
  for (int j = 1; j <= n; ++j)
    if (match[j] > 0) col_of_row[match[j] - 1] = j - 1;
  return col_of_row;
}

bool all_complete(const Instance& inst, const ColorPartition& partition) {
  for (const auto& cls : partition.classes)
    if (!inst.graph.is_clique(cls.vertices)) return false;
  return true;
}

std::optional<std::vector<ColorId>> solve_assignment(const Instance& inst, Weight big_m) {
  const int n = inst.num_vertices();
  const int c = static_cast<int>(inst.colors.size());
  if (n > c) return std::nullopt;
  if (n == 0) return std::vector<ColorId>{};

  std::vector<std::vector<Weight>> cost(static_cast<std::size_t>(c),
                                        std::vector<Weight>(static_cast<std::size_t>(c), 0));
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < c; ++j) {
      const ColorId color = inst.colors[j];
      cost[v][j] = inst.in_list(v, color) ? inst.weights[color] : big_m;
    }

  const std::vector<int> match = hungarian(cost);
  std::vector<ColorId> coloring(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const ColorId color = inst.colors[match[v]];
    if (!inst.in_list(v, color)) return std::nullopt;
    coloring[v] = color;
  }
  return coloring;
}

}  // namespace listchroma
