#include "listchroma/core.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace listchroma {

EmptyListError::EmptyListError(VertexId v)
    : std::runtime_error("vertex " + std::to_string(v + 1) + " has an empty list"),
      vertex_(v) {}

Graph::Graph(int n) : adj_(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n))) {}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u + 1));
  adj_[u].set(v);
  adj_[v].set(u);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < size(); ++u)
    for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v))
      out.emplace_back(u, static_cast<VertexId>(v));
  return out;
}

Graph Graph::induced(const VertexSet& keep, std::vector<int>& renaming) const {
  renaming.assign(adj_.size(), -1);
  int next = 0;
  for (std::size_t v = 0; v < adj_.size(); ++v)
    if (keep.test(v)) renaming[v] = next++;
  Graph out(next);
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    if (renaming[u] < 0) continue;
    for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v))
      if (renaming[v] >= 0) out.add_edge(renaming[u], renaming[v]);
  }
  return out;
}

bool Graph::is_stable(const std::vector<VertexId>& set) const {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (set[i] == set[j] || adjacent(set[i], set[j])) return false;
  return true;
}

bool Graph::is_clique(const std::vector<VertexId>& set) const {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (!adjacent(set[i], set[j])) return false;
  return true;
}

bool Instance::in_list(VertexId v, ColorId j) const {
  return std::binary_search(lists[v].begin(), lists[v].end(), j);
}

Weight Instance::total_weight() const {
  Weight sum = 0;
  for (ColorId j : colors) sum += weights[j];
  return sum;
}

namespace {

// Re-derives C from the lists. Lists must already be sorted and unique.
void refresh_colors(Instance& inst) {
  std::vector<char> seen(inst.weights.size(), 0);
  for (const auto& list : inst.lists)
    for (ColorId j : list) seen[j] = 1;
  inst.colors.clear();
  for (std::size_t j = 0; j < seen.size(); ++j)
    if (seen[j]) inst.colors.push_back(static_cast<ColorId>(j));
}

// Keeps the vertices in `keep`, carrying lists along and renaming vertex_of.
std::vector<int> compact(NodeState& state, const VertexSet& keep) {
  std::vector<int> renaming;
  Graph g = state.instance.graph.induced(keep, renaming);
  std::vector<std::vector<ColorId>> lists(static_cast<std::size_t>(g.size()));
  for (std::size_t v = 0; v < renaming.size(); ++v)
    if (renaming[v] >= 0) lists[renaming[v]] = std::move(state.instance.lists[v]);
  state.instance.graph = std::move(g);
  state.instance.lists = std::move(lists);
  for (int& cur : state.vertex_of)
    if (cur >= 0) cur = renaming[cur];
  refresh_colors(state.instance);
  return renaming;
}

}  // namespace

std::vector<int> compose_renaming(const std::vector<int>& first, const std::vector<int>& second) {
  std::vector<int> out(first.size(), -1);
  for (std::size_t i = 0; i < first.size(); ++i)
    if (first[i] >= 0) out[i] = second[first[i]];
  return out;
}

Instance build_instance(Graph graph, std::vector<Weight> weights,
                        std::vector<std::vector<ColorId>> lists) {
  if (static_cast<int>(lists.size()) != graph.size())
    throw std::invalid_argument("one list per vertex is required");
  for (std::size_t j = 0; j < weights.size(); ++j)
    if (weights[j] < 0)
      throw std::invalid_argument("color " + std::to_string(j + 1) + " has a negative weight");
  Instance inst{std::move(graph), std::move(weights), std::move(lists), {}};
  for (std::size_t v = 0; v < inst.lists.size(); ++v) {
    auto& list = inst.lists[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    if (list.empty()) throw EmptyListError(static_cast<VertexId>(v));
    if (list.front() < 0 || list.back() >= inst.color_universe())
      throw std::invalid_argument("list of vertex " + std::to_string(v + 1) +
                                  " references an undeclared color");
  }
  refresh_colors(inst);
  return inst;
}

Instance build_instance(const RawInstance& raw) {
  return build_instance(raw.graph, raw.weights, raw.lists);
}

ColorPartition partition_colors(const Instance& inst) {
  ColorPartition part;
  part.class_of.assign(inst.weights.size(), -1);

  std::vector<std::vector<VertexId>> vertex_sets(inst.weights.size());
  for (VertexId v = 0; v < inst.num_vertices(); ++v)
    for (ColorId j : inst.lists[v]) vertex_sets[j].push_back(v);

  // colors are visited in increasing id, so the first member becomes the rep
  std::map<std::pair<Weight, std::vector<VertexId>>, int> index;
  for (ColorId j : inst.colors) {
    auto key = std::make_pair(inst.weights[j], vertex_sets[j]);
    auto [it, inserted] = index.emplace(std::move(key), static_cast<int>(part.classes.size()));
    if (inserted)
      part.classes.push_back({j, {}, vertex_sets[j], inst.weights[j], false});
    part.classes[it->second].members.push_back(j);
    part.class_of[j] = it->second;
  }
  for (auto& cls : part.classes)
    cls.bounded = static_cast<int>(cls.vertices.size()) >= cls.size() + 1;
  return part;
}

NodeState NodeState::root(Instance inst) {
  NodeState s;
  s.vertex_of.resize(static_cast<std::size_t>(inst.num_vertices()));
  for (std::size_t v = 0; v < s.vertex_of.size(); ++v) s.vertex_of[v] = static_cast<int>(v);
  s.instance = std::move(inst);
  return s;
}

std::optional<Transition> preprocess_singletons(const NodeState& state) {
  NodeState out = state;
  Instance& inst = out.instance;
  const int n = inst.num_vertices();
  VertexSet alive(static_cast<std::size_t>(n));
  alive.set();

  std::vector<std::vector<VertexId>> originals(static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < out.vertex_of.size(); ++r)
    if (out.vertex_of[r] >= 0) originals[out.vertex_of[r]].push_back(static_cast<VertexId>(r));

  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId u = 0; u < n; ++u) {
      if (!alive.test(u) || inst.lists[u].size() != 1) continue;
      const ColorId j = inst.lists[u].front();
      alive.reset(u);
      changed = true;
      for (VertexId r : originals[u]) {
        out.fixed.emplace_back(r, j);
        out.vertex_of[r] = -1;
      }
      out.fixed_weight += inst.weights[j];
      inst.weights[j] = 0;
      const VertexSet& nb = inst.graph.neighbors(u);
      for (auto z = nb.find_first(); z != VertexSet::npos; z = nb.find_next(z)) {
        if (!alive.test(z)) continue;
        auto& list = inst.lists[z];
        auto it = std::lower_bound(list.begin(), list.end(), j);
        if (it != list.end() && *it == j) {
          list.erase(it);
          if (list.empty()) return std::nullopt;
        }
      }
    }
  }
  std::vector<int> renaming = compact(out, alive);
  return Transition{std::move(out), std::move(renaming)};
}

Transition branch_differ(const NodeState& state, VertexId u, VertexId v) {
  Transition t{state, {}};
  t.state.instance.graph.add_edge(u, v);
  t.state.depth += 1;
  t.renaming.resize(static_cast<std::size_t>(state.instance.num_vertices()));
  for (std::size_t i = 0; i < t.renaming.size(); ++i) t.renaming[i] = static_cast<int>(i);
  return t;
}

Transition branch_same(const NodeState& state, VertexId u, VertexId v) {
  NodeState child = state;
  Instance& inst = child.instance;
  const int n = inst.num_vertices();

  Graph g(n);
  for (auto [a, b] : inst.graph.edges()) {
    const VertexId x = a == v ? u : a;
    const VertexId y = b == v ? u : b;
    if (x != y) g.add_edge(x, y);
  }
  inst.graph = std::move(g);

  std::vector<ColorId> common;
  std::set_intersection(inst.lists[u].begin(), inst.lists[u].end(), inst.lists[v].begin(),
                        inst.lists[v].end(), std::back_inserter(common));
  inst.lists[u] = std::move(common);

  for (int& cur : child.vertex_of)
    if (cur == v) cur = u;
  child.depth += 1;

  VertexSet keep(static_cast<std::size_t>(n));
  keep.set();
  keep.reset(v);
  std::vector<int> renaming = compact(child, keep);
  renaming[v] = renaming[u];
  return Transition{std::move(child), std::move(renaming)};
}

Weight coloring_weight(const Instance& root, const std::vector<ColorId>& assignment) {
  std::set<ColorId> active(assignment.begin(), assignment.end());
  Weight sum = 0;
  for (ColorId j : active)
    if (j >= 0 && j < root.color_universe()) sum += root.weights[j];
  return sum;
}

std::optional<std::string> validate_coloring(const Instance& root,
                                             const std::vector<ColorId>& assignment) {
  if (static_cast<int>(assignment.size()) != root.num_vertices())
    return "assignment covers " + std::to_string(assignment.size()) + " vertices, expected " +
           std::to_string(root.num_vertices());
  for (VertexId v = 0; v < root.num_vertices(); ++v)
    if (!root.in_list(v, assignment[v]))
      return "vertex " + std::to_string(v + 1) + " has color " +
             std::to_string(assignment[v] + 1) + " outside its list";
  for (auto [u, v] : root.graph.edges())
    if (assignment[u] == assignment[v])
      return "edge " + std::to_string(u + 1) + " " + std::to_string(v + 1) +
             " is monochromatic with color " + std::to_string(assignment[u] + 1);
  return std::nullopt;
}

ListColoring reconstruct(const Instance& root, const NodeState& state,
                         const std::vector<ColorId>& node_coloring) {
  if (static_cast<int>(node_coloring.size()) != state.instance.num_vertices())
    throw ReconstructionBug("node coloring has the wrong size");
  ListColoring out;
  out.assignment.assign(static_cast<std::size_t>(root.num_vertices()), -1);
  for (std::size_t r = 0; r < state.vertex_of.size(); ++r)
    if (state.vertex_of[r] >= 0) out.assignment[r] = node_coloring[state.vertex_of[r]];
  for (auto [r, j] : state.fixed) out.assignment[r] = j;
  if (auto err = validate_coloring(root, out.assignment))
    throw ReconstructionBug("reconstructed coloring is invalid: " + *err);
  out.weight = coloring_weight(root, out.assignment);
  return out;
}

}  // namespace listchroma
