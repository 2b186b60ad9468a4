#ifndef LISTCHROMA_CORE_HPP
#define LISTCHROMA_CORE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace listchroma {

using VertexId = int;
using ColorId = int;
using Weight = std::int64_t;
using VertexSet = boost::dynamic_bitset<>;

class EmptyListError : public std::runtime_error {
 public:
  explicit EmptyListError(VertexId v);
  VertexId vertex() const { return vertex_; }

 private:
  VertexId vertex_;
};

class ReconstructionBug : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int size() const { return static_cast<int>(adj_.size()); }
  bool adjacent(VertexId u, VertexId v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(VertexId v) const { return adj_[v]; }

  /// Self-loops are rejected; adding an existing edge is a no-op.
  void add_edge(VertexId u, VertexId v);
  std::size_t edge_count() const;
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  /// Subgraph induced by `keep`; `renaming[old]` is the new id or -1.
  Graph induced(const VertexSet& keep, std::vector<int>& renaming) const;

  bool is_stable(const std::vector<VertexId>& set) const;
  bool is_clique(const std::vector<VertexId>& set) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
};

/// A list-coloring instance. Color ids index `weights` and stay stable under
/// every transformation; `colors` holds the active set C = union of lists.
struct Instance {
  Graph graph;
  std::vector<Weight> weights;
  std::vector<std::vector<ColorId>> lists;
  std::vector<ColorId> colors;

  int num_vertices() const { return graph.size(); }
  int color_universe() const { return static_cast<int>(weights.size()); }
  bool in_list(VertexId v, ColorId j) const;
  Weight total_weight() const;
};

/// Instance data as read from a file or drawn by the generator, before
/// normalization. Lists may be unsorted or empty.
struct RawInstance {
  Graph graph;
  std::vector<Weight> weights;
  std::vector<std::vector<ColorId>> lists;

  friend bool operator==(const RawInstance&, const RawInstance&) = default;
};

/// Normalizes lists (sorted, deduplicated) and drops colors that occur in no
/// list. Throws EmptyListError for a vertex with an empty list and
/// std::invalid_argument for out-of-range colors or negative weights.
Instance build_instance(Graph graph, std::vector<Weight> weights,
                        std::vector<std::vector<ColorId>> lists);
Instance build_instance(const RawInstance& raw);

struct ColorClass {
  ColorId rep;
  std::vector<ColorId> members;
  std::vector<VertexId> vertices;
  Weight weight;
  bool bounded;

  int size() const { return static_cast<int>(members.size()); }
};

struct ColorPartition {
  std::vector<ColorClass> classes;
  std::vector<int> class_of;  // color id -> class index, -1 when inactive

  int class_index(ColorId rep) const { return class_of[rep]; }
};

/// Groups indistinguishable colors: same weight and same vertex set V_j.
ColorPartition partition_colors(const Instance& inst);

/// An instance together with the transformations that produced it from the
/// root: vertex merges, vertices fixed by singleton lists, and the weight of
/// colors already committed by fixing.
struct NodeState {
  Instance instance;
  std::vector<int> vertex_of;  // root vertex -> current vertex, -1 when fixed
  std::vector<std::pair<VertexId, ColorId>> fixed;  // root vertex, color
  Weight fixed_weight = 0;
  int depth = 0;

  static NodeState root(Instance inst);
};

/// A state together with the map from the parent's vertex ids to its own.
struct Transition {
  NodeState state;
  std::vector<int> renaming;
};

/// Fixes singleton-list vertices to fixpoint. A fixed color is charged once in
/// fixed_weight and then costs nothing inside the residual instance.
/// Returns nullopt when a neighbor's list runs empty.
std::optional<Transition> preprocess_singletons(const NodeState& state);

/// Applies `first` then `second`; -1 entries propagate.
std::vector<int> compose_renaming(const std::vector<int>& first, const std::vector<int>& second);

/// Child with the extra edge (u,v).
Transition branch_differ(const NodeState& state, VertexId u, VertexId v);

/// Child with v merged into u: N(u) |= N(v), L(u) = L(u) & L(v).
Transition branch_same(const NodeState& state, VertexId u, VertexId v);

struct ListColoring {
  std::vector<ColorId> assignment;  // indexed by root vertex
  Weight weight = 0;
};

/// Sum of the weights of the distinct colors in `assignment`.
Weight coloring_weight(const Instance& root, const std::vector<ColorId>& assignment);

/// Independent validity check; returns a description of the first violation.
std::optional<std::string> validate_coloring(const Instance& root,
                                             const std::vector<ColorId>& assignment);

/// Lifts a coloring of the node's residual instance back to the root.
/// Throws ReconstructionBug when the result is not a valid list coloring.
ListColoring reconstruct(const Instance& root, const NodeState& state,
                         const std::vector<ColorId>& node_coloring);

}  // namespace listchroma

#endif  // LISTCHROMA_CORE_HPP
