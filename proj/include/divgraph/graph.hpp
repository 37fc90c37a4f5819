#ifndef DIVGRAPH_GRAPH_HPP
#define DIVGRAPH_GRAPH_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "divgraph/errors.hpp"

namespace divgraph {

// Vertex labels are opaque ordered tokens. The divisor layer tags its labels
// ("p:2", "n:12") so prime and number vertices of equal value never collide;
// this kernel never interprets the text.
using Label = std::string;

// Undirected simple graph: no self-loops, no duplicate edges. Vertices keep
// insertion order, which makes every traversal below deterministic.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  // Idempotent; returns the vertex index.
  std::size_t add_vertex(const Label& label);
  // Adds missing endpoints. Throws std::invalid_argument on a self-loop;
  // duplicate edges are ignored.
  void add_edge(const Label& u, const Label& v);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool has_vertex(const Label& label) const;
  bool has_edge(const Label& u, const Label& v) const;

  std::size_t index_of(const Label& label) const;  // throws UnknownVertexError
  const Label& label_of(std::size_t v) const { return labels_[v]; }
  const std::vector<Label>& vertices() const { return labels_; }

  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  bool adjacent(std::size_t u, std::size_t v) const;

  // Edges as label pairs, ordered by (lower index, higher index).
  std::vector<std::pair<Label, Label>> edges() const;

  SimpleGraph induced(const std::vector<Label>& subset) const;

  // Equal vertex sets and equal edge sets; insertion order is irrelevant.
  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b);

 private:
  std::vector<Label> labels_;
  std::unordered_map<Label, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adjacency_;  // each list sorted ascending
  std::size_t edge_count_ = 0;
};

// Injective map from pattern vertices into a host, witnessing a (possibly
// induced) subgraph occurrence.
struct Embedding {
  std::map<Label, Label> map;  // pattern label -> host label
  bool induced = false;
};

// Optional per-vertex filter for subgraph search: pattern vertex may be
// placed on host vertex only when the callback approves.
using VertexCompat = std::function<bool(const Label& pattern_vertex, const Label& host_vertex)>;

// Connected components; blocks ordered by smallest vertex index, vertices
// inside a block in index order.
std::vector<std::vector<Label>> components(const SimpleGraph& g);

// Length of a shortest u-v path; nullopt when u and v lie in different
// components. Throws UnknownVertexError for absent labels.
std::optional<std::size_t> distance(const SimpleGraph& g, const Label& u, const Label& v);

// Maximum distance between vertices in the same component, maximized over
// components. nullopt only for the graph with zero vertices; a graph whose
// components are all singletons has diameter 0.
std::optional<std::size_t> diameter(const SimpleGraph& g);

// Length of the shortest cycle; nullopt when the graph is a forest.
std::optional<std::size_t> girth(const SimpleGraph& g);

// Minimum length over cycles of length >= 5 (in bipartite hosts necessarily
// even >= 6); nullopt when every cycle is a triangle or quadrilateral or the
// graph is acyclic. Iterative-deepening exhaustive search on the 2-core.
std::optional<std::size_t> girth_gt4(const SimpleGraph& g);

enum class ComponentShape { Path, Cycle4, Other };

// Classifies one block of components(g). A single vertex counts as a path.
ComponentShape classify_component(const SimpleGraph& g, const std::vector<Label>& block);

// Deterministic backtracking search for pattern inside host. With
// induced=true every non-edge of the pattern must map to a non-edge.
std::optional<Embedding> find_subgraph(const SimpleGraph& host, const SimpleGraph& pattern,
                                       bool induced, const VertexCompat& compat = {});

// First k pairwise-adjacent vertex set in index order, or nullopt.
std::optional<std::vector<Label>> find_clique(const SimpleGraph& g, std::size_t k);

// Every k-clique, each listed in index order.
std::vector<std::vector<Label>> cliques_of_size(const SimpleGraph& g, std::size_t k);

// Exact isomorphism test by backtracking with degree-sequence pruning;
// intended for small graphs (<= 16 vertices or so).
bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// Graphviz DOT text: one line per vertex, one line per edge.
std::string to_dot(const SimpleGraph& g, const std::string& name = "G");

}  // namespace divgraph

#endif  // DIVGRAPH_GRAPH_HPP
