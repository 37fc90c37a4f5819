#include "divgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

namespace divgraph {

namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
}  // namespace

std::size_t SimpleGraph::add_vertex(const Label& label) {
  auto it = index_.find(label);
  if (it != index_.end()) {
    return it->second;
  }
  std::size_t v = labels_.size();
  labels_.push_back(label);
  index_.emplace(label, v);
  adjacency_.emplace_back();
  return v;
}

void SimpleGraph::add_edge(const Label& u, const Label& v) {
  if (u == v) {
    throw std::invalid_argument("SimpleGraph: self-loop at '" + u + "'");
  }
  std::size_t a = add_vertex(u);
  std::size_t b = add_vertex(v);
  auto& list_a = adjacency_[a];
  auto pos = std::lower_bound(list_a.begin(), list_a.end(), b);
  if (pos != list_a.end() && *pos == b) {
    return;  // duplicate edge
  }
  list_a.insert(pos, b);
  auto& list_b = adjacency_[b];
  list_b.insert(std::lower_bound(list_b.begin(), list_b.end(), a), a);
  ++edge_count_;
}

bool SimpleGraph::has_vertex(const Label& label) const {
  return index_.find(label) != index_.end();
}

bool SimpleGraph::has_edge(const Label& u, const Label& v) const {
  auto a = index_.find(u);
  auto b = index_.find(v);
  if (a == index_.end() || b == index_.end()) {
    return false;
  }
  return adjacent(a->second, b->second);
}

std::size_t SimpleGraph::index_of(const Label& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw UnknownVertexError("unknown vertex '" + label + "'");
  }
  return it->second;
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<Label, Label>> SimpleGraph::edges() const {
  std::vector<std::pair<Label, Label>> result;
  result.reserve(edge_count_);
  for (std::size_t u = 0; u < labels_.size(); ++u) {
    for (std::size_t v : adjacency_[u]) {
      if (u < v) {
        result.emplace_back(labels_[u], labels_[v]);
      }
    }
  }
  return result;
}

SimpleGraph SimpleGraph::induced(const std::vector<Label>& subset) const {
  SimpleGraph sub;
  for (const Label& label : subset) {
    index_of(label);  // validate
    sub.add_vertex(label);
  }
  for (const Label& u : subset) {
    for (std::size_t w : adjacency_[index_of(u)]) {
      const Label& v = labels_[w];
      if (sub.has_vertex(v) && index_of(u) < w) {
        sub.add_edge(u, v);
      }
    }
  }
  return sub;
}

bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return false;
  }
  for (const Label& label : a.labels_) {
    if (!b.has_vertex(label)) {
      return false;
    }
  }
  for (const auto& [u, v] : a.edges()) {
    if (!b.has_edge(u, v)) {
      return false;
    }
  }
  return true;
}

namespace {

// BFS distances from source; kNone marks unreachable vertices.
std::vector<std::size_t> bfs_distances(const SimpleGraph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.vertex_count(), kNone);
  std::deque<std::size_t> queue;
  dist[source] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w : g.neighbors(u)) {
      if (dist[w] == kNone) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<std::vector<Label>> components(const SimpleGraph& g) {
  std::vector<std::vector<Label>> blocks;
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::size_t start = 0; start < g.vertex_count(); ++start) {
    if (seen[start]) {
      continue;
    }
    std::vector<std::size_t> member_indices;
    std::deque<std::size_t> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      member_indices.push_back(u);
      for (std::size_t w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(member_indices.begin(), member_indices.end());
    std::vector<Label> block;
    block.reserve(member_indices.size());
    for (std::size_t v : member_indices) {
      block.push_back(g.label_of(v));
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::optional<std::size_t> distance(const SimpleGraph& g, const Label& u, const Label& v) {
  std::size_t a = g.index_of(u);
  std::size_t b = g.index_of(v);
  std::size_t d = bfs_distances(g, a)[b];
  if (d == kNone) {
    return std::nullopt;
  }
  return d;
}

std::optional<std::size_t> diameter(const SimpleGraph& g) {
  if (g.vertex_count() == 0) {
    return std::nullopt;
  }
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t d : bfs_distances(g, v)) {
      if (d != kNone) {
        best = std::max(best, d);
      }
    }
  }
  return best;
}

std::optional<std::size_t> girth(const SimpleGraph& g) {
  // BFS from every vertex; each non-tree edge (u,w) closes a walk of length
  // dist[u]+dist[w]+1 that contains a cycle no longer than itself, and a BFS
  // rooted on a shortest cycle attains its exact length.
  std::size_t best = kNone;
  for (std::size_t source = 0; source < g.vertex_count(); ++source) {
    std::vector<std::size_t> dist(g.vertex_count(), kNone);
    std::vector<std::size_t> parent(g.vertex_count(), kNone);
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : g.neighbors(u)) {
        if (dist[w] == kNone) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kNone) {
    return std::nullopt;
  }
  return best;
}

namespace {

// Vertex mask of the 2-core: repeatedly strip vertices of degree <= 1.
std::vector<char> two_core_mask(const SimpleGraph& g) {
  std::vector<char> alive(g.vertex_count(), 1);
  std::vector<std::size_t> deg(g.vertex_count());
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) {
      queue.push_back(v);
      alive[v] = 0;
    }
  }
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w : g.neighbors(u)) {
      if (alive[w] && --deg[w] <= 1) {
        alive[w] = 0;
        queue.push_back(w);
      }
    }
  }
  return alive;
}

bool is_bipartite_within(const SimpleGraph& g, const std::vector<char>& alive) {
  std::vector<int> color(g.vertex_count(), -1);
  for (std::size_t start = 0; start < g.vertex_count(); ++start) {
    if (!alive[start] || color[start] != -1) {
      continue;
    }
    color[start] = 0;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : g.neighbors(u)) {
        if (!alive[w]) {
          continue;
        }
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Restricted BFS distances used to prune the fixed-length cycle search.
std::vector<std::size_t> bfs_within(const SimpleGraph& g, std::size_t source,
                                    const std::vector<char>& allowed) {
  std::vector<std::size_t> dist(g.vertex_count(), kNone);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w : g.neighbors(u)) {
      if (allowed[w] && dist[w] == kNone) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

struct CycleSearch {
  const SimpleGraph& g;
  const std::vector<char>& alive;
  std::size_t anchor = 0;
  std::size_t target_length = 0;
  std::vector<char> on_path{};
  std::vector<std::size_t> dist_to_anchor{};

  // Extends a simple path anchored at the minimum vertex of the cycle.
  bool extend(std::size_t u, std::size_t depth) {
    if (depth == target_length - 1) {
      return g.adjacent(u, anchor);
    }
    for (std::size_t w : g.neighbors(u)) {
      if (!alive[w] || w <= anchor || on_path[w]) {
        continue;
      }
      if (dist_to_anchor[w] == kNone || dist_to_anchor[w] > target_length - depth - 1) {
        continue;
      }
      on_path[w] = 1;
      if (extend(w, depth + 1)) {
        return true;
      }
      on_path[w] = 0;
    }
    return false;
  }
};

bool has_cycle_of_length(const SimpleGraph& g, const std::vector<char>& alive,
                         std::size_t length) {
  for (std::size_t anchor = 0; anchor < g.vertex_count(); ++anchor) {
    if (!alive[anchor]) {
      continue;
    }
    CycleSearch search{g, alive};
    search.anchor = anchor;
    search.target_length = length;
    search.on_path.assign(g.vertex_count(), 0);
    search.on_path[anchor] = 1;
    // Vertices below the anchor are excluded, so each cycle is looked for
    // from its minimum vertex only.
    std::vector<char> above(g.vertex_count(), 0);
    for (std::size_t v = anchor; v < g.vertex_count(); ++v) {
      above[v] = alive[v];
    }
    search.dist_to_anchor = bfs_within(g, anchor, above);
    if (search.extend(anchor, 0)) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::size_t> girth_gt4(const SimpleGraph& g) {
  std::vector<char> core = two_core_mask(g);
  std::size_t core_size = 0;
  for (char c : core) {
    core_size += static_cast<std::size_t>(c);
  }
  if (core_size < 5) {
    return std::nullopt;
  }
  bool bipartite = is_bipartite_within(g, core);
  for (std::size_t length = 5; length <= core_size; ++length) {
    if (bipartite && length % 2 == 1) {
      continue;
    }
    if (has_cycle_of_length(g, core, length)) {
      return length;
    }
  }
  return std::nullopt;
}

ComponentShape classify_component(const SimpleGraph& g, const std::vector<Label>& block) {
  std::size_t n = block.size();
  std::size_t edge_twice = 0;
  std::size_t max_degree = 0;
  std::size_t degree_two = 0;
  for (const Label& label : block) {
    std::size_t d = g.degree(g.index_of(label));
    edge_twice += d;
    max_degree = std::max(max_degree, d);
    if (d == 2) {
      ++degree_two;
    }
  }
  std::size_t edges = edge_twice / 2;
  if (max_degree <= 2 && edges + 1 == n) {
    return ComponentShape::Path;
  }
  if (n == 4 && degree_two == 4 && edges == 4) {
    return ComponentShape::Cycle4;
  }
  return ComponentShape::Other;
}

namespace {

struct SubgraphSearch {
  const SimpleGraph& host;
  const SimpleGraph& pattern;
  bool induced;
  const VertexCompat& compat;
  std::vector<std::size_t> order;       // pattern vertices in placement order
  std::vector<std::size_t> placed_at;   // pattern index -> host index or kNone
  std::vector<char> host_used;

  bool place(std::size_t depth) {
    if (depth == order.size()) {
      return true;
    }
    std::size_t p = order[depth];
    for (std::size_t h = 0; h < host.vertex_count(); ++h) {
      if (host_used[h] || host.degree(h) < pattern.degree(p)) {
        continue;
      }
      if (compat && !compat(pattern.label_of(p), host.label_of(h))) {
        continue;
      }
      bool consistent = true;
      for (std::size_t q = 0; q < pattern.vertex_count() && consistent; ++q) {
        if (placed_at[q] == kNone) {
          continue;
        }
        bool pattern_edge = pattern.adjacent(p, q);
        bool host_edge = host.adjacent(h, placed_at[q]);
        if (pattern_edge && !host_edge) {
          consistent = false;
        } else if (induced && !pattern_edge && host_edge) {
          consistent = false;
        }
      }
      if (!consistent) {
        continue;
      }
      placed_at[p] = h;
      host_used[h] = 1;
      if (place(depth + 1)) {
        return true;
      }
      placed_at[p] = kNone;
      host_used[h] = 0;
    }
    return false;
  }
};

// Placement order: highest degree first, then greedily the vertex with the
// most already-ordered neighbours, so adjacency constraints bind early.
std::vector<std::size_t> placement_order(const SimpleGraph& pattern) {
  std::size_t n = pattern.vertex_count();
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<char> chosen(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = kNone;
    std::size_t best_attached = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (chosen[v]) {
        continue;
      }
      std::size_t attached = 0;
      for (std::size_t w : pattern.neighbors(v)) {
        attached += static_cast<std::size_t>(chosen[w]);
      }
      if (best == kNone || attached > best_attached ||
          (attached == best_attached && pattern.degree(v) > pattern.degree(best))) {
        best = v;
        best_attached = attached;
      }
    }
    chosen[best] = 1;
    order.push_back(best);
  }
  return order;
}

}  // namespace

std::optional<Embedding> find_subgraph(const SimpleGraph& host, const SimpleGraph& pattern,
                                       bool induced, const VertexCompat& compat) {
  if (pattern.vertex_count() > host.vertex_count() ||
      pattern.edge_count() > host.edge_count()) {
    return std::nullopt;
  }
  SubgraphSearch search{host, pattern, induced, compat,
                        placement_order(pattern),
                        std::vector<std::size_t>(pattern.vertex_count(), kNone),
                        std::vector<char>(host.vertex_count(), 0)};
  if (!search.place(0)) {
    return std::nullopt;
  }
  Embedding embedding;
  embedding.induced = induced;
  for (std::size_t p = 0; p < pattern.vertex_count(); ++p) {
    embedding.map.emplace(pattern.label_of(p), host.label_of(search.placed_at[p]));
  }
  return embedding;
}

namespace {

bool extend_clique(const SimpleGraph& g, std::size_t k, std::size_t next,
                   std::vector<std::size_t>& chosen,
                   std::vector<std::vector<Label>>* all,
                   std::optional<std::vector<Label>>* first) {
  if (chosen.size() == k) {
    std::vector<Label> clique;
    clique.reserve(k);
    for (std::size_t v : chosen) {
      clique.push_back(g.label_of(v));
    }
    if (all != nullptr) {
      all->push_back(std::move(clique));
      return false;  // keep enumerating
    }
    *first = std::move(clique);
    return true;
  }
  for (std::size_t v = next; v < g.vertex_count(); ++v) {
    if (g.vertex_count() - v < k - chosen.size()) {
      break;
    }
    bool joined = true;
    for (std::size_t u : chosen) {
      if (!g.adjacent(u, v)) {
        joined = false;
        break;
      }
    }
    if (!joined) {
      continue;
    }
    chosen.push_back(v);
    if (extend_clique(g, k, v + 1, chosen, all, first)) {
      return true;
    }
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Label>> find_clique(const SimpleGraph& g, std::size_t k) {
  if (k == 0) {
    throw std::invalid_argument("find_clique: k must be at least 1");
  }
  std::optional<std::vector<Label>> first;
  std::vector<std::size_t> chosen;
  extend_clique(g, k, 0, chosen, nullptr, &first);
  return first;
}

std::vector<std::vector<Label>> cliques_of_size(const SimpleGraph& g, std::size_t k) {
  if (k == 0) {
    throw std::invalid_argument("cliques_of_size: k must be at least 1");
  }
  std::vector<std::vector<Label>> all;
  std::vector<std::size_t> chosen;
  std::optional<std::vector<Label>> unused;
  extend_clique(g, k, 0, chosen, &all, &unused);
  return all;
}

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return false;
  }
  auto degree_sequence = [](const SimpleGraph& g) {
    std::vector<std::size_t> seq(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      seq[v] = g.degree(v);
    }
    std::sort(seq.begin(), seq.end());
    return seq;
  };
  if (degree_sequence(a) != degree_sequence(b)) {
    return false;
  }
  // An induced embedding between graphs of equal size is a bijection that
  // preserves adjacency and non-adjacency, i.e. an isomorphism.
  VertexCompat same_degree = [&](const Label& pv, const Label& hv) {
    return b.degree(b.index_of(pv)) == a.degree(a.index_of(hv));
  };
  return find_subgraph(a, b, /*induced=*/true, same_degree).has_value();
}

std::string to_dot(const SimpleGraph& g, const std::string& name) {
  auto quote = [](const Label& label) {
    std::string out = "\"";
    for (char c : label) {
      if (c == '"' || c == '\\') {
        out.push_back('\\');
      }
      out.push_back(c);
    }
    out.push_back('"');
    return out;
  };
  std::ostringstream dot;
  dot << "graph " << name << " {\n";
  for (const Label& label : g.vertices()) {
    dot << "  " << quote(label) << ";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    dot << "  " << quote(u) << " -- " << quote(v) << ";\n";
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace divgraph
