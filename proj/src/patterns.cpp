#include "divgraph/patterns.hpp"

#include <algorithm>
#include <string>

#include "divgraph/matching.hpp"

namespace divgraph {

SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g;
  for (std::size_t i = 1; i <= n; ++i) {
    g.add_vertex("k" + std::to_string(i));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      g.add_edge("k" + std::to_string(i), "k" + std::to_string(j));
    }
  }
  return g;
}

SimpleGraph cycle_graph(std::size_t n) {
  if (n < 3) {
    throw std::invalid_argument("cycle_graph: need at least 3 vertices");
  }
  SimpleGraph g;
  for (std::size_t i = 1; i <= n; ++i) {
    g.add_vertex("c" + std::to_string(i));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    g.add_edge("c" + std::to_string(i), "c" + std::to_string(i % n + 1));
  }
  return g;
}

SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g;
  for (std::size_t i = 1; i <= n; ++i) {
    g.add_vertex("t" + std::to_string(i));
  }
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    g.add_edge("t" + std::to_string(i), "t" + std::to_string(i + 1));
  }
  return g;
}

SimpleGraph complete_bipartite(std::size_t a, std::size_t b) {
  SimpleGraph g;
  for (std::size_t i = 1; i <= a; ++i) {
    g.add_vertex("a" + std::to_string(i));
  }
  for (std::size_t j = 1; j <= b; ++j) {
    g.add_vertex("b" + std::to_string(j));
  }
  for (std::size_t i = 1; i <= a; ++i) {
    for (std::size_t j = 1; j <= b; ++j) {
      g.add_edge("a" + std::to_string(i), "b" + std::to_string(j));
    }
  }
  return g;
}

SimpleGraph oriented_complete_bipartite(std::size_t a, std::size_t b) {
  SimpleGraph g;
  for (std::size_t i = 0; i < a; ++i) {
    g.add_vertex("p:" + std::to_string(i));
  }
  for (std::size_t j = 0; j < b; ++j) {
    g.add_vertex("n:" + std::to_string(j));
  }
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      g.add_edge("p:" + std::to_string(i), "n:" + std::to_string(j));
    }
  }
  return g;
}

SimpleGraph oriented_cycle(std::size_t n) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("oriented_cycle: length must be even and at least 4");
  }
  SimpleGraph g;
  std::vector<Label> ring;
  for (std::size_t i = 0; i < n / 2; ++i) {
    ring.push_back("p:" + std::to_string(i));
    ring.push_back("n:" + std::to_string(i));
  }
  for (const Label& label : ring) {
    g.add_vertex(label);
  }
  for (std::size_t i = 0; i < n; ++i) {
    g.add_edge(ring[i], ring[(i + 1) % n]);
  }
  return g;
}

namespace {

Label relabel_with_copy_prefix(const Label& label, const std::string& prefix) {
  auto side = label_side(label);
  if (side) {
    return label.substr(0, 2) + prefix + label.substr(2);
  }
  return prefix + label;
}

}  // namespace

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph g;
  for (const Label& v : a.vertices()) {
    g.add_vertex(relabel_with_copy_prefix(v, "1."));
  }
  for (const auto& [u, v] : a.edges()) {
    g.add_edge(relabel_with_copy_prefix(u, "1."), relabel_with_copy_prefix(v, "1."));
  }
  for (const Label& v : b.vertices()) {
    g.add_vertex(relabel_with_copy_prefix(v, "2."));
  }
  for (const auto& [u, v] : b.edges()) {
    g.add_edge(relabel_with_copy_prefix(u, "2."), relabel_with_copy_prefix(v, "2."));
  }
  return g;
}

namespace {

Label edge_vertex_label(const Label& u, const Label& v) {
  return u <= v ? u + "|" + v : v + "|" + u;
}

}  // namespace

SimpleGraph incidence_graph(const SimpleGraph& g) {
  SimpleGraph inc;
  for (const Label& v : g.vertices()) {
    inc.add_vertex("v:" + v);
  }
  for (const auto& [u, v] : g.edges()) {
    Label e = "e:" + edge_vertex_label(u, v);
    inc.add_vertex(e);
    inc.add_edge("v:" + u, e);
    inc.add_edge("v:" + v, e);
  }
  return inc;
}

SimpleGraph line_graph(const SimpleGraph& g) {
  SimpleGraph lg;
  auto edges = g.edges();
  std::vector<Label> edge_labels;
  edge_labels.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    Label e = edge_vertex_label(u, v);
    edge_labels.push_back(e);
    lg.add_vertex(e);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& [a1, a2] = edges[i];
      const auto& [b1, b2] = edges[j];
      if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) {
        lg.add_edge(edge_labels[i], edge_labels[j]);
      }
    }
  }
  return lg;
}

SimpleGraph tagged_incidence_of_complete(std::size_t ell) {
  SimpleGraph inc = incidence_graph(complete_graph(ell));
  SimpleGraph tagged;
  auto retag = [](const Label& label) {
    if (label.rfind("v:", 0) == 0) {
      return "p:" + label.substr(2);
    }
    return "n:" + label.substr(2);
  };
  for (const Label& v : inc.vertices()) {
    tagged.add_vertex(retag(v));
  }
  for (const auto& [u, v] : inc.edges()) {
    tagged.add_edge(retag(u), retag(v));
  }
  return tagged;
}

SimpleGraph catalog(PatternName name) {
  switch (name) {
    case PatternName::C4:
      return cycle_graph(4);
    case PatternName::C6:
      return cycle_graph(6);
    case PatternName::K13:
      return complete_bipartite(1, 3);
    case PatternName::K14Right:
      return oriented_complete_bipartite(1, 4);
    case PatternName::K41Right:
      return oriented_complete_bipartite(4, 1);
    case PatternName::IncK3:
      return tagged_incidence_of_complete(3);
    case PatternName::IncK4:
      return tagged_incidence_of_complete(4);
    case PatternName::ScriptK: {
      std::vector<BigInt> p = first_primes(3);
      return build_B(make_integer_set({p[0] * p[1], p[0] * p[0] * p[1], p[0] * p[2], p[1] * p[2]}))
          .graph();
    }
    case PatternName::ScriptG: {
      std::vector<BigInt> p = first_primes(4);
      return build_B(make_integer_set({p[0] * p[1], p[0] * p[2], p[0] * p[3], p[1] * p[2] * p[3]}))
          .graph();
    }
    case PatternName::LK4:
      return line_graph(complete_graph(4));
  }
  throw std::invalid_argument("catalog: unknown pattern");
}

const char* pattern_name_string(PatternName name) {
  switch (name) {
    case PatternName::C4:
      return "C4";
    case PatternName::C6:
      return "C6";
    case PatternName::K13:
      return "K13";
    case PatternName::K14Right:
      return "K14right";
    case PatternName::K41Right:
      return "K41right";
    case PatternName::IncK3:
      return "IncK3";
    case PatternName::IncK4:
      return "IncK4";
    case PatternName::ScriptK:
      return "ScriptK";
    case PatternName::ScriptG:
      return "ScriptG";
    case PatternName::LK4:
      return "LK4";
  }
  return "?";
}

std::optional<Embedding> find_tagged(const SimpleGraph& host, const SimpleGraph& pattern,
                                     bool flip, bool induced) {
  VertexCompat compat = [flip](const Label& pattern_vertex, const Label& host_vertex) {
    auto pattern_side = label_side(pattern_vertex);
    if (!pattern_side) {
      return true;  // untagged pattern vertices are unconstrained
    }
    auto host_side = label_side(host_vertex);
    if (!host_side) {
      return false;
    }
    bool same = *pattern_side == *host_side;
    return flip ? !same : same;
  };
  return find_subgraph(host, pattern, induced, compat);
}

bool oriented_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return false;
  }
  auto side_counts = [](const SimpleGraph& g) {
    std::size_t primes = 0;
    std::size_t numbers = 0;
    for (const Label& v : g.vertices()) {
      auto side = label_side(v);
      if (side == Side::Primes) {
        ++primes;
      } else if (side == Side::Numbers) {
        ++numbers;
      }
    }
    return std::make_pair(primes, numbers);
  };
  if (side_counts(a) != side_counts(b)) {
    return false;
  }
  return find_tagged(a, b, /*flip=*/false, /*induced=*/true).has_value();
}

TriangleDiagnosis diagnose_triangles(const IntegerSet& x) {
  TriangleDiagnosis diagnosis;
  diagnosis.has_triangle_delta = find_clique(build_delta(x), 3).has_value();
  diagnosis.has_triangle_gamma = find_clique(build_gamma(x), 3).has_value();

  BipartiteDivisorGraph b = build_B(x);
  const SimpleGraph& host = b.graph();
  for (std::size_t v = 0; v < host.vertex_count(); ++v) {
    if (host.degree(v) < 3) {
      continue;
    }
    // A star at any vertex of a bipartite graph is automatically induced:
    // the leaves share a part.
    Embedding star;
    star.induced = true;
    star.map.emplace("a1", host.label_of(v));
    const auto& nb = host.neighbors(v);
    for (std::size_t i = 0; i < 3; ++i) {
      star.map.emplace("b" + std::to_string(i + 1), host.label_of(nb[i]));
    }
    diagnosis.witness = std::move(star);
    diagnosis.witness_kind = TriangleWitnessKind::InducedK13;
    return diagnosis;
  }
  if (auto c6 = find_subgraph(host, catalog(PatternName::C6), /*induced=*/true)) {
    diagnosis.witness = std::move(c6);
    diagnosis.witness_kind = TriangleWitnessKind::InducedC6;
  }
  return diagnosis;
}

namespace {

std::vector<BigInt> labels_to_values(const std::vector<Label>& labels) {
  std::vector<BigInt> values;
  values.reserve(labels.size());
  for (const Label& label : labels) {
    values.push_back(label_value(label));
  }
  return values;
}

// Tries to assign pairwise distinct representatives (one per unordered pair
// of clique members) out of the given candidate lists.
std::optional<std::vector<std::size_t>> distinct_representatives(
    std::size_t pool_size, const std::vector<std::vector<std::size_t>>& candidates) {
  std::vector<std::size_t> match = maximum_bipartite_matching(pool_size, candidates);
  for (std::size_t slot : match) {
    if (slot == kUnmatched) {
      return std::nullopt;
    }
  }
  return match;
}

}  // namespace

IncCondition check_inc_condition(const IntegerSet& x, std::size_t ell) {
  if (ell < 2) {
    throw std::invalid_argument("check_inc_condition: ell must be at least 2");
  }

  // Route (i): an ell-clique of Gamma plus distinct primes on the pairs.
  SimpleGraph gamma = build_gamma(x);
  const std::vector<BigInt>& rho = x.rho();
  for (const auto& clique_labels : cliques_of_size(gamma, ell)) {
    std::vector<BigInt> members = labels_to_values(clique_labels);
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    std::vector<std::vector<std::size_t>> candidates;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        slots.emplace_back(i, j);
        std::vector<std::size_t> primes_dividing_both;
        for (std::size_t p = 0; p < rho.size(); ++p) {
          if (x.factorization_of(members[i]).divisible_by(rho[p]) &&
              x.factorization_of(members[j]).divisible_by(rho[p])) {
            primes_dividing_both.push_back(p);
          }
        }
        candidates.push_back(std::move(primes_dividing_both));
      }
    }
    if (auto assignment = distinct_representatives(rho.size(), candidates)) {
      IncWitness witness;
      witness.clique = members;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        witness.assignment.emplace_back(members[slots[s].first], members[slots[s].second],
                                        rho[(*assignment)[s]]);
      }
      return IncCondition{IncRoute::Gamma, std::move(witness)};
    }
  }

  // Route (ii): an ell-clique of Delta plus distinct multiples on the pairs.
  SimpleGraph delta = build_delta(x);
  const std::vector<BigInt>& numbers = x.xstar();
  for (const auto& clique_labels : cliques_of_size(delta, ell)) {
    std::vector<BigInt> members = labels_to_values(clique_labels);
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    std::vector<std::vector<std::size_t>> candidates;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        slots.emplace_back(i, j);
        std::vector<std::size_t> multiples;
        for (std::size_t n = 0; n < numbers.size(); ++n) {
          const Factorization& f = x.factorization_of(numbers[n]);
          if (f.divisible_by(members[i]) && f.divisible_by(members[j])) {
            multiples.push_back(n);
          }
        }
        candidates.push_back(std::move(multiples));
      }
    }
    if (auto assignment = distinct_representatives(numbers.size(), candidates)) {
      IncWitness witness;
      witness.clique = members;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        witness.assignment.emplace_back(members[slots[s].first], members[slots[s].second],
                                        numbers[(*assignment)[s]]);
      }
      return IncCondition{IncRoute::Delta, std::move(witness)};
    }
  }

  return IncCondition{IncRoute::Fails, std::nullopt};
}

K4Diagnosis diagnose_k4(const IntegerSet& x) {
  K4Diagnosis diagnosis;
  if (auto clique = find_clique(build_delta(x), 4)) {
    diagnosis.delta_k4 = labels_to_values(*clique);
  }
  if (auto clique = find_clique(build_gamma(x), 4)) {
    diagnosis.gamma_k4 = labels_to_values(*clique);
  }

  BipartiteDivisorGraph b = build_B(x);
  const SimpleGraph& host = b.graph();
  auto try_pattern = [&](PatternName name, bool both_orientations) {
    SimpleGraph pattern = catalog(name);
    if (auto embedding = find_tagged(host, pattern, /*flip=*/false)) {
      diagnosis.b_patterns_found.emplace(name, std::move(*embedding));
      return;
    }
    if (both_orientations) {
      if (auto embedding = find_tagged(host, pattern, /*flip=*/true)) {
        diagnosis.b_patterns_found.emplace(name, std::move(*embedding));
      }
    }
  };
  try_pattern(PatternName::K14Right, false);
  try_pattern(PatternName::K41Right, false);
  try_pattern(PatternName::IncK4, true);
  try_pattern(PatternName::ScriptK, true);
  try_pattern(PatternName::ScriptG, true);
  return diagnosis;
}

}  // namespace divgraph
