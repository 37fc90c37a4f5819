#ifndef DIVGRAPH_PATTERNS_HPP
#define DIVGRAPH_PATTERNS_HPP

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "divgraph/divisor.hpp"
#include "divgraph/graph.hpp"

namespace divgraph {

// --- elementary generators -------------------------------------------------

SimpleGraph complete_graph(std::size_t n);                       // labels k1..kn
SimpleGraph cycle_graph(std::size_t n);                          // labels c1..cn, n >= 3
SimpleGraph path_graph(std::size_t n);                           // labels t1..tn
SimpleGraph complete_bipartite(std::size_t a, std::size_t b);    // labels a1.., b1..

// K_{a,b} with the a-side tagged as primes and the b-side as numbers, the
// paper's K_{a,b}-arrow orientation.
SimpleGraph oriented_complete_bipartite(std::size_t a, std::size_t b);

// Even cycle alternating prime- and number-tagged vertices.
SimpleGraph oriented_cycle(std::size_t n);

// Union on relabelled copies; side tags are preserved, untagged labels get
// a plain copy prefix.
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

// Bipartite graph on V(g) and E(g): vertex v is joined to edge-vertex e
// exactly when v lies on e. Labels "v:<l>" and "e:<l1>|<l2>".
SimpleGraph incidence_graph(const SimpleGraph& g);

// Vertices are the edges of g, adjacent when the edges share an endpoint.
SimpleGraph line_graph(const SimpleGraph& g);

// Inc(K_ell) with the K_ell vertices prime-tagged and the edge-vertices
// number-tagged, ready for oriented search inside B(X).
SimpleGraph tagged_incidence_of_complete(std::size_t ell);

// --- the pattern catalog ----------------------------------------------------

enum class PatternName { C4, C6, K13, K14Right, K41Right, IncK3, IncK4, ScriptK, ScriptG, LK4 };

// Fixed graphs, each built from a generating rule. ScriptK is
// B({p1 p2, p1^2 p2, p1 p3, p2 p3}) and ScriptG is
// B({p1 p2, p1 p3, p1 p4, p2 p3 p4}) over the first primes. C4, C6, K13 and
// LK4 are untagged; the bipartite patterns carry side tags.
SimpleGraph catalog(PatternName name);

const char* pattern_name_string(PatternName name);

// Tag-respecting subgraph search: tagged pattern vertices may land only on
// same-side host vertices, or opposite-side ones when flip is set.
std::optional<Embedding> find_tagged(const SimpleGraph& host, const SimpleGraph& pattern,
                                     bool flip, bool induced = false);

// Isomorphism that additionally preserves side tags.
bool oriented_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// --- triangle detection (3-cliques of Delta / Gamma) ------------------------

enum class TriangleWitnessKind { None, InducedC6, InducedK13 };

struct TriangleDiagnosis {
  bool has_triangle_delta = false;
  bool has_triangle_gamma = false;
  std::optional<Embedding> witness;
  TriangleWitnessKind witness_kind = TriangleWitnessKind::None;
};

// Searches a degree->=3 vertex of B first (an induced K_{1,3} in a bipartite
// host), then an induced C6. Delta or Gamma has a triangle exactly when a
// witness exists; verify_triangles asserts the biconditional.
TriangleDiagnosis diagnose_triangles(const IntegerSet& x);

// --- Inc(K_ell) conditions ---------------------------------------------------

enum class IncRoute { Gamma, Delta, Fails };

struct IncWitness {
  std::vector<BigInt> clique;  // vertices of the K_ell in Gamma or Delta
  // one row per pair 1 <= i < j <= ell: (member_i, member_j, representative)
  std::vector<std::tuple<BigInt, BigInt, BigInt>> assignment;
};

struct IncCondition {
  IncRoute route = IncRoute::Fails;
  std::optional<IncWitness> witness;
};

// The Gamma route holds when some ell-clique of Gamma admits pairwise
// distinct primes p_ij dividing gcd(x_i, x_j); the Delta route is the mirror
// with distinct multiples x_ij of p_i p_j. Each clique is decided by a
// system-of-distinct-representatives check via maximum bipartite matching.
// Gamma is tried first. Either route is non-Fails exactly when Inc(K_ell)
// embeds in B(X); verify_inc asserts that.
IncCondition check_inc_condition(const IntegerSet& x, std::size_t ell);

// --- K4 detection (Theorem-style catalog scan) -------------------------------

struct K4Diagnosis {
  std::optional<std::vector<BigInt>> delta_k4;
  std::optional<std::vector<BigInt>> gamma_k4;
  // Restricted to K14Right, K41Right, IncK4, ScriptK, ScriptG. The arrow
  // patterns embed in their fixed orientation; the other three are tried in
  // both orientations.
  std::map<PatternName, Embedding> b_patterns_found;
};

K4Diagnosis diagnose_k4(const IntegerSet& x);

}  // namespace divgraph

#endif  // DIVGRAPH_PATTERNS_HPP
