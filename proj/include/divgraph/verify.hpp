#ifndef DIVGRAPH_VERIFY_HPP
#define DIVGRAPH_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "divgraph/divisor.hpp"
#include "divgraph/patterns.hpp"
#include "divgraph/realize.hpp"

namespace divgraph {

// L2.6a-d and Lgirth cover the component/diameter/girth relations, T2.11 the
// triangle criterion, Ttrees/Ctrees the acyclicity characterisation, L2.13
// the Inc(K_ell) conditions, T2.14 the K4 catalog, T1.1 the realization
// round trip. Oracle is the internal cross-check that the two construction
// routes and the naive recomputations agree.
enum class TheoremId {
  L2_6a,
  L2_6b,
  L2_6c,
  L2_6d,
  Lgirth,
  T2_11,
  Ttrees,
  Ctrees,
  L2_13,
  T2_14,
  T1_1,
  Oracle,
};

const char* theorem_id_string(TheoremId id);

struct TheoremReport {
  TheoremId id;
  bool passed = false;
  // Always carries the instance (decimal strings under "x", or the graph
  // under "graph"), so any failure can be replayed; on failure both sides
  // of the violated relation are recorded.
  nlohmann::json detail;
};

// d_B = 2 d_Delta / 2 d_Gamma on same-part pairs, then the edge-quadruple
// relation d_B(p,q) - d_B(x,y) in {-2, 0, 2} and the component-union
// equality. Returns the L2.6a report followed by the L2.6b report.
std::vector<TheoremReport> verify_distance_relations(const IntegerSet& x);

TheoremReport verify_components(const IntegerSet& x);  // n(B) = n(Delta) = n(Gamma)
TheoremReport verify_diameters(const IntegerSet& x);   // the 2max / (diam B - 1)/2 dichotomy
TheoremReport verify_girths(const IntegerSet& x);      // girth 3-or-half-of-g' when g'(B) exists
TheoremReport verify_triangles(const IntegerSet& x);   // triangle <=> induced C6 or K13 in B

// Acyclicity of Delta and Gamma versus path-or-C4 components of B, then the
// tree corollary. Returns Ttrees followed by Ctrees.
std::vector<TheoremReport> verify_acyclic(const IntegerSet& x);

TheoremReport verify_inc(const IntegerSet& x, std::size_t ell);
TheoremReport verify_k4(const IntegerSet& x);

// Construction-route and naive-oracle agreement on one instance.
TheoremReport verify_oracles(const IntegerSet& x);

// Realization round trip: graphs with an isolated vertex must be rejected,
// all others must reproduce their edges exactly under the returned maps.
TheoremReport roundtrip_realize(const BipartitionedGraph& g);

// Every checker above, in a fixed order, with L2.13 run per ell.
std::vector<TheoremReport> verify_all(const IntegerSet& x, const std::vector<std::size_t>& ells);

struct FuzzConfig {
  std::uint64_t trials = 0;
  std::size_t max_set_size = 7;
  std::uint64_t max_element = 10000;  // keep within the factorization budget
  std::uint64_t seed = 0;
  std::vector<std::size_t> ell_values = {3, 4};
};

// Seeded random instances: alternating smooth-element and uniform-element
// integer sets (smooth ones exercise the dense K4 branches), plus a random
// bipartitioned graph per trial for the round trip, isolated vertices
// included. Deterministic under seed; failed reports come first, trial
// order preserved within each group.
std::vector<TheoremReport> fuzz(const FuzzConfig& config);

// Re-runs the check named by the report on the instance stored in its
// detail. Supports every TheoremId.
TheoremReport replay_report(const TheoremReport& report);

// Independent recomputations (Floyd-Warshall, union-find) used by
// verify_oracles against the BFS-based graph queries.
std::optional<std::size_t> naive_diameter(const SimpleGraph& g);
std::size_t naive_component_count(const SimpleGraph& g);

}  // namespace divgraph

#endif  // DIVGRAPH_VERIFY_HPP
