#ifndef DIVGRAPH_REALIZE_HPP
#define DIVGRAPH_REALIZE_HPP

#include <string>
#include <utility>
#include <vector>

#include "divgraph/divisor.hpp"

namespace divgraph {

// Bipartite graph with an explicit, ordered bipartition. The construction's
// output depends on the part orders, so they are part of the value.
struct BipartitionedGraph {
  std::vector<Label> part1;
  std::vector<Label> part2;
  std::vector<std::pair<Label, Label>> edges;  // (part1 label, part2 label)

  bool has_edge(const Label& v, const Label& u) const;
};

// Validates: both parts non-empty, labels unique and disjoint across parts,
// every edge joins part1 to part2. Duplicate edges are dropped. Throws
// ParseError on violation.
BipartitionedGraph make_bipartitioned_graph(std::vector<Label> part1, std::vector<Label> part2,
                                            std::vector<std::pair<Label, Label>> edges);

// Text format: first line "parts: v1 v2 ... | u1 u2 ...", then one "v u"
// edge per line. Blank lines and lines starting with '#' are skipped.
BipartitionedGraph parse_bipartitioned_graph(const std::string& text);

struct RealizationResult {
  IntegerSet x;
  std::vector<std::pair<Label, BigInt>> prime_of;   // part1 order
  std::vector<std::pair<Label, BigInt>> number_of;  // part2 order

  const BigInt& prime_for(const Label& v) const;
  const BigInt& number_for(const Label& u) const;
};

// Builds X with B(X) isomorphic to g: part1 vertices get the first primes
// in order, and the j-th part2 vertex becomes x_j, the product over its
// neighbours' primes each raised to the j-th power. Throws
// IsolatedVertexError when some vertex lies on no edge (no realization
// exists in that case).
RealizationResult realize(const BipartitionedGraph& g);

// Realizes B(x) with the parts reversed (X* ascending first, rho(X)
// ascending second). The resulting Y satisfies Delta(X) iso Gamma(Y) and
// Gamma(X) iso Delta(Y) under the returned maps.
RealizationResult dualize(const IntegerSet& x);

}  // namespace divgraph

#endif  // DIVGRAPH_REALIZE_HPP
