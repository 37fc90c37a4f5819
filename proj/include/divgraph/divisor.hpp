#ifndef DIVGRAPH_DIVISOR_HPP
#define DIVGRAPH_DIVISOR_HPP

#include <map>
#include <optional>
#include <vector>

#include "divgraph/arith.hpp"
#include "divgraph/graph.hpp"

namespace divgraph {

enum class Side { Primes, Numbers };

// Tagged vertex labels. A prime 2 and an element 2 of X are distinct
// vertices, so labels are never bare integers.
Label prime_label(const BigInt& p);
Label number_label(const BigInt& x);
std::optional<Side> label_side(const Label& label);
BigInt label_value(const Label& label);  // throws std::invalid_argument if untagged

// Validated input set X with the derived prime support rho(X) and
// X* = X \ {1}. Elements equal to 1 are accepted and dropped from X*.
class IntegerSet {
 public:
  const std::vector<BigInt>& elements() const { return elements_; }  // ascending, deduplicated
  const std::vector<BigInt>& xstar() const { return xstar_; }
  const std::vector<BigInt>& rho() const { return rho_; }
  const Factorization& factorization_of(const BigInt& x) const;
  bool contains(const BigInt& value) const;

 private:
  friend IntegerSet make_integer_set(const std::vector<BigInt>&, const BigInt&);
  std::vector<BigInt> elements_;
  std::vector<BigInt> xstar_;
  std::vector<BigInt> rho_;
  std::map<BigInt, Factorization> factorizations_;  // keyed by X* member
};

// Throws EmptyOrTrivialError when raw is empty or deduplicates to {1};
// BudgetExceededError propagates from factorize.
IntegerSet make_integer_set(const std::vector<BigInt>& raw,
                            const BigInt& trial_bound = kDefaultTrialBound);

// B(X): bipartite graph on rho(X) and X* with an edge {p, x} exactly when
// p divides x. Never has isolated vertices.
class BipartiteDivisorGraph {
 public:
  const SimpleGraph& graph() const { return graph_; }
  const IntegerSet& source() const { return source_; }
  const std::vector<BigInt>& primes() const { return source_.rho(); }
  const std::vector<BigInt>& numbers() const { return source_.xstar(); }
  std::vector<Label> side_labels(Side side) const;

 private:
  friend BipartiteDivisorGraph build_B(const IntegerSet&);
  explicit BipartiteDivisorGraph(IntegerSet source) : source_(std::move(source)) {}
  IntegerSet source_;
  SimpleGraph graph_;
};

BipartiteDivisorGraph build_B(const IntegerSet& x);

// Delta(X): vertices rho(X), edge {p, q} when pq divides some element.
SimpleGraph build_delta(const IntegerSet& x);

// Gamma(X): vertices X*, edge {x, y} when gcd(x, y) > 1. Built from gcds,
// independently of the factorization route used by build_delta.
SimpleGraph build_gamma(const IntegerSet& x);

// Graph on one side of B whose edges are the pairs at distance exactly 2.
// Coincides with Delta or Gamma edge-for-edge; the equality is kept as a
// permanent cross-check in the verify layer.
SimpleGraph distance2_graph(const BipartiteDivisorGraph& b, Side side);

}  // namespace divgraph

#endif  // DIVGRAPH_DIVISOR_HPP
