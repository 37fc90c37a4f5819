#include "divgraph/divisor.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace divgraph {

Label prime_label(const BigInt& p) { return "p:" + p.str(); }

Label number_label(const BigInt& x) { return "n:" + x.str(); }

std::optional<Side> label_side(const Label& label) {
  if (label.rfind("p:", 0) == 0) {
    return Side::Primes;
  }
  if (label.rfind("n:", 0) == 0) {
    return Side::Numbers;
  }
  return std::nullopt;
}

BigInt label_value(const Label& label) {
  if (!label_side(label)) {
    throw std::invalid_argument("label '" + label + "' carries no side tag");
  }
  return BigInt(label.substr(2));
}

const Factorization& IntegerSet::factorization_of(const BigInt& x) const {
  auto it = factorizations_.find(x);
  if (it == factorizations_.end()) {
    throw std::invalid_argument("value " + x.str() + " is not a member of X*");
  }
  return it->second;
}

bool IntegerSet::contains(const BigInt& value) const {
  return std::binary_search(elements_.begin(), elements_.end(), value);
}

IntegerSet make_integer_set(const std::vector<BigInt>& raw, const BigInt& trial_bound) {
  std::set<BigInt> unique;
  for (const BigInt& value : raw) {
    if (value < 1) {
      throw std::invalid_argument("integer set members must be positive, got " + value.str());
    }
    unique.insert(value);
  }

  IntegerSet x;
  x.elements_.assign(unique.begin(), unique.end());
  for (const BigInt& value : x.elements_) {
    if (value > 1) {
      x.xstar_.push_back(value);
    }
  }
  if (x.xstar_.empty()) {
    throw EmptyOrTrivialError("X must contain an element other than 1");
  }

  std::set<BigInt> support;
  for (const BigInt& value : x.xstar_) {
    Factorization f = factorize(value, trial_bound);
    for (const BigInt& p : f.support()) {
      support.insert(p);
    }
    x.factorizations_.emplace(value, std::move(f));
  }
  x.rho_.assign(support.begin(), support.end());
  return x;
}

std::vector<Label> BipartiteDivisorGraph::side_labels(Side side) const {
  std::vector<Label> labels;
  if (side == Side::Primes) {
    labels.reserve(primes().size());
    for (const BigInt& p : primes()) {
      labels.push_back(prime_label(p));
    }
  } else {
    labels.reserve(numbers().size());
    for (const BigInt& n : numbers()) {
      labels.push_back(number_label(n));
    }
  }
  return labels;
}

BipartiteDivisorGraph build_B(const IntegerSet& x) {
  BipartiteDivisorGraph b(x);
  for (const BigInt& p : x.rho()) {
    b.graph_.add_vertex(prime_label(p));
  }
  for (const BigInt& value : x.xstar()) {
    b.graph_.add_vertex(number_label(value));
  }
  for (const BigInt& value : x.xstar()) {
    for (const BigInt& p : x.factorization_of(value).support()) {
      b.graph_.add_edge(prime_label(p), number_label(value));
    }
  }
  return b;
}

SimpleGraph build_delta(const IntegerSet& x) {
  SimpleGraph delta;
  for (const BigInt& p : x.rho()) {
    delta.add_vertex(prime_label(p));
  }
  // pq divides x for distinct primes exactly when both divide x.
  for (const BigInt& value : x.xstar()) {
    std::vector<BigInt> support = x.factorization_of(value).support();
    for (std::size_t i = 0; i < support.size(); ++i) {
      for (std::size_t j = i + 1; j < support.size(); ++j) {
        delta.add_edge(prime_label(support[i]), prime_label(support[j]));
      }
    }
  }
  return delta;
}

SimpleGraph build_gamma(const IntegerSet& x) {
  SimpleGraph gamma;
  const std::vector<BigInt>& members = x.xstar();
  for (const BigInt& value : members) {
    gamma.add_vertex(number_label(value));
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (gcd(members[i], members[j]) > 1) {
        gamma.add_edge(number_label(members[i]), number_label(members[j]));
      }
    }
  }
  return gamma;
}

SimpleGraph distance2_graph(const BipartiteDivisorGraph& b, Side side) {
  const SimpleGraph& host = b.graph();
  std::vector<Label> labels = b.side_labels(side);
  SimpleGraph result;
  std::vector<std::size_t> indices;
  indices.reserve(labels.size());
  for (const Label& label : labels) {
    result.add_vertex(label);
    indices.push_back(host.index_of(label));
  }
  // Same-side vertices of a bipartite graph are never adjacent, so distance
  // two is exactly "shares a neighbour".
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = i + 1; j < indices.size(); ++j) {
      const auto& nu = host.neighbors(indices[i]);
      const auto& nv = host.neighbors(indices[j]);
      bool common = false;
      for (std::size_t a = 0, c = 0; a < nu.size() && c < nv.size();) {
        if (nu[a] == nv[c]) {
          common = true;
          break;
        }
        if (nu[a] < nv[c]) {
          ++a;
        } else {
          ++c;
        }
      }
      if (common) {
        result.add_edge(labels[i], labels[j]);
      }
    }
  }
  return result;
}

}  // namespace divgraph
