#ifndef DIVGRAPH_ARITH_HPP
#define DIVGRAPH_ARITH_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "divgraph/errors.hpp"

namespace divgraph {

// All integer values are unbounded: the realization construction emits
// x_j = prod p_l^j, which outgrows any fixed width as graphs grow.
using BigInt = boost::multiprecision::cpp_int;

// Prime-exponent decomposition of a positive integer; 1 is the empty map.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::map<BigInt, std::uint64_t> entries);

  const std::map<BigInt, std::uint64_t>& entries() const { return entries_; }
  std::vector<BigInt> support() const;  // distinct primes, ascending
  BigInt value() const;                 // product of p^e over all entries
  bool divisible_by(const BigInt& prime) const;
  std::uint64_t exponent_of(const BigInt& prime) const;

 private:
  std::map<BigInt, std::uint64_t> entries_;
};

// Trial-division bound used by factorize(); certifies inputs up to bound^2.
inline const std::int64_t kDefaultTrialBound = 1000000;

// Deterministic primality by trial division. Exact for every n, with cost
// growing as sqrt(n); callers feeding it large inputs go through factorize()
// first, which enforces the budget.
bool is_prime(const BigInt& n);

// Factors n by trial division with primes up to trial_bound. Succeeds for
// any n whose second-largest prime factor is within the bound; otherwise
// throws BudgetExceededError so the caller can supply the support itself.
Factorization factorize(const BigInt& n, const BigInt& trial_bound = kDefaultTrialBound);

BigInt gcd(const BigInt& a, const BigInt& b);

// The count smallest primes, ascending.
std::vector<BigInt> first_primes(std::size_t count);

BigInt ipow(const BigInt& base, std::uint64_t exponent);

}  // namespace divgraph

#endif  // DIVGRAPH_ARITH_HPP
