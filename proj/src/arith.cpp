#include "divgraph/arith.hpp"

#include <sstream>
#include <utility>

namespace divgraph {

Factorization::Factorization(std::map<BigInt, std::uint64_t> entries)
    : entries_(std::move(entries)) {
  for (const auto& [prime, exponent] : entries_) {
    if (exponent == 0) {
      throw std::invalid_argument("Factorization: zero exponent for " + prime.str());
    }
    if (!is_prime(prime)) {
      throw std::invalid_argument("Factorization: key " + prime.str() + " is not prime");
    }
  }
}

std::vector<BigInt> Factorization::support() const {
  std::vector<BigInt> primes;
  primes.reserve(entries_.size());
  for (const auto& [prime, exponent] : entries_) {
    primes.push_back(prime);
  }
  return primes;
}

BigInt Factorization::value() const {
  BigInt product = 1;
  for (const auto& [prime, exponent] : entries_) {
    product *= ipow(prime, exponent);
  }
  return product;
}

bool Factorization::divisible_by(const BigInt& prime) const {
  return entries_.find(prime) != entries_.end();
}

std::uint64_t Factorization::exponent_of(const BigInt& prime) const {
  auto it = entries_.find(prime);
  return it == entries_.end() ? 0 : it->second;
}

bool is_prime(const BigInt& n) {
  if (n < 2) {
    return false;
  }
  if (n < 4) {
    return true;
  }
  if (n % 2 == 0 || n % 3 == 0) {
    return false;
  }
  BigInt d = 5;
  while (d * d <= n) {
    if (n % d == 0 || n % (d + 2) == 0) {
      return false;
    }
    d += 6;
  }
  return true;
}

Factorization factorize(const BigInt& n, const BigInt& trial_bound) {
  if (n < 1) {
    throw std::invalid_argument("factorize: argument must be positive, got " + n.str());
  }
  if (trial_bound < 2) {
    throw std::invalid_argument("factorize: trial bound must be at least 2");
  }

  std::map<BigInt, std::uint64_t> entries;
  BigInt rest = n;
  auto strip = [&](const BigInt& divisor) {
    while (rest % divisor == 0) {
      ++entries[divisor];
      rest /= divisor;
    }
  };

  strip(2);
  strip(3);
  BigInt d = 5;
  while (d <= trial_bound && d * d <= rest) {
    strip(d);
    strip(d + 2);
    d += 6;
  }

  if (rest > 1) {
    if (d * d > rest) {
      // No divisor below sqrt(rest) remains, so rest is prime.
      ++entries[rest];
    } else {
      std::ostringstream message;
      message << "factorize: cofactor " << rest.str() << " of " << n.str()
              << " has no prime factor up to " << trial_bound.str()
              << "; supply the support explicitly or raise the bound";
      throw BudgetExceededError(message.str());
    }
  }
  return Factorization(std::move(entries));
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("gcd: arguments must be positive");
  }
  return boost::multiprecision::gcd(a, b);
}

std::vector<BigInt> first_primes(std::size_t count) {
  std::vector<BigInt> primes;
  primes.reserve(count);
  BigInt candidate = 2;
  while (primes.size() < count) {
    if (is_prime(candidate)) {
      primes.push_back(candidate);
    }
    ++candidate;
  }
  return primes;
}

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt square = base;
  while (exponent > 0) {
    if (exponent & 1u) {
      result *= square;
    }
    square *= square;
    exponent >>= 1u;
  }
  return result;
}

}  // namespace divgraph
