#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "wigner/big_rational.hpp"

namespace wigner {

/// A positive rational held as its prime factorization, prod p^e with signed
/// exponents. Factorial ratios live in this form until they are square-rooted,
/// so square-free reduction is parity bookkeeping rather than factoring.
class FactoredPositive {
 public:
  using Prime = std::uint64_t;
  using Exponents = std::map<Prime, long>;

  FactoredPositive() = default;

  /// Builds p^e; e == 0 yields the empty factorization.
  static FactoredPositive prime_power(Prime p, long e);

  const Exponents& exponents() const { return exponents_; }
  long exponent(Prime p) const;
  bool is_one() const { return exponents_.empty(); }

  FactoredPositive& operator*=(const FactoredPositive& o);
  FactoredPositive& operator/=(const FactoredPositive& o);
  friend FactoredPositive operator*(FactoredPositive a, const FactoredPositive& b) { return a *= b; }
  friend FactoredPositive operator/(FactoredPositive a, const FactoredPositive& b) { return a /= b; }
  friend bool operator==(const FactoredPositive&, const FactoredPositive&) = default;

  /// Exact value prod p^e.
  BigRational value() const;

 private:
  void accumulate(const FactoredPositive& o, long sign);
  Exponents exponents_;  // no zero exponents stored
};

/// Prime factorization of n!, by exponent(p, n!) = sum_i floor(n / p^i).
/// Results are cached for the life of the process; the cache takes concurrent
/// readers and serializes growth. Throws DomainError for n < 0.
const FactoredPositive& factorial_factored(long n);

/// Splits q into (outside, inside) with outside^2 * inside == q and every
/// prime exponent of inside in {-1, 0, 1}.
std::pair<BigRational, BigRational> sqrt_split(const FactoredPositive& q);

/// Largest argument the factorial cache currently holds, or -1 if empty.
long factorial_cache_extent();

}  // namespace wigner
