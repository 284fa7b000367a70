#include "wigner/factored.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "wigner/errors.hpp"

namespace wigner {

FactoredPositive FactoredPositive::prime_power(Prime p, long e) {
  FactoredPositive f;
  if (e != 0) f.exponents_.emplace(p, e);
  return f;
}

long FactoredPositive::exponent(Prime p) const {
  const auto it = exponents_.find(p);
  return it == exponents_.end() ? 0 : it->second;
}

void FactoredPositive::accumulate(const FactoredPositive& o, long sign) {
  for (const auto& [p, e] : o.exponents_) {
    auto [it, inserted] = exponents_.try_emplace(p, 0);
    it->second += sign * e;
    if (it->second == 0) exponents_.erase(it);
  }
}

FactoredPositive& FactoredPositive::operator*=(const FactoredPositive& o) {
  accumulate(o, 1);
  return *this;
}

FactoredPositive& FactoredPositive::operator/=(const FactoredPositive& o) {
  accumulate(o, -1);
  return *this;
}

BigRational FactoredPositive::value() const {
  BigInt num = 1;
  BigInt den = 1;
  BigInt power;
  for (const auto& [p, e] : exponents_) {
    mpz_ui_pow_ui(power.get_mpz_t(), p, static_cast<unsigned long>(e > 0 ? e : -e));
    (e > 0 ? num : den) *= power;
  }
  return BigRational(std::move(num), std::move(den));
}

std::pair<BigRational, BigRational> sqrt_split(const FactoredPositive& q) {
  FactoredPositive outside;
  FactoredPositive inside;
  for (const auto& [p, e] : q.exponents()) {
    // Truncating division keeps the leftover exponent in {-1, 0, 1}.
    outside *= FactoredPositive::prime_power(p, e / 2);
    inside *= FactoredPositive::prime_power(p, e % 2);
  }
  return {outside.value(), inside.value()};
}

namespace {

class FactorialCache {
 public:
  const FactoredPositive& get(long n) {
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<long>(entries_.size())) return entries_[n];
    }
    std::unique_lock lock(mutex_);
    grow(n);
    return entries_[n];
  }

  long extent() const {
    std::shared_lock lock(mutex_);
    return static_cast<long>(entries_.size()) - 1;
  }

 private:
  void grow(long n) {
    if (n < static_cast<long>(entries_.size())) return;
    extend_primes(n);
    for (long m = static_cast<long>(entries_.size()); m <= n; ++m) {
      FactoredPositive f;
      for (const auto p : primes_) {
        if (static_cast<long>(p) > m) break;
        long e = 0;
        for (long pk = static_cast<long>(p); pk <= m; pk *= static_cast<long>(p)) {
          e += m / pk;
          if (pk > m / static_cast<long>(p)) break;
        }
        f *= FactoredPositive::prime_power(p, e);
      }
      entries_.push_back(std::move(f));
    }
  }

  void extend_primes(long n) {
    if (n <= sieved_to_) return;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    primes_.clear();
    for (long i = 2; i <= n; ++i) {
      if (composite[i]) continue;
      primes_.push_back(static_cast<FactoredPositive::Prime>(i));
      for (long k = i * i; k <= n; k += i) composite[k] = true;
    }
    sieved_to_ = n;
  }

  mutable std::shared_mutex mutex_;
  // deque: references handed out stay valid across growth
  std::deque<FactoredPositive> entries_;
  std::vector<FactoredPositive::Prime> primes_;
  long sieved_to_ = 1;
};

FactorialCache& factorial_cache() {
  static FactorialCache cache;
  return cache;
}

}  // namespace

const FactoredPositive& factorial_factored(long n) {
  if (n < 0) throw DomainError("factorial of negative argument " + std::to_string(n));
  return factorial_cache().get(n);
}

long factorial_cache_extent() { return factorial_cache().extent(); }

}  // namespace wigner
