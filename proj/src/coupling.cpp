#include "wigner/coupling.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "wigner/errors.hpp"
#include "wigner/summation.hpp"

namespace wigner {

namespace {

BigInt factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// Integer value of a doubled quantity that the selection rules make even.
long half_of(int twice) {
  if (twice % 2 != 0) throw InternalError("odd doubled factorial argument");
  return twice / 2;
}

using SixJKey = std::array<int, 6>;

struct SixJKeyHash {
  std::size_t operator()(const SixJKey& k) const {
    std::size_t h = 0;
    for (const int v : k) h = h * 1000003u ^ std::hash<int>{}(v);
    return h;
  }
};

// Columns (upper, lower); the 24 symmetries are the 6 column permutations
// times swapping upper and lower entries in zero or two columns.
SixJKey canonical_key(const SixJKey& k) {
  const std::array<std::array<int, 2>, 3> cols{{{k[0], k[3]}, {k[1], k[4]}, {k[2], k[5]}}};
  static constexpr std::array<std::array<int, 3>, 6> kPerms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  static constexpr std::array<std::array<bool, 3>, 4> kFlips{
      {{false, false, false}, {true, true, false}, {true, false, true}, {false, true, true}}};
  SixJKey best = k;
  for (const auto& perm : kPerms) {
    for (const auto& flip : kFlips) {
      SixJKey cand;
      for (int c = 0; c < 3; ++c) {
        const auto& col = cols[perm[c]];
        cand[c] = flip[c] ? col[1] : col[0];
        cand[c + 3] = flip[c] ? col[0] : col[1];
      }
      best = std::min(best, cand);
    }
  }
  return best;
}

class SixJMemo {
 public:
  template <typename Compute>
  Surd get(const SixJKey& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Surd value = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<SixJKey, Surd, SixJKeyHash> table_;
};

SixJMemo& sixj_memo() {
  static SixJMemo memo;
  return memo;
}

}  // namespace

bool triangle_ok(HalfInt a, HalfInt b, HalfInt c) {
  const int ta = a.twice();
  const int tb = b.twice();
  const int tc = c.twice();
  if ((ta + tb + tc) % 2 != 0) return false;
  return std::abs(ta - tb) <= tc && tc <= ta + tb;
}

FactoredPositive delta_squared(HalfInt a, HalfInt b, HalfInt c) {
  if (a.is_negative() || b.is_negative() || c.is_negative() || !triangle_ok(a, b, c)) {
    throw InternalError("triangular factor of non-triangle (" + a.to_string() + ", " +
                        b.to_string() + ", " + c.to_string() + ")");
  }
  const int ta = a.twice();
  const int tb = b.twice();
  const int tc = c.twice();
  return factorial_factored((ta + tb - tc) / 2) * factorial_factored((ta - tb + tc) / 2) *
         factorial_factored((-ta + tb + tc) / 2) / factorial_factored((ta + tb + tc) / 2 + 1);
}

Surd delta(HalfInt a, HalfInt b, HalfInt c) { return Surd::sqrt_of(delta_squared(a, b, c)); }

Surd wigner3jm(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m1, HalfInt m2, HalfInt m) {
  require_nonnegative({j1, j2, j}, "3jm");
  for (const auto& [jj, mm] : {Pair{j1, m1}, Pair{j2, m2}, Pair{j, m}}) {
    if ((jj.twice() - mm.twice()) % 2 != 0) {
      throw DomainError("3jm: projection " + mm.to_string() + " is not offset from " +
                        jj.to_string() + " by an integer");
    }
  }
  if (m1.twice() + m2.twice() + m.twice() != 0) return Surd();
  if (std::abs(m1.twice()) > j1.twice() || std::abs(m2.twice()) > j2.twice() ||
      std::abs(m.twice()) > j.twice()) {
    return Surd();
  }
  if (!triangle_ok(j1, j2, j)) return Surd();

  const int tj1 = j1.twice(), tj2 = j2.twice(), tj = j.twice();
  const int tm1 = m1.twice(), tm2 = m2.twice(), tm = m.twice();

  FactoredPositive radicand = delta_squared(j1, j2, j);
  for (const int t : {tj + tm, tj - tm, tj1 - tm1, tj1 + tm1, tj2 - tm2, tj2 + tm2}) {
    radicand *= factorial_factored(half_of(t));
  }

  const long k_lo = std::max({0L, half_of(tj2 - tj - tm1), half_of(tj1 + tm2 - tj)});
  const long k_hi =
      std::min({half_of(tj1 + tj2 - tj), half_of(tj1 - tm1), half_of(tj2 + tm2)});
  BigRational sum;
  for (long k = k_lo; k <= k_hi; ++k) {
    const BigInt den = factorial(k) * factorial(half_of(tj1 + tj2 - tj) - k) *
                       factorial(half_of(tj1 - tm1) - k) * factorial(half_of(tj2 + tm2) - k) *
                       factorial(half_of(tj - tj2 + tm1) + k) *
                       factorial(half_of(tj - tj1 - tm2) + k);
    const BigRational term(BigInt(1), den);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  const int phase = phase_from_twice(tj1 - tj2 - tm);
  return Surd::sqrt_of(radicand) * Surd(phase > 0 ? sum : -sum);
}

Surd wigner6j_direct(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt l1, HalfInt l2, HalfInt l3) {
  require_nonnegative({j1, j2, j3, l1, l2, l3}, "6-j");
  if (!all_triangles({{j1, j2, j3}, {j1, l2, l3}, {l1, j2, l3}, {l1, l2, j3}})) return Surd();

  const std::array<long, 4> triads{
      half_of(j1.twice() + j2.twice() + j3.twice()), half_of(j1.twice() + l2.twice() + l3.twice()),
      half_of(l1.twice() + j2.twice() + l3.twice()), half_of(l1.twice() + l2.twice() + j3.twice())};
  const std::array<long, 3> pairs{half_of(j1.twice() + j2.twice() + l1.twice() + l2.twice()),
                                  half_of(j1.twice() + j3.twice() + l1.twice() + l3.twice()),
                                  half_of(j2.twice() + j3.twice() + l2.twice() + l3.twice())};
  const long z_lo = *std::max_element(triads.begin(), triads.end());
  const long z_hi = *std::min_element(pairs.begin(), pairs.end());

  BigRational sum;
  for (long z = z_lo; z <= z_hi; ++z) {
    BigInt den = 1;
    for (const long a : triads) den *= factorial(z - a);
    for (const long b : pairs) den *= factorial(b - z);
    const BigRational term(factorial(z + 1), std::move(den));
    if (z % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }

  const FactoredPositive radicand = delta_squared(j1, j2, j3) * delta_squared(j1, l2, l3) *
                                    delta_squared(l1, j2, l3) * delta_squared(l1, l2, j3);
  return Surd::sqrt_of(radicand) * Surd(std::move(sum));
}

Surd wigner6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt l1, HalfInt l2, HalfInt l3) {
  require_nonnegative({j1, j2, j3, l1, l2, l3}, "6-j");
  if (!all_triangles({{j1, j2, j3}, {j1, l2, l3}, {l1, j2, l3}, {l1, l2, j3}})) return Surd();
  const SixJKey key = canonical_key(
      {j1.twice(), j2.twice(), j3.twice(), l1.twice(), l2.twice(), l3.twice()});
  return sixj_memo().get(key, [&] {
    const auto h = [&](int i) { return HalfInt::from_twice(key[i]); };
    return wigner6j_direct(h(0), h(1), h(2), h(3), h(4), h(5));
  });
}

std::size_t sixj_cache_size() { return sixj_memo().size(); }

Surd wigner9j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt l1, HalfInt l2, HalfInt l3,
              HalfInt k1, HalfInt k2, HalfInt k3) {
  require_nonnegative({j1, j2, j3, l1, l2, l3, k1, k2, k3}, "9-j");
  if (!all_triangles({{j1, j2, j3}, {l1, l2, l3}, {k1, k2, k3},
                      {j1, l1, k1}, {j2, l2, k2}, {j3, l3, k3}})) {
    return Surd();
  }
  const TwiceRange xr = coupling_range({{j1, k3}, {j2, l3}, {l1, k2}});
  TermSum sum;
  for (int tx = xr.lo; tx <= xr.hi; tx += 2) {
    const HalfInt x = HalfInt::from_twice(tx);
    sum.add(multiplicity(tx) * signed_one(phase_from_twice(2 * tx)) *
            wigner6j(j1, j2, j3, l3, k3, x) * wigner6j(l1, l2, l3, j2, x, k2) *
            wigner6j(k1, k2, k3, x, j1, l1));
  }
  return sum.result();
}

}  // namespace wigner
