#include "wigner/high_order.hpp"

#include <numeric>
#include <string>

#include "wigner/coupling.hpp"
#include "wigner/errors.hpp"
#include "wigner/summation.hpp"

namespace wigner {

namespace {

int twice_sum(std::span<const HalfInt> values) {
  return std::accumulate(values.begin(), values.end(), 0,
                         [](int acc, HalfInt v) { return acc + v.twice(); });
}

enum class ChainKind { First, Second };

Surd chain(std::span<const HalfInt> j, std::span<const HalfInt> l, std::span<const HalfInt> k,
           ChainKind kind) {
  const std::size_t n = j.size();
  const bool first = kind == ChainKind::First;
  if (l.size() != n || k.size() != n || n > 6 || n < (first ? 4u : 5u)) {
    throw DomainError("3n-j chain: unsupported length " + std::to_string(n));
  }
  require_nonnegative(j, "3n-j chain");
  require_nonnegative(l, "3n-j chain");
  require_nonnegative(k, "3n-j chain");

  std::vector<Triad> fixed;
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    fixed.push_back({j[i], j[i + 1], l[i]});
    fixed.push_back({k[i], k[i + 1], l[i]});
  }
  if (first) {
    fixed.push_back({j[n - 1], k[0], l[n - 1]});
    fixed.push_back({j[0], k[n - 1], l[n - 1]});
  } else {
    fixed.push_back({j[n - 1], j[0], l[n - 1]});
    fixed.push_back({k[n - 1], k[0], l[n - 1]});
  }
  for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(j[i], k[i]);
  if (!all_triangles(fixed)) return Surd();

  const int twice_r = twice_sum(j) + twice_sum(l) + twice_sum(k);
  const int x_factor = first ? static_cast<int>(n) - 1 : static_cast<int>(n);
  const TwiceRange xr = coupling_range(pairs);
  TermSum sum;
  for (int tx = xr.lo; tx <= xr.hi; tx += 2) {
    const HalfInt x = HalfInt::from_twice(tx);
    Surd term = multiplicity(tx) * signed_one(phase_from_twice(twice_r + x_factor * tx));
    term *= first ? wigner6j(j[n - 1], k[n - 1], x, j[0], k[0], l[n - 1])
                  : wigner6j(j[n - 1], k[n - 1], x, k[0], j[0], l[n - 1]);
    for (std::size_t i = 0; i + 1 < n && !term.is_zero(); ++i) {
      term *= wigner6j(j[i], k[i], x, k[i + 1], j[i + 1], l[i]);
    }
    sum.add(term);
  }
  return sum.result();
}

}  // namespace

Surd wigner12j_first(const std::array<HalfInt, 4>& j, const std::array<HalfInt, 4>& l,
                     const std::array<HalfInt, 4>& k) {
  require_nonnegative(j, "12-j");
  require_nonnegative(l, "12-j");
  require_nonnegative(k, "12-j");
  const auto [j1, j2, j3, j4] = j;
  const auto [l1, l2, l3, l4] = l;
  const auto [k1, k2, k3, k4] = k;
  if (!all_triangles({{j1, j2, l1}, {k1, k2, l1}, {j2, j3, l2}, {k2, k3, l2},
                      {j3, j4, l3}, {k3, k4, l3}, {j4, k1, l4}, {j1, k4, l4}})) {
    return Surd();
  }
  const int twice_r = twice_sum(j) + twice_sum(l) + twice_sum(k);
  const TwiceRange xr = coupling_range({{j1, k1}, {j2, k2}, {j3, k3}, {j4, k4}});
  TermSum sum;
  for (int tx = xr.lo; tx <= xr.hi; tx += 2) {
    const HalfInt x = HalfInt::from_twice(tx);
    sum.add(multiplicity(tx) * signed_one(phase_from_twice(twice_r - tx)) *
            wigner6j(j1, k1, x, k2, j2, l1) * wigner6j(j2, k2, x, k3, j3, l2) *
            wigner6j(j3, k3, x, k4, j4, l3) * wigner6j(j4, k4, x, j1, k1, l4));
  }
  return sum.result();
}

Surd wigner12j_second(const std::array<HalfInt, 4>& j, const std::array<HalfInt, 4>& l,
                      const std::array<HalfInt, 4>& k) {
  require_nonnegative(j, "12-j");
  require_nonnegative(l, "12-j");
  require_nonnegative(k, "12-j");
  const auto [j1, j2, j3, j4] = j;
  const auto [l1, l2, l3, l4] = l;
  const auto [k1, k2, k3, k4] = k;
  if (!all_triangles({{k1, j1, l1}, {j3, k2, l1}, {k3, j1, l2}, {j3, k4, l2},
                      {k1, j2, l3}, {j4, k2, l3}, {k3, j2, l4}, {j4, k4, l4}})) {
    return Surd();
  }
  const TwiceRange xr = coupling_range({{k1, k2}, {j3, j1}, {k3, k4}, {j4, j2}});
  TermSum sum;
  for (int tx = xr.lo; tx <= xr.hi; tx += 2) {
    const HalfInt x = HalfInt::from_twice(tx);
    sum.add(multiplicity(tx) * wigner6j(k1, k2, x, j3, j1, l1) *
            wigner6j(k3, k4, x, j3, j1, l2) * wigner6j(k1, k2, x, j4, j2, l3) *
            wigner6j(k3, k4, x, j4, j2, l4));
  }
  const int phase = phase_from_twice(l1.twice() - l2.twice() - l3.twice() + l4.twice());
  return signed_one(phase) * sum.result();
}

Surd chain_3nj_first(std::span<const HalfInt> j, std::span<const HalfInt> l,
                     std::span<const HalfInt> k) {
  return chain(j, l, k, ChainKind::First);
}

Surd chain_3nj_second(std::span<const HalfInt> j, std::span<const HalfInt> l,
                      std::span<const HalfInt> k) {
  return chain(j, l, k, ChainKind::Second);
}

Surd wigner15j_third(const std::array<HalfInt, 15>& a) {
  require_nonnegative(a, "15-j third kind");
  const auto [k1, k1p, k, kp, k2, k2p, p1, p, p2, j1, j1p, jj, jp, j2, j2p] = a;
  if (!all_triangles({{k, kp, p}, {jp, jj, p}, {k1, j1, p1}, {k2, j2, p2}, {k, k1, k2},
                      {jj, j1, j2}, {k1p, j1p, p1}, {k2p, j2p, p2}, {kp, k1p, k2p},
                      {jp, j1p, j2p}})) {
    return Surd();
  }
  const TwiceRange xr = coupling_range({{k, jj}, {jp, kp}, {p1, p2}});
  TermSum sum;
  for (int tx = xr.lo; tx <= xr.hi; tx += 2) {
    const HalfInt x = HalfInt::from_twice(tx);
    const int phase = phase_from_twice(tx + p.twice() - jj.twice() - kp.twice());
    Surd term = multiplicity(tx) * signed_one(phase) * wigner6j(k, jj, x, jp, kp, p);
    if (term.is_zero()) continue;
    term *= wigner9j(k, jj, x, k1, j1, p1, k2, j2, p2);
    if (term.is_zero()) continue;
    term *= wigner9j(kp, jp, x, k1p, j1p, p1, k2p, j2p, p2);
    sum.add(term);
  }
  return sum.result();
}

Surd wigner15j_fourth(const std::array<HalfInt, 15>& a) {
  require_nonnegative(a, "15-j fourth kind");
  const auto [j1, k1, s1, k1p, j1p, p, l, s, lp, pp, j2, k2, s2, k2p, j2p] = a;
  if (!all_triangles({{l, s2, j2}, {s1, lp, j1p}, {j1, l, s1}, {j2p, s2, lp}, {j1, k1, p},
                      {k2p, j2p, p}, {j2, k2, pp}, {k1p, j1p, pp}, {k1, k1p, s},
                      {k2, k2p, s}})) {
    return Surd();
  }
  const TwiceRange xr = coupling_range({{j1, j2p}, {j2, j1p}, {k2p, k1}, {k1p, k2}});
  TermSum sum;
  for (int tx = xr.lo; tx <= xr.hi; tx += 2) {
    const HalfInt x = HalfInt::from_twice(tx);
    Surd term = multiplicity(tx) * wigner6j(j1, j2p, x, k2p, k1, p) *
                wigner6j(j2, j1p, x, k1p, k2, pp) * wigner6j(k1, k2p, x, k2, k1p, s);
    if (term.is_zero()) continue;
    term *= wigner9j(j1, j2p, x, l, s2, j2, s1, lp, j1p);
    sum.add(term);
  }
  const int phase = phase_from_twice(k1.twice() + k2.twice() - s1.twice() - s2.twice() +
                                     p.twice() + pp.twice() + 2 * lp.twice());
  return signed_one(phase) * sum.result();
}

Surd wigner15j_fifth(const std::array<HalfInt, 3>& k, const std::array<HalfInt, 3>& kp,
                     const std::array<HalfInt, 3>& j, const std::array<HalfInt, 3>& l,
                     const std::array<HalfInt, 3>& lp) {
  for (const auto* col : {&k, &kp, &j, &l, &lp}) require_nonnegative(*col, "15-j fifth kind");
  const auto [k1, k2, k3] = k;
  const auto [k1p, k2p, k3p] = kp;
  const auto [j1, j2, j3] = j;
  const auto [l1, l2, l3] = l;
  const auto [l1p, l2p, l3p] = lp;
  if (!all_triangles({{l2, k3p, k1}, {k2p, l3p, k1}, {l2p, k3, k1p}, {k2, l3, k1p},
                      {j2, j3, j1}, {l2, l2p, j2}, {l3p, l3, j3}, {l1, l1p, j1},
                      {k2p, k3, l1}, {k3p, k2, l1p}})) {
    return Surd();
  }
  const int twice_fixed = j1.twice() + j2.twice() + k1.twice() + k1p.twice() - k2.twice() +
                          k2p.twice() - l2p.twice() + l3.twice();
  const TwiceRange r1 = coupling_range({{l2, l3p}, {k2p, k3p}});
  TermSum sum;
  for (int tx1 = r1.lo; tx1 <= r1.hi; tx1 += 2) {
    const HalfInt x1 = HalfInt::from_twice(tx1);
    const Surd outer = multiplicity(tx1) * wigner6j(l2, l3p, x1, k2p, k3p, k1);
    if (outer.is_zero()) continue;
    const TwiceRange r2 = coupling_range({{l2p, l3}, {k2, k3}, {x1, j1}});
    for (int tx2 = r2.lo; tx2 <= r2.hi; tx2 += 2) {
      const HalfInt x2 = HalfInt::from_twice(tx2);
      Surd term = outer * multiplicity(tx2) *
                  signed_one(phase_from_twice(twice_fixed + tx2)) *
                  wigner6j(l2p, l3, x2, k2, k3, k1p);
      if (term.is_zero()) continue;
      term *= wigner9j(l2, l3p, x1, l2p, l3, x2, j2, j3, j1);
      if (term.is_zero()) continue;
      term *= wigner9j(k2p, k3p, x1, k3, k2, x2, l1, l1p, j1);
      sum.add(term);
    }
  }
  return sum.result();
}

std::size_t arity(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::ThreeJM:
    case SymbolKind::SixJ:
      return 6;
    case SymbolKind::NineJ:
      return 9;
    case SymbolKind::TwelveJ1:
    case SymbolKind::TwelveJ2:
      return 12;
    case SymbolKind::FifteenJ1:
    case SymbolKind::FifteenJ2:
    case SymbolKind::FifteenJ3:
    case SymbolKind::FifteenJ4:
    case SymbolKind::FifteenJ5:
      return 15;
    case SymbolKind::EighteenJ1:
    case SymbolKind::EighteenJ2:
      return 18;
  }
  throw InternalError("unknown symbol kind");
}

std::string_view kind_name(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::ThreeJM: return "3jm";
    case SymbolKind::SixJ: return "6j";
    case SymbolKind::NineJ: return "9j";
    case SymbolKind::TwelveJ1: return "12j1";
    case SymbolKind::TwelveJ2: return "12j2";
    case SymbolKind::FifteenJ1: return "15j1";
    case SymbolKind::FifteenJ2: return "15j2";
    case SymbolKind::FifteenJ3: return "15j3";
    case SymbolKind::FifteenJ4: return "15j4";
    case SymbolKind::FifteenJ5: return "15j5";
    case SymbolKind::EighteenJ1: return "18j1";
    case SymbolKind::EighteenJ2: return "18j2";
  }
  throw InternalError("unknown symbol kind");
}

std::optional<SymbolKind> kind_from_name(std::string_view name) {
  for (const auto kind : kAllKinds) {
    if (kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

SymbolSpec::SymbolSpec(SymbolKind kind, std::vector<HalfInt> args)
    : kind_(kind), args_(std::move(args)) {
  if (args_.size() != arity(kind_)) {
    throw DomainError(std::string(kind_name(kind_)) + " takes " +
                      std::to_string(arity(kind_)) + " arguments, got " +
                      std::to_string(args_.size()));
  }
  const std::size_t momenta = kind_ == SymbolKind::ThreeJM ? 3 : args_.size();
  require_nonnegative(std::span<const HalfInt>(args_.data(), momenta), kind_name(kind_).data());
}

Surd evaluate(const SymbolSpec& spec) {
  const auto& a = spec.args();
  const auto row = [&](std::size_t offset, std::size_t n) {
    return std::span<const HalfInt>(a.data() + offset, n);
  };
  const auto four = [&](std::size_t offset) {
    return std::array<HalfInt, 4>{a[offset], a[offset + 1], a[offset + 2], a[offset + 3]};
  };
  const auto fifteen = [&] {
    std::array<HalfInt, 15> out;
    std::copy(a.begin(), a.end(), out.begin());
    return out;
  };
  switch (spec.kind()) {
    case SymbolKind::ThreeJM:
      return wigner3jm(a[0], a[1], a[2], a[3], a[4], a[5]);
    case SymbolKind::SixJ:
      return wigner6j(a[0], a[1], a[2], a[3], a[4], a[5]);
    case SymbolKind::NineJ:
      return wigner9j(a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7], a[8]);
    case SymbolKind::TwelveJ1:
      return wigner12j_first(four(0), four(4), four(8));
    case SymbolKind::TwelveJ2:
      return wigner12j_second(four(0), four(4), four(8));
    case SymbolKind::FifteenJ1:
      return chain_3nj_first(row(0, 5), row(5, 5), row(10, 5));
    case SymbolKind::FifteenJ2:
      return chain_3nj_second(row(0, 5), row(5, 5), row(10, 5));
    case SymbolKind::FifteenJ3:
      return wigner15j_third(fifteen());
    case SymbolKind::FifteenJ4:
      return wigner15j_fourth(fifteen());
    case SymbolKind::FifteenJ5: {
      // Rows are (k k' j l l'); the function takes columns.
      const auto column = [&](std::size_t c) {
        return std::array<HalfInt, 3>{a[c], a[5 + c], a[10 + c]};
      };
      return wigner15j_fifth(column(0), column(1), column(2), column(3), column(4));
    }
    case SymbolKind::EighteenJ1:
      return chain_3nj_first(row(0, 6), row(6, 6), row(12, 6));
    case SymbolKind::EighteenJ2:
      return chain_3nj_second(row(0, 6), row(6, 6), row(12, 6));
  }
  throw InternalError("unknown symbol kind");
}

}  // namespace wigner
