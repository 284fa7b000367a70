#include "wigner/summation.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "wigner/coupling.hpp"
#include "wigner/errors.hpp"

namespace wigner {

TwiceRange coupling_range(std::span<const Pair> pairs) {
  TwiceRange r{0, 0};
  bool first = true;
  int parity = 0;
  for (const auto& [a, b] : pairs) {
    const int lo = std::abs(a.twice() - b.twice());
    const int hi = a.twice() + b.twice();
    if (first) {
      r = {lo, hi};
      parity = hi % 2;
      first = false;
      continue;
    }
    if (hi % 2 != parity) return {};
    r.lo = std::max(r.lo, lo);
    r.hi = std::min(r.hi, hi);
  }
  return r;
}

bool all_triangles(std::span<const Triad> triads) {
  return std::all_of(triads.begin(), triads.end(),
                     [](const Triad& t) { return triangle_ok(t[0], t[1], t[2]); });
}

void require_nonnegative(std::span<const HalfInt> momenta, const char* what) {
  for (const auto j : momenta) {
    if (j.is_negative()) {
      throw DomainError(std::string(what) + ": negative angular momentum " + j.to_string());
    }
  }
}

}  // namespace wigner
