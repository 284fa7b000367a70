#pragma once

#include <array>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>

#include "wigner/half_int.hpp"
#include "wigner/surd.hpp"

namespace wigner {

using Triad = std::array<HalfInt, 3>;
using Pair = std::pair<HalfInt, HalfInt>;

/// Doubled bounds of a summation variable x, stepping by 2 (x by 1).
struct TwiceRange {
  int lo = 0;
  int hi = -1;
  bool empty() const { return lo > hi; }
};

/// Values of x that make every triad (a, b, x) a triangle: the intersection
/// of [|a-b|, a+b] over all pairs, empty if the pairs disagree on whether x
/// is integer or half-integer.
TwiceRange coupling_range(std::span<const Pair> pairs);
inline TwiceRange coupling_range(std::initializer_list<Pair> pairs) {
  return coupling_range(std::span<const Pair>(pairs.begin(), pairs.size()));
}

bool all_triangles(std::span<const Triad> triads);
inline bool all_triangles(std::initializer_list<Triad> triads) {
  return all_triangles(std::span<const Triad>(triads.begin(), triads.size()));
}

/// Thrown when a symbol's terms do not sum into a single quadratic field.
/// Carries the exact multi-field value; the escalation counter has already
/// recorded the event.
class MixedFieldError : public std::runtime_error {
 public:
  explicit MixedFieldError(SurdVec value)
      : std::runtime_error("sum spans several quadratic fields"), value_(std::move(value)) {}
  const SurdVec& value() const { return value_; }

 private:
  SurdVec value_;
};

/// Accumulates the terms of a symbol expansion.
class TermSum {
 public:
  void add(const Surd& term) { sum_ += term; }
  /// The single-field total; throws MixedFieldError otherwise.
  Surd result() const {
    if (auto s = sum_.single()) return *s;
    throw MixedFieldError(sum_);
  }

 private:
  SurdVec sum_;
};

/// 2x+1 from the doubled value of x.
inline Surd multiplicity(int twice_x) { return Surd(static_cast<long>(twice_x) + 1); }

/// Sign as a Surd factor.
inline Surd signed_one(int sign) { return Surd(static_cast<long>(sign)); }

/// Throws DomainError if any momentum is negative; `what` names the symbol.
void require_nonnegative(std::span<const HalfInt> momenta, const char* what);
inline void require_nonnegative(std::initializer_list<HalfInt> momenta, const char* what) {
  require_nonnegative(std::span<const HalfInt>(momenta.begin(), momenta.size()), what);
}

}  // namespace wigner
