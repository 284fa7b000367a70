#pragma once

#include <compare>
#include <cstdlib>
#include <string>

#include "wigner/errors.hpp"

namespace wigner {

/// An element of (1/2)Z, stored as its doubled integer so that spins and
/// projections such as 7/2 are exact.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt{twice, 0}; }
  static constexpr HalfInt from_int(int value) { return HalfInt{2 * value, 0}; }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_negative() const { return twice_ < 0; }

  /// Integer value; throws if this is a proper half-integer.
  int as_int() const {
    if (!is_integer()) {
      throw InternalError("HalfInt " + to_string() + " is not an integer");
    }
    return twice_ / 2;
  }

  /// Canonical fraction form: "4", "7/2", "-1/2".
  std::string to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  constexpr HalfInt(int twice, int) : twice_{twice} {}
  int twice_ = 0;
};

/// Shorthand for building momenta in code and tests: hi(7, 2) == 7/2.
constexpr HalfInt hi(int numerator, int denominator = 1) {
  return denominator == 2 ? HalfInt::from_twice(numerator)
                          : HalfInt::from_int(numerator);
}

/// Sign of (-1)^e given the doubled exponent 2e. An odd doubled exponent
/// means e is a half-integer, which the selection rules exclude; hitting it
/// is a bug in the caller.
inline int phase_from_twice(long twice_exponent) {
  const long residue = ((twice_exponent % 4) + 4) % 4;
  if (residue == 0) return 1;
  if (residue == 2) return -1;
  throw InternalError("phase exponent " + std::to_string(twice_exponent) +
                      "/2 is not an integer");
}

}  // namespace wigner
