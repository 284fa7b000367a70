#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wigner {

using BigInt = mpz_class;

/// Unlimited-precision rational, always in lowest terms with a positive
/// denominator. The sign lives on the numerator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT(implicit)
  BigRational(const BigInt& value) : value_(value) {}  // NOLINT(implicit)
  BigRational(BigInt numerator, BigInt denominator);

  const BigInt& numerator() const { return value_.get_num(); }
  const BigInt& denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return denominator() == 1; }

  BigRational abs() const;
  /// Multiplicative inverse; throws DomainError for zero.
  BigRational inverse() const;

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  double to_double() const { return value_.get_d(); }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  /// Accepts "p" or "p/q" with an optional leading sign; throws ParseError.
  static BigRational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }

 private:
  explicit BigRational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_;
};

/// Parses a signed decimal integer with no surrounding whitespace.
BigInt parse_big_int(std::string_view text);

}  // namespace wigner
