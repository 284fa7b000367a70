#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wigner/big_rational.hpp"
#include "wigner/factored.hpp"

namespace wigner {

/// coeff * sqrt(radicand), with radicand a positive rational whose numerator
/// and denominator are each square-free (they are coprime by lowest terms).
/// Zero is uniquely (0, 1); rational values carry radicand 1.
///
/// A prime left under the root sits on the same side (numerator or
/// denominator) as in the value squared: 1/600*(7/3)^(1/2), never
/// 7/600*(1/21)^(1/2). This makes the representation unique.
///
/// Every Wigner symbol evaluates to one of these.
class Surd {
 public:
  Surd() = default;
  Surd(BigRational rational) : coeff_(std::move(rational)) {}  // NOLINT(implicit)
  Surd(long value) : coeff_(value) {}                          // NOLINT(implicit)

  /// sqrt(q), exactly, via parity of the prime exponents.
  static Surd sqrt_of(const FactoredPositive& q);

  /// coeff * sqrt(radicand) for an arbitrary positive radicand. Square factors
  /// are removed by trial division; throws DomainError if the radicand is not
  /// positive or is too large to certify square-free that way.
  static Surd make(BigRational coeff, const BigRational& radicand);

  const BigRational& coeff() const { return coeff_; }
  const BigRational& radicand() const { return radicand_; }

  bool is_zero() const { return coeff_.is_zero(); }
  bool is_rational() const { return radicand_ == BigRational(1); }
  int sign() const { return coeff_.sign(); }

  /// coeff^2 * radicand, the square of the absolute value.
  BigRational square_abs() const { return coeff_ * coeff_ * radicand_; }

  /// Square-free integer naming the quadratic field Q(sqrt(field())).
  BigInt field() const { return radicand_.numerator() * radicand_.denominator(); }
  /// a with value == a * sqrt(field()).
  BigRational field_coeff() const { return coeff_ / BigRational(radicand_.denominator()); }
  /// a * sqrt(field) for a square-free positive integer field.
  static Surd in_field(BigRational a, const BigInt& field);

  double to_double() const;

  Surd operator-() const { return Surd(-coeff_, radicand_, Trusted{}); }
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator/(const Surd& a, const Surd& b);
  Surd& operator*=(const Surd& o) { return *this = *this * o; }
  Surd& operator/=(const Surd& o) { return *this = *this / o; }

  friend bool operator==(const Surd&, const Surd&) = default;

 private:
  struct Trusted {};
  Surd(BigRational coeff, BigRational radicand, Trusted);
  friend class SurdVec;

  BigRational coeff_;
  BigRational radicand_ = 1;
};

/// A sum of Surds from pairwise-distinct quadratic fields, ordered by field.
/// Empty means zero. Used when an addition crosses quadratic fields.
class SurdVec {
 public:
  SurdVec() = default;
  explicit SurdVec(const Surd& s);

  const std::vector<Surd>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// The single Surd this equals, if it has at most one term.
  std::optional<Surd> single() const;

  SurdVec& operator+=(const Surd& s);
  SurdVec& operator+=(const SurdVec& o);
  SurdVec operator-() const;
  friend SurdVec operator+(SurdVec a, const SurdVec& b) { return a += b; }
  friend SurdVec operator*(const SurdVec& a, const Surd& b);
  friend SurdVec operator*(const SurdVec& a, const SurdVec& b);

  double to_double() const;

  friend bool operator==(const SurdVec&, const SurdVec&) = default;

 private:
  std::vector<Surd> terms_;
};

/// Number of times any SurdVec grew past one term through addition, i.e. a
/// sum left a single quadratic field. Process-wide.
std::uint64_t surd_vec_escalations();
void reset_surd_vec_escalations();

Surd surd_mul(const Surd& a, const Surd& b);
/// Throws DomainError when b is zero.
Surd surd_div(const Surd& a, const Surd& b);
/// A Surd when both sides lie in one quadratic field or either is zero, else
/// a two-term SurdVec.
std::variant<Surd, SurdVec> surd_add(const Surd& a, const Surd& b);

inline constexpr int kDefaultDigits = 12;

/// Correctly rounded decimal with `digits` significant digits, laid out like
/// printf's %g: plain below 1e-4 <= |v| < 10^digits, otherwise d.ddde-XX,
/// trailing zeros dropped. Zero prints as "0".
std::string to_decimal(const Surd& x, int digits = kDefaultDigits);

/// Decimal of a multi-field sum. Each term is approximated with 30 guard
/// digits before summing, so heavy cancellation can cost accuracy.
std::string to_decimal(const SurdVec& x, int digits = kDefaultDigits);

enum class ZeroStyle {
  Blank,  // table cells: zero is an empty string
  Digit,  // command line: zero is "0"
};

/// "p/q", "p", "p/q*(r/s)^(1/2)" or "p/q*(r)^(1/2)", with a leading '-' for
/// negative values.
std::string format_exact(const Surd& x, ZeroStyle zero = ZeroStyle::Digit);

/// Terms of format_exact joined by their signs, e.g. "1*(2)^(1/2)+1*(3)^(1/2)".
std::string format_exact(const SurdVec& x, ZeroStyle zero = ZeroStyle::Digit);

/// Inverse of format_exact for a single Surd; "" and "0" both give zero.
/// Throws ParseError on malformed text.
Surd parse_surd(std::string_view text);

}  // namespace wigner
