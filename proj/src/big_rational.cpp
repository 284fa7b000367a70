#include "wigner/big_rational.hpp"

#include <algorithm>
#include <cctype>

#include "wigner/errors.hpp"

namespace wigner {

BigRational::BigRational(BigInt numerator, BigInt denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_.get_num() = std::move(numerator);
  value_.get_den() = std::move(denominator);
  value_.canonicalize();
}

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(value_))); }

BigRational BigRational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  mpq_class inv;
  mpq_inv(inv.get_mpq_t(), value_.get_mpq_t());
  return BigRational(std::move(inv));
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigRational& BigRational::operator+=(const BigRational& o) {
  value_ += o.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
  value_ -= o.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
  value_ *= o.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string BigRational::to_string() const {
  if (is_integer()) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

BigInt parse_big_int(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  BigInt value(std::string(digits), 10);
  return text.front() == '-' ? BigInt(-value) : value;
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_big_int(text));
  const std::string_view den = text.substr(slash + 1);
  if (!den.empty() && (den.front() == '-' || den.front() == '+')) {
    throw ParseError("sign in denominator: '" + std::string(text) + "'");
  }
  BigInt d = parse_big_int(den);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return BigRational(parse_big_int(text.substr(0, slash)), std::move(d));
}

}  // namespace wigner
