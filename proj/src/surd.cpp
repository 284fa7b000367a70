#include "wigner/surd.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "wigner/errors.hpp"

namespace wigner {

namespace {

std::atomic<std::uint64_t> g_escalations{0};

// Splits n > 0 into (outside, inside) with outside^2 * inside == n and inside
// square-free. Trial division up to kTrialBound, then the leftover cofactor
// has only large prime factors: it is square-free unless it is a perfect
// square, as long as it is below kTrialBound^3.
constexpr unsigned long kTrialBound = 1UL << 16;

std::pair<BigInt, BigInt> square_free_split(BigInt n) {
  BigInt outside = 1;
  BigInt inside = 1;
  for (unsigned long p = 2; p < kTrialBound; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > n) break;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    for (unsigned long i = 0; i < e / 2; ++i) outside *= p;
    if (e % 2 == 1) inside *= p;
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
      BigInt root;
      mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
      outside *= root;
    } else {
      BigInt cube_bound = BigInt(kTrialBound) * kTrialBound * kTrialBound;
      if (n >= cube_bound) {
        throw DomainError("cannot certify radicand factor " + n.get_str() +
                          " as square-free");
      }
      inside *= n;
    }
  }
  return {outside, inside};
}

BigInt pow10(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

// 10^k as a rational, k of either sign.
BigRational pow10_rational(long k) {
  return k >= 0 ? BigRational(pow10(static_cast<unsigned long>(k)))
                : BigRational(BigInt(1), pow10(static_cast<unsigned long>(-k)));
}

double log10_of(const BigInt& n) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log10(mant) + static_cast<double>(exp2) * std::log10(2.0);
}

// Rounds sqrt(square) to `digits` significant digits. Returns the digit
// string (exactly `digits` long) and the decimal exponent of its first digit.
std::pair<std::string, long> round_sqrt(const BigRational& square, int digits) {
  // Exponent estimate, then exact correction: 10^(2E) <= square < 10^(2E+2).
  const double lg = log10_of(square.numerator()) - log10_of(square.denominator());
  long e = static_cast<long>(std::floor(lg / 2.0));
  while (pow10_rational(2 * e) > square) --e;
  while (pow10_rational(2 * e + 2) <= square) ++e;

  const long shift = digits - 1 - e;
  const BigRational scaled = square * pow10_rational(2 * shift);
  BigInt floor_scaled = scaled.numerator() / scaled.denominator();
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), floor_scaled.get_mpz_t());

  // Compare sqrt(scaled) with root + 1/2, i.e. 4 * scaled with (2 root + 1)^2.
  const BigInt twice_plus_one = 2 * root + 1;
  const int c = cmp(BigInt(4 * scaled.numerator()),
                    BigInt(twice_plus_one * twice_plus_one * scaled.denominator()));
  if (c > 0 || (c == 0 && mpz_odd_p(root.get_mpz_t()) != 0)) root += 1;

  if (root == pow10(static_cast<unsigned long>(digits))) {
    root = pow10(static_cast<unsigned long>(digits - 1));
    ++e;
  }
  return {root.get_str(), e};
}

void strip_trailing_zeros(std::string& s) {
  if (s.find('.') == std::string::npos) return;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
}

std::string layout_like_g(const std::string& mantissa, long e, int digits, bool negative) {
  std::string out;
  if (e < -4 || e >= digits) {
    out = mantissa.substr(0, 1) + "." + mantissa.substr(1);
    strip_trailing_zeros(out);
    const long a = e < 0 ? -e : e;
    out += e < 0 ? "e-" : "e+";
    if (a < 10) out += '0';
    out += std::to_string(a);
  } else if (e >= 0) {
    out = mantissa.substr(0, static_cast<std::size_t>(e) + 1) + "." +
          mantissa.substr(static_cast<std::size_t>(e) + 1);
    strip_trailing_zeros(out);
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + mantissa;
    strip_trailing_zeros(out);
  }
  return negative ? "-" + out : out;
}

void check_digits(int digits) {
  if (digits < 1) throw DomainError("digit count must be positive");
}

}  // namespace

Surd::Surd(BigRational coeff, BigRational radicand, Trusted)
    : coeff_(std::move(coeff)), radicand_(std::move(radicand)) {
  if (coeff_.is_zero()) {
    radicand_ = 1;
    return;
  }
  // Square-free radicands still leave a choice: c*sqrt(p) == (c*p)*sqrt(1/p).
  // A leftover prime goes on the side of the radicand where it sits in the
  // value squared, so p may not divide both the radicand's numerator and the
  // coefficient's denominator (or the reverse).
  const BigInt up = gcd(radicand_.numerator(), coeff_.denominator());
  const BigInt down = gcd(radicand_.denominator(), coeff_.numerator());
  if (up != 1 || down != 1) {
    coeff_ *= BigRational(up, down);
    radicand_ = BigRational(radicand_.numerator() / up * down,
                            radicand_.denominator() / down * up);
  }
}

Surd Surd::sqrt_of(const FactoredPositive& q) {
  auto [outside, inside] = sqrt_split(q);
  return Surd(std::move(outside), std::move(inside), Trusted{});
}

Surd Surd::make(BigRational coeff, const BigRational& radicand) {
  if (radicand.sign() <= 0) throw DomainError("radicand must be positive");
  if (coeff.is_zero()) return Surd();
  auto [num_out, num_in] = square_free_split(radicand.numerator());
  auto [den_out, den_in] = square_free_split(radicand.denominator());
  coeff *= BigRational(std::move(num_out), std::move(den_out));
  return Surd(std::move(coeff), BigRational(std::move(num_in), std::move(den_in)),
              Trusted{});
}

Surd Surd::in_field(BigRational a, const BigInt& field) {
  return Surd(std::move(a), BigRational(field), Trusted{});
}

double Surd::to_double() const {
  return coeff_.to_double() * std::sqrt(radicand_.to_double());
}

Surd operator*(const Surd& a, const Surd& b) {
  if (a.is_zero() || b.is_zero()) return Surd();
  // Square-free a1, a2: a1*a2 = g^2 * (a1/g)*(a2/g) with g = gcd, and the
  // cofactors are square-free and coprime. Same for the denominators.
  const BigInt g = gcd(a.radicand_.numerator(), b.radicand_.numerator());
  const BigInt h = gcd(a.radicand_.denominator(), b.radicand_.denominator());
  BigInt num = (a.radicand_.numerator() / g) * (b.radicand_.numerator() / g);
  BigInt den = (a.radicand_.denominator() / h) * (b.radicand_.denominator() / h);
  BigRational coeff = a.coeff_ * b.coeff_ * BigRational(g, h);
  return Surd(std::move(coeff), BigRational(std::move(num), std::move(den)),
              Surd::Trusted{});
}

Surd operator/(const Surd& a, const Surd& b) {
  if (b.is_zero()) throw DomainError("division of a surd by zero");
  // 1 / (c sqrt(n/d)) = (1/c) sqrt(d/n)
  const Surd inv(b.coeff_.inverse(), b.radicand_.inverse(), Surd::Trusted{});
  return a * inv;
}

Surd surd_mul(const Surd& a, const Surd& b) { return a * b; }
Surd surd_div(const Surd& a, const Surd& b) { return a / b; }

std::variant<Surd, SurdVec> surd_add(const Surd& a, const Surd& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  SurdVec v(a);
  v += b;
  if (auto s = v.single()) return *s;
  return v;
}

std::uint64_t surd_vec_escalations() { return g_escalations.load(); }
void reset_surd_vec_escalations() { g_escalations.store(0); }

SurdVec::SurdVec(const Surd& s) {
  if (!s.is_zero()) terms_.push_back(s);
}

std::optional<Surd> SurdVec::single() const {
  if (terms_.empty()) return Surd();
  if (terms_.size() == 1) return terms_.front();
  return std::nullopt;
}

SurdVec& SurdVec::operator+=(const Surd& s) {
  if (s.is_zero()) return *this;
  const BigInt field = s.field();
  const auto pos = std::lower_bound(
      terms_.begin(), terms_.end(), field,
      [](const Surd& t, const BigInt& f) { return t.field() < f; });
  if (pos != terms_.end() && pos->field() == field) {
    const Surd merged = Surd::in_field(pos->field_coeff() + s.field_coeff(), field);
    if (merged.is_zero()) {
      terms_.erase(pos);
    } else {
      *pos = merged;
    }
    return *this;
  }
  terms_.insert(pos, s);
  if (terms_.size() == 2) g_escalations.fetch_add(1);
  return *this;
}

SurdVec& SurdVec::operator+=(const SurdVec& o) {
  for (const auto& t : o.terms_) *this += t;
  return *this;
}

SurdVec SurdVec::operator-() const {
  SurdVec r = *this;
  for (auto& t : r.terms_) t = -t;
  return r;
}

SurdVec operator*(const SurdVec& a, const Surd& b) {
  SurdVec r;
  if (b.is_zero()) return r;
  // Distinct fields stay distinct after multiplying by a common factor.
  for (const auto& t : a.terms_) r.terms_.push_back(t * b);
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Surd& x, const Surd& y) { return x.field() < y.field(); });
  return r;
}

SurdVec operator*(const SurdVec& a, const SurdVec& b) {
  SurdVec r;
  for (const auto& t : b.terms_) r += a * t;
  return r;
}

double SurdVec::to_double() const {
  double sum = 0.0;
  for (const auto& t : terms_) sum += t.to_double();
  return sum;
}

std::string to_decimal(const Surd& x, int digits) {
  check_digits(digits);
  if (x.is_zero()) return "0";
  const auto [mantissa, e] = round_sqrt(x.square_abs(), digits);
  return layout_like_g(mantissa, e, digits, x.sign() < 0);
}

std::string to_decimal(const SurdVec& x, int digits) {
  check_digits(digits);
  if (auto s = x.single()) return to_decimal(*s, digits);
  double largest = 0.0;
  for (const auto& t : x.terms()) largest = std::max(largest, std::fabs(t.to_double()));
  const long shift = digits + 30 - static_cast<long>(std::floor(std::log10(largest)));
  BigInt total = 0;
  for (const auto& t : x.terms()) {
    const BigRational scaled = t.square_abs() * pow10_rational(2 * shift);
    BigInt root;
    BigInt fl = scaled.numerator() / scaled.denominator();
    mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
    total += t.sign() < 0 ? BigInt(-root) : root;
  }
  return to_decimal(Surd(BigRational(total) * pow10_rational(-shift)), digits);
}

std::string format_exact(const Surd& x, ZeroStyle zero) {
  if (x.is_zero()) return zero == ZeroStyle::Blank ? "" : "0";
  if (x.is_rational()) return x.coeff().to_string();
  return x.coeff().to_string() + "*(" + x.radicand().to_string() + ")^(1/2)";
}

std::string format_exact(const SurdVec& x, ZeroStyle zero) {
  if (x.is_zero()) return zero == ZeroStyle::Blank ? "" : "0";
  std::string out;
  for (const auto& t : x.terms()) {
    if (!out.empty() && t.sign() > 0) out += '+';
    out += format_exact(t);
  }
  return out;
}

Surd parse_surd(std::string_view text) {
  if (text.empty() || text == "0") return Surd();
  constexpr std::string_view kOpen = "*(";
  constexpr std::string_view kClose = ")^(1/2)";
  const auto open = text.find(kOpen);
  if (open == std::string_view::npos) {
    if (text.find_first_of("()^*") != std::string_view::npos) {
      throw ParseError("malformed exact value '" + std::string(text) + "'");
    }
    return Surd(BigRational::parse(text));
  }
  if (text.size() < open + kOpen.size() + kClose.size() ||
      text.substr(text.size() - kClose.size()) != kClose) {
    throw ParseError("malformed exact value '" + std::string(text) + "'");
  }
  const BigRational coeff = BigRational::parse(text.substr(0, open));
  const BigRational radicand = BigRational::parse(
      text.substr(open + kOpen.size(), text.size() - kClose.size() - open - kOpen.size()));
  if (radicand.sign() <= 0) {
    throw ParseError("non-positive radicand in '" + std::string(text) + "'");
  }
  return Surd::make(coeff, radicand);
}

}  // namespace wigner
