#include <gtest/gtest.h>

#include <variant>

#include "test_support.hpp"
#include "wigner/errors.hpp"
#include "wigner/surd.hpp"

namespace wigner {
namespace {

using testing::canonical;

BigRational q(long n, long d = 1) { return BigRational(BigInt(n), BigInt(d)); }
Surd s(long n, long d, long rn, long rd = 1) { return Surd::make(q(n, d), q(rn, rd)); }
Surd root(long r) { return s(1, 1, r); }

TEST(Surd, ZeroIsUnique) {
  const Surd z = Surd::make(q(0), q(7, 3));
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z, Surd());
  EXPECT_EQ(z.radicand(), q(1));
}

TEST(Surd, MakeRemovesSquares) {
  const Surd x = Surd::make(q(1), q(60));
  EXPECT_EQ(x.coeff(), q(2));
  EXPECT_EQ(x.radicand(), q(15));
  const Surd y = Surd::make(q(1), q(8, 27));
  EXPECT_EQ(y.coeff(), q(2, 3));
  EXPECT_EQ(y.radicand(), q(2, 3));
  EXPECT_THROW(Surd::make(q(1), q(-2)), DomainError);
}

TEST(Surd, LeftoverPrimeFollowsTheValue) {
  // 7/600 * sqrt(1/21) and 1/600 * sqrt(7/3) are the same number.
  const Surd a = s(7, 600, 1, 21);
  EXPECT_EQ(a.coeff(), q(1, 600));
  EXPECT_EQ(a.radicand(), q(7, 3));
  EXPECT_EQ(a, s(1, 600, 7, 3));
  EXPECT_TRUE(canonical(a));
}

TEST(SurdMul, Examples) {
  EXPECT_EQ(root(2) * root(2), Surd(2));
  EXPECT_TRUE((root(2) * root(2)).is_rational());
  const Surd t = s(-7, 3000, 7, 3);
  EXPECT_EQ(surd_mul(t, Surd(1)), t);
  EXPECT_EQ(root(6) * root(10), s(2, 1, 15));
  EXPECT_EQ(root(2) * Surd(), Surd());
}

TEST(SurdDiv, Examples) {
  EXPECT_EQ(s(2, 1, 3) / root(3), Surd(2));
  const Surd x = s(-5, 7, 11, 13);
  EXPECT_EQ(x / x, Surd(1));
  EXPECT_EQ(s(1, 1, 7, 3) / root(3), s(1, 3, 7));
  EXPECT_THROW(surd_div(x, Surd()), DomainError);
}

TEST(SurdAdd, SameField) {
  const auto r = surd_add(s(1, 2, 5), s(1, 3, 5));
  ASSERT_TRUE(std::holds_alternative<Surd>(r));
  EXPECT_EQ(std::get<Surd>(r), s(5, 6, 5));
}

TEST(SurdAdd, SameFieldDifferentRadicand) {
  // sqrt(7/3) and sqrt(1/21) both lie in Q(sqrt 21).
  const auto r = surd_add(root(1) * s(1, 1, 7, 3), s(1, 1, 1, 21));
  ASSERT_TRUE(std::holds_alternative<Surd>(r));
  EXPECT_EQ(std::get<Surd>(r), s(8, 7, 7, 3));
}

TEST(SurdAdd, ZeroIdentityAndCancellation) {
  const Surd x = s(3, 4, 2, 5);
  EXPECT_EQ(std::get<Surd>(surd_add(x, Surd())), x);
  EXPECT_EQ(std::get<Surd>(surd_add(Surd(), x)), x);
  EXPECT_EQ(std::get<Surd>(surd_add(x, -x)), Surd());
}

TEST(SurdAdd, DistinctFieldsEscalate) {
  reset_surd_vec_escalations();
  const auto r = surd_add(root(2), root(3));
  ASSERT_TRUE(std::holds_alternative<SurdVec>(r));
  const auto& v = std::get<SurdVec>(r);
  ASSERT_EQ(v.terms().size(), 2u);
  EXPECT_EQ(v.terms()[0], root(2));
  EXPECT_EQ(v.terms()[1], root(3));
  EXPECT_EQ(surd_vec_escalations(), 1u);
  EXPECT_EQ(format_exact(v), "1*(2)^(1/2)+1*(3)^(1/2)");
  EXPECT_EQ(to_decimal(v), "3.14626436994");
}

TEST(SurdVec, MergesAndDropsZeros) {
  SurdVec v(root(2));
  v += root(3);
  v += -root(2);
  ASSERT_EQ(v.terms().size(), 1u);
  EXPECT_EQ(*v.single(), root(3));
  v += -root(3);
  EXPECT_TRUE(v.is_zero());
  EXPECT_EQ(*v.single(), Surd());
}

TEST(SurdVec, ProductDistributes) {
  SurdVec a(root(2));
  a += root(3);
  const SurdVec sq = a * a;  // 5 + 2 sqrt 6
  ASSERT_EQ(sq.terms().size(), 2u);
  EXPECT_EQ(sq.terms()[0], Surd(5));
  EXPECT_EQ(sq.terms()[1], s(2, 1, 6));
  EXPECT_NEAR(sq.to_double(), 5 + 2 * std::sqrt(6.0), 1e-12);
}

TEST(ToDecimal, Examples) {
  EXPECT_EQ(to_decimal(Surd(q(1, 54))), "0.0185185185185");
  EXPECT_EQ(to_decimal(s(-7, 3000, 7, 3)), "-0.00356422554052");
  EXPECT_EQ(to_decimal(Surd()), "0");
  EXPECT_EQ(to_decimal(Surd(1)), "1");
  EXPECT_EQ(to_decimal(root(2), 5), "1.4142");
  EXPECT_EQ(to_decimal(Surd(q(1, 100000)), 3), "1e-05");
  EXPECT_EQ(to_decimal(Surd(123456), 3), "1.23e+05");
  EXPECT_EQ(to_decimal(Surd(q(99999, 100000)), 3), "1");
}

TEST(ToDecimal, ExactTiesRoundHalfEven) {
  EXPECT_EQ(to_decimal(Surd(q(1, 8)), 2), "0.12");
  EXPECT_EQ(to_decimal(Surd(q(3, 8)), 2), "0.38");
  EXPECT_EQ(to_decimal(Surd(q(-25, 2)), 2), "-12");
}

TEST(ToDecimal, ManyDigits) {
  const std::string d = to_decimal(root(2), 60);
  EXPECT_EQ(d, "1.41421356237309504880168872420969807856967187537694807317668");
  EXPECT_THROW(to_decimal(root(2), 0), DomainError);
}

TEST(FormatExact, Grammar) {
  EXPECT_EQ(format_exact(Surd(q(1, 54))), "1/54");
  EXPECT_EQ(format_exact(Surd(-3)), "-3");
  EXPECT_EQ(format_exact(s(-1025, 3841992, 5, 13)), "-1025/3841992*(5/13)^(1/2)");
  EXPECT_EQ(format_exact(s(1, 572572, 57)), "1/572572*(57)^(1/2)");
  EXPECT_EQ(format_exact(Surd(), ZeroStyle::Blank), "");
  EXPECT_EQ(format_exact(Surd(), ZeroStyle::Digit), "0");
}

TEST(ParseSurd, InvertsFormat) {
  for (const char* text : {"1/54", "-3", "-1025/3841992*(5/13)^(1/2)", "1/572572*(57)^(1/2)",
                           "-28068059458324/13772930246561475*(2/1431494295)^(1/2)"}) {
    EXPECT_EQ(format_exact(parse_surd(text)), text);
  }
  EXPECT_EQ(parse_surd(""), Surd());
  EXPECT_EQ(parse_surd("0"), Surd());
  EXPECT_EQ(parse_surd("7/600*(1/21)^(1/2)"), s(1, 600, 7, 3));
}

TEST(ParseSurd, RejectsMalformed) {
  for (const char* text : {"1*(2)", "1*(2)^(1/3)", "(2)^(1/2)", "1/2*(-3)^(1/2)", "x"}) {
    EXPECT_THROW(parse_surd(text), ParseError) << text;
  }
}

TEST(SurdProperties, RandomOperations) {
  const auto t = testing::surd_property_trials(3000, 7);
  EXPECT_EQ(t.failures, 0) << t.first_failure;
}

TEST(SurdProperties, FormatParseIdentity) {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Surd x = testing::random_surd(rng);
    ASSERT_TRUE(canonical(x));
    ASSERT_EQ(parse_surd(format_exact(x)), x) << format_exact(x);
  }
}

}  // namespace
}  // namespace wigner
