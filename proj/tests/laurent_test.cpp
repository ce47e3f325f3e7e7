#include <gtest/gtest.h>

#include "knotlab/io.hpp"
#include "knotlab/laurent.hpp"
#include "oracles.hpp"

namespace knotlab {
namespace {

using P = LaurentPolynomial;

const P kTrefoil{{0, 1}, {1, -1}, {2, 1}};  // t^2 - t + 1

TEST(Laurent, CanonicalFormDropsZeros) {
  P p{{3, 0}, {1, 2}};
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ((P{{1, 2}} + P{{1, -2}}), P());
  EXPECT_TRUE((P{{1, 2}} - P{{1, 2}}).terms().empty());
}

TEST(Laurent, InvoluteExamples) {
  EXPECT_EQ(involute(P(1)), P(1));
  EXPECT_EQ(involute(kTrefoil), (P{{-2, 1}, {-1, -1}, {0, 1}}));
  const P p{{5, 3}, {-1, -2}};
  EXPECT_EQ(involute(involute(p)), p);
}

TEST(Laurent, LambdaMembershipExamples) {
  EXPECT_TRUE(lambda_membership(RationalFunction(P{{2, 1}, {0, -1}}, P{{1, 1}, {0, -1}})));
  EXPECT_FALSE(lambda_membership(RationalFunction(P::t(), kTrefoil)));
  EXPECT_FALSE(lambda_membership(RationalFunction(P{{1, Rational(1, 2)}, {0, 1}})));
}

TEST(Laurent, TorsionReduceExamples) {
  // (t-1)^2/(t^2-t+1) = 1 - t/(t^2-t+1)
  const P tm1{{1, 1}, {0, -1}};
  const TorsionClass c = torsion_reduce(RationalFunction(tm1 * tm1, kTrefoil));
  EXPECT_EQ(c, torsion_reduce(RationalFunction(-P::t(), kTrefoil)));
  EXPECT_TRUE(c.fractional_part().is_zero());
  EXPECT_EQ(c.proper_part().numerator(), -P::t());
  EXPECT_EQ(c.proper_part().denominator(), kTrefoil);

  EXPECT_TRUE(torsion_reduce(RationalFunction(P{{3, 5}})).is_zero());

  const RationalFunction inv(P(1), tm1);
  EXPECT_EQ(torsion_reduce(inv + inv), torsion_reduce(RationalFunction(P(2), tm1)));
}

TEST(Laurent, TorsionReduceKeepsNonIntegralLaurentPart) {
  const TorsionClass half = torsion_reduce(RationalFunction(P{{1, Rational(1, 2)}, {0, 1}}));
  EXPECT_FALSE(half.is_zero());
  EXPECT_EQ(half.fractional_part(), (P{{1, Rational(1, 2)}}));
  // -t/2 ≡ t/2 mod Z[t^±1]
  EXPECT_EQ(half, torsion_reduce(RationalFunction(P{{1, Rational(-1, 2)}})));
}

TEST(Laurent, TorsionReduceNegativeExponents) {
  // t^{-3}/(t^2-t+1): the representative is a polynomial of degree < 2
  const TorsionClass c = torsion_reduce(RationalFunction(P::t(-3), kTrefoil));
  EXPECT_TRUE(c.proper_part().numerator().is_polynomial());
  EXPECT_LT(c.proper_part().numerator().max_exponent(), 2);
  EXPECT_TRUE(lambda_membership(RationalFunction(P::t(-3), kTrefoil) - c.representative()));
}

TEST(Laurent, NormalizeAlexanderExamples) {
  EXPECT_EQ(normalize_alexander(-P::t(-1) * kTrefoil), kTrefoil);
  const P fig8{{0, 1}, {1, -3}, {2, 1}};
  EXPECT_EQ(normalize_alexander(fig8), fig8);
  EXPECT_EQ(normalize_alexander(P{{3, -1}, {2, 3}, {1, -1}}), fig8);
  EXPECT_EQ(normalize_alexander(normalize_alexander(P{{-4, -7}, {2, 1}})), normalize_alexander(P{{-4, -7}, {2, 1}}));
  EXPECT_THROW(normalize_alexander(P()), DegenerateError);
}

TEST(Laurent, DivisionAndGcd) {
  const P a{{4, 1}, {0, -1}}, b{{2, 1}, {0, -1}};
  const auto [q, r] = poly_divmod(a, b);
  EXPECT_EQ(q, (P{{2, 1}, {0, 1}}));
  EXPECT_TRUE(r.is_zero());

  const GcdResult g = laurent_ext_gcd(P{{1, 1}, {0, -1}}.shifted(-3), kTrefoil.shifted(2));
  EXPECT_TRUE(g.gcd.is_one());
  EXPECT_EQ((g.x * P{{1, 1}, {0, -1}}.shifted(-3) + g.y * kTrefoil.shifted(2)), g.gcd);

  EXPECT_EQ(exact_divide(kTrefoil * P{{1, 2}, {-1, 1}}, kTrefoil.shifted(4)), (P{{1, 2}, {-1, 1}}.shifted(-4)));
  EXPECT_THROW(exact_divide(P::t(), kTrefoil), std::domain_error);
}

TEST(Laurent, LaurentDivmodRemainderIsCanonical) {
  testing::Generator gen(7);
  for (int trial = 0; trial < 300; ++trial) {
    P s = gen.laurent(0, 3, 4, 3);
    if (s.is_zero() || s.coefficient(0) == 0) continue;
    const P a = gen.laurent(-6, 6, 9, 5);
    const auto [q, r] = laurent_divmod(a, s);
    EXPECT_EQ(q * s + r, a);
    EXPECT_TRUE(r.is_polynomial());
    if (!r.is_zero()) {
      EXPECT_LT(r.max_exponent(), s.max_exponent());
    }
  }
}

TEST(LaurentProperty, RingAxioms) {
  testing::Generator gen(20240601);
  for (int trial = 0; trial < 1000; ++trial) {
    const P a = gen.laurent(-8, 8, 9, 5), b = gen.laurent(-8, 8, 9, 5), c = gen.laurent(-8, 8, 9, 5);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a - a, P());
  }
}

TEST(LaurentProperty, InvoluteIsRingAutomorphism) {
  testing::Generator gen(99);
  for (int trial = 0; trial < 500; ++trial) {
    const P a = gen.laurent(-8, 8, 9, 5), b = gen.laurent(-8, 8, 9, 5);
    ASSERT_EQ(involute(a * b), involute(a) * involute(b));
    ASSERT_EQ(involute(a + b), involute(a) + involute(b));
    ASSERT_EQ(involute(involute(a)), a);
  }
}

TEST(LaurentProperty, TorsionReduceIsAdditiveAndDetectsLambda) {
  testing::Generator gen(4242);
  for (int trial = 0; trial < 400; ++trial) {
    const RationalFunction f = gen.rational_function(), g = gen.rational_function();
    const TorsionClass rf = torsion_reduce(f), rg = torsion_reduce(g);
    ASSERT_EQ(torsion_reduce(f + g), torsion_reduce(rf.representative() + rg.representative()));
    ASSERT_EQ(torsion_reduce(rf.representative()), rf);  // idempotent
    ASSERT_EQ(lambda_membership(f), rf.is_zero());
    ASSERT_TRUE(lambda_membership(f - rf.representative()));
  }
}

TEST(LaurentProperty, MembershipOnLaurentInputs) {
  testing::Generator gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const P p = gen.laurent(-5, 5, 9, 4);
    ASSERT_TRUE(lambda_membership(RationalFunction(p)));
    ASSERT_TRUE(torsion_reduce(RationalFunction(p)).is_zero());
    const RationalFunction halved(Rational(1, 2) * p);
    // p/2 ∈ Z[t^±1] iff every coefficient is even
    bool even = true;
    for (const auto& [e, c] : p.terms()) even = even && c.get_num() % 2 == 0;
    ASSERT_EQ(lambda_membership(halved), even);
  }
}

TEST(LaurentJson, SparseExponentCoefficientList) {
  const P p = polynomial_from_json(json::parse(R"({"-1": "2", "3": "-5"})"));
  EXPECT_EQ(p, (P{{-1, 2}, {3, -5}}));
  EXPECT_EQ(to_json(p), json::parse(R"({"-1": "2", "3": "-5"})"));
  EXPECT_EQ(polynomial_from_json(to_json(P{{2, Rational(-7, 3)}})), (P{{2, Rational(-7, 3)}}));
  EXPECT_THROW(polynomial_from_json(json::parse(R"({"x": "1"})")), std::invalid_argument);
  EXPECT_THROW(polynomial_from_json(json::parse(R"({"1": 2})")), std::invalid_argument);
  EXPECT_THROW(polynomial_from_json(json::parse(R"({"1": "1/0"})")), std::invalid_argument);
}

TEST(LaurentJson, RoundTripProperty) {
  testing::Generator gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const P p = Rational(1, gen.integer(1, 6)) * gen.laurent(-8, 8, 9, 6);
    ASSERT_EQ(polynomial_from_json(json::parse(to_json(p).dump())), p);
  }
}

TEST(LaurentText, AscendingWithNegativePowers) {
  EXPECT_EQ(to_string(P{{-1, 2}, {3, -5}}), "2t^-1 - 5t^3");
  EXPECT_EQ(to_string(kTrefoil), "1 - t + t^2");
  EXPECT_EQ(to_string(P()), "0");
  EXPECT_EQ(to_string(P{{1, Rational(-1, 2)}}), "-(1/2)t");
}

}  // namespace
}  // namespace knotlab
