#include <gtest/gtest.h>

#include <gmpxx.h>

#include "grossone/numio.hpp"
#include "grossone/summation.hpp"
#include "support/generators.hpp"
#include "test_helpers.hpp"

namespace grossone {
namespace {

using testing::G;
using testing::Q;
using grossone::testing::to_mpq;

// Oracle: B_n from sum_{j=0}^{n} C(n+1, j) B_j = n + 1 (B_1 = +1/2), in GMP rationals.
std::vector<mpq_class> bernoulli_by_recurrence(unsigned n_max) {
  std::vector<mpq_class> b;
  for (unsigned n = 0; n <= n_max; ++n) {
    mpq_class acc = 0;
    mpz_class c = 1;  // C(n+1, j)
    for (unsigned j = 0; j < n; ++j) {
      acc += mpq_class(c) * b[j];
      c = c * (n + 1 - j) / (j + 1);
    }
    mpq_class bn = (mpq_class(n + 1) - acc) / mpq_class(c);
    bn.canonicalize();
    b.push_back(bn);
  }
  return b;
}

TEST(Bernoulli, KnownValues) {
  EXPECT_EQ(bernoulli(0), Rational(1));
  EXPECT_EQ(bernoulli(1), Q("1/2"));
  EXPECT_EQ(bernoulli(2), Q("1/6"));
  EXPECT_EQ(bernoulli(3), Rational(0));
  EXPECT_EQ(bernoulli(4), Q("-1/30"));
  EXPECT_EQ(bernoulli(12), Q("-691/2730"));
}

TEST(Bernoulli, MatchesRecurrenceOracle) {
  auto oracle = bernoulli_by_recurrence(40);
  for (unsigned n = 0; n <= 40; ++n) EXPECT_EQ(to_mpq(bernoulli(n)), oracle[n]) << n;
}

TEST(Faulhaber, AgreesWithBruteForceThenEvaluatesAtGrossone) {
  for (unsigned j = 0; j <= 6; ++j) {
    mpq_class acc = 0;
    for (long k = 0; k <= 200; ++k) {
      if (k > 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k), j);
        acc += p;
      }
      ASSERT_EQ(to_mpq(*faulhaber(j, GrossNumber(k)).as_rational()), acc) << j << " " << k;
    }
  }
  EXPECT_EQ(faulhaber(1, GrossNumber::grossone()), G("0.5*G1^{2} + 0.5*G1"));
  EXPECT_EQ(faulhaber(0, G("G1 - 1")), G("G1 - 1"));
  EXPECT_EQ(faulhaber(1, GrossNumber(100)), GrossNumber(5050));
  EXPECT_EQ(faulhaber(2, GrossNumber::grossone()), G("1/3*G1^{3} + 0.5*G1^{2} + 1/6*G1"));
}

PolynomialSummand poly(const char* text) { return polynomial_from_ast(*parse_expression(text), "i"); }

TEST(SumPolynomial, PaperIntermediates) {
  EXPECT_EQ(sum_polynomial(poly("i"), G("G1")), G("0.5*G1^{2} + 0.5*G1"));
  EXPECT_EQ(sum_polynomial(poly("2*i - 1"), G("0.5*G1")), G("0.25*G1^{2}"));
  EXPECT_EQ(sum_polynomial(poly("2*i"), G("0.5*G1")), G("0.25*G1^{2} + 0.5*G1"));
}

TEST(SumAlternatingUnit, Parity) {
  EXPECT_TRUE(sum_alternating_unit(G("2*G1")).is_zero());
  EXPECT_EQ(sum_alternating_unit(G("2*G1 - 1")), GrossNumber(1));
  EXPECT_EQ(sum_alternating_unit(GrossNumber(5)), GrossNumber(1));
  EXPECT_ERROR_KIND(sum_alternating_unit(G("G1 + G1^{-1}")), ErrorKind::ParityUndefined);
}

TEST(SumAlternatingPolynomial, AlternatingSumOfIndex) {
  PolynomialSummand id = PolynomialSummand::identity();
  EXPECT_EQ(sum_alternating_polynomial(id, G("G1")), G("-0.5*G1"));
  EXPECT_EQ(sum_alternating_polynomial(id, G("G1 - 1")), G("0.5*G1"));
  EXPECT_EQ(sum_alternating_polynomial(id, G("G1 + 1")), G("0.5*G1 + 1"));
  AlternatingSplit s = alternating_split(id, G("G1"));
  EXPECT_EQ(s.odd_items, G("0.5*G1"));
  EXPECT_EQ(s.even_items, G("0.5*G1"));
  EXPECT_EQ(s.odd_sum, G("0.25*G1^{2}"));
  EXPECT_EQ(s.even_sum, G("0.25*G1^{2} + 0.5*G1"));
  EXPECT_ERROR_KIND(sum_alternating_polynomial(id, G("G1^{-1}")), ErrorKind::ParityUndefined);
}

TEST(SumFiniteGeneric, DirectIteration) {
  Env env;
  EXPECT_EQ(sum_finite_generic(*parse_expression("(-1)^(i+1)*i"), "i", 7, env), GrossNumber(4));
  EXPECT_EQ(sum_alternating_polynomial(PolynomialSummand::identity(), GrossNumber(7)), GrossNumber(4));
  EXPECT_EQ(sum_finite_generic(*parse_expression("i^2"), "i", 10, env), GrossNumber(385));
  EXPECT_TRUE(sum_finite_generic(*parse_expression("1"), "i", 0, env).is_zero());
}

TEST(PolynomialFromAst, Extraction) {
  Env env;
  env.bind("c", G("G1"));
  PolynomialSummand p = polynomial_from_ast(*parse_expression("c*i^2 - (i + 1)/2 + G1^{-1}"), "i", env);
  ASSERT_EQ(p.degree(), 2u);
  EXPECT_EQ(p.coefficient(0), G("-0.5 + G1^{-1}"));
  EXPECT_EQ(p.coefficient(1), G("-0.5"));
  EXPECT_EQ(p.coefficient(2), G("G1"));
  EXPECT_TRUE(poly("i - i").is_zero());
  EXPECT_ERROR_KIND(poly("2^i"), ErrorKind::UnsupportedSummand);
  EXPECT_ERROR_KIND(poly("1/i"), ErrorKind::UnsupportedSummand);
  EXPECT_ERROR_KIND(poly("i^G1"), ErrorKind::UnsupportedSummand);
  EXPECT_ERROR_KIND(poly("i^(1/2)"), ErrorKind::UnsupportedSummand);
  EXPECT_ERROR_KIND(poly("i < 3"), ErrorKind::UnsupportedSummand);
}

TEST(PolynomialSummand, ComposeAndShift) {
  PolynomialSummand p = poly("i^2 + 3*i");
  EXPECT_EQ(p.compose_affine(GrossNumber(2), GrossNumber(-1)), poly("4*i^2 + 2*i - 2"));
  EXPECT_EQ(p.shifted(GrossNumber(1)), poly("i^2 + 5*i + 4"));
  EXPECT_EQ(p(G("G1")), G("G1^{2} + 3*G1"));
}

TEST(Summation, SplittingIdentity) {
  grossone::testing::Gen gen(99);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<GrossNumber> c;
    for (int j = 0; j <= gen.uniform(0, 4); ++j) c.push_back(GrossNumber(gen.small_rational(false)));
    PolynomialSummand p(c);
    GrossNumber k = add(scalar_mul(Rational(gen.uniform(1, 3)), GrossNumber::grossone()),
                        GrossNumber(gen.uniform(-5, 5)));
    GrossNumber m(gen.uniform(0, 30));
    GrossNumber whole = sum_polynomial(p, k);
    GrossNumber head = sum_polynomial(p, m);
    GrossNumber tail = sum_polynomial(p.shifted(m), subtract(k, m));
    ASSERT_EQ(whole, add(head, tail));
  }
}

TEST(Summation, Linearity) {
  grossone::testing::Gen gen(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<GrossNumber> pc, qc;
    for (int j = 0; j < 4; ++j) {
      pc.push_back(gen.gross(2, 2));
      qc.push_back(gen.gross(2, 2));
    }
    PolynomialSummand p(pc), q(qc);
    GrossNumber a = gen.gross(2, 2), b = gen.gross(2, 2);
    GrossNumber k = gen.gross(2, 3);
    GrossNumber lhs = sum_polynomial(p.scaled(a) + q.scaled(b), k);
    GrossNumber rhs = add(multiply(a, sum_polynomial(p, k)), multiply(b, sum_polynomial(q, k)));
    ASSERT_EQ(lhs, rhs);
  }
}

}  // namespace
}  // namespace grossone
