#include <gtest/gtest.h>

#include "grossone/eval.hpp"
#include "grossone/numio.hpp"
#include "test_helpers.hpp"

namespace grossone {
namespace {

using testing::G;

class PiecewiseFunctions : public ::testing::Test {
 protected:
  void SetUp() override {
    auto def = std::get<PiecewiseDef>(
        parse_statement("def f(x) = { 2*x if x < 0; 1 if x = 0; x^3 if x > 0 }"));
    f_ = make_piecewise(def, env_);
    env_.define("f", f_);
    env_.define("g", LambdaFn{{"y"}, parse_expression("y")});
  }

  GrossNumber eval(std::string_view text) { return evaluate(*parse_expression(text), env_); }

  Env env_;
  PiecewiseFn f_;
};

TEST_F(PiecewiseFunctions, ProductsAtInfinitesimalAndInfinitePoints) {
  EXPECT_EQ(eval("f(G1^{-1}) * g(G1)"), G("G1^{-2}"));
  EXPECT_EQ(eval("f(G1^{-1}) * g(G1^{4})"), G("G1"));
  EXPECT_EQ(eval("f(-2*G1^{-1}) * g(G1)"), G("-4"));
}

TEST_F(PiecewiseFunctions, BranchSelection) {
  EXPECT_EQ(apply_piecewise(f_, G("-2*G1^{-1}"), env_), G("-4*G1^{-1}"));
  EXPECT_EQ(apply_piecewise(f_, GrossNumber(), env_), GrossNumber(1));
  EXPECT_EQ(apply_piecewise(f_, G("G1^{-1}"), env_), G("G1^{-3}"));
  EXPECT_EQ(apply_piecewise(f_, G("G1 + 1"), env_), G("G1^{3} + 3*G1^{2} + 3*G1 + 1"));
}

TEST_F(PiecewiseFunctions, CompoundExpression) {
  const char* expr = "f(a + z2) * (g(y1) / f(a + z1) - 1.25*g(y2)^3)";
  env_.bind("a", GrossNumber());
  env_.bind("z1", G("-2*G1^{-1}"));
  env_.bind("z2", G("-5*G1^{-4}"));
  env_.bind("y1", G("G1^{2}"));
  env_.bind("y2", G("G1"));
  EXPECT_EQ(evaluate_compound(*parse_expression(expr), env_), G("15*G1^{-1}"));
  EXPECT_EQ(eval("g(y1) / f(a + z1)"), G("-0.25*G1^{3}"));
}

TEST_F(PiecewiseFunctions, FiniteInputsMatchRationalArithmetic) {
  // Same expression at finite points, checked against hand-computed rationals:
  // z1=-1/2 -> f=-1, z2=1/2 -> f=1/8, y1=3, y2=2 -> 1/8 * (3/(-1) - 1.25*8) = -13/8.
  env_.bind("a", GrossNumber());
  env_.bind("z1", G("-1/2"));
  env_.bind("z2", G("1/2"));
  env_.bind("y1", G("3"));
  env_.bind("y2", G("2"));
  EXPECT_EQ(eval("f(a + z2) * (g(y1) / f(a + z1) - 1.25*g(y2)^3)"), G("-13/8"));
}

TEST(Evaluate, Errors) {
  Env env;
  EXPECT_ERROR_KIND(evaluate(*parse_expression("q + 1"), env), ErrorKind::UnboundName);
  EXPECT_ERROR_KIND(evaluate(*parse_expression("h(1)"), env), ErrorKind::UnboundName);
  EXPECT_ERROR_KIND(evaluate(*parse_expression("1/0"), env), ErrorKind::DivisionByZero);
  EXPECT_ERROR_KIND(evaluate(*parse_expression("2^G1"), env), ErrorKind::UnsupportedExponentiation);
  EXPECT_ERROR_KIND(evaluate(*parse_expression("1/(1 + G1^{-1})"), env), ErrorKind::InexactDivision);

  PiecewiseFn pos{"x", {{CompareOp::Greater, GrossNumber(), parse_expression("x")}}};
  env.define("pos", pos);
  EXPECT_ERROR_KIND(evaluate(*parse_expression("pos(-G1^{-1})"), env), ErrorKind::NoBranchMatched);
  EXPECT_ERROR_KIND(evaluate(*parse_expression("pos(1, 2)"), env), ErrorKind::ArityMismatch);

  env.define("loop", LambdaFn{{"x"}, parse_expression("loop(x)")});
  EXPECT_ERROR_KIND(evaluate(*parse_expression("loop(1)"), env), ErrorKind::DepthLimitExceeded);
}

TEST(Evaluate, TruncatedDivisionWhenAllowed) {
  Env env;
  EvalOptions opts{3};
  EXPECT_EQ(evaluate(*parse_expression("1/(1 + G1^{-1})"), env, opts), G("1 - G1^{-1} + G1^{-2}"));
  EXPECT_EQ(evaluate(*parse_expression("(G1^{2} - 1)/(G1 + 1)"), env, opts), G("G1 - 1"));
}

TEST(Evaluate, ComparisonsAndPowers) {
  Env env;
  auto ev = [&](const char* t) { return evaluate(*parse_expression(t), env); };
  EXPECT_EQ(ev("G1 > 1000000"), GrossNumber(1));
  EXPECT_EQ(ev("G1^{-1} <= 0"), GrossNumber());
  EXPECT_EQ(ev("G1 - G1 = 0"), GrossNumber(1));
  EXPECT_EQ(ev("0*G1"), GrossNumber());
  EXPECT_EQ(ev("G1/G1"), GrossNumber(1));
  EXPECT_EQ(ev("G1^0"), GrossNumber(1));
  EXPECT_EQ(ev("1^G1"), GrossNumber(1));
  EXPECT_EQ(ev("0^G1"), GrossNumber());
  EXPECT_EQ(ev("-2^2"), GrossNumber(-4));
  EXPECT_EQ(ev("2^-1"), G("0.5"));
  EXPECT_EQ(ev("G1^G1"), G("G1^{G1}"));
}

TEST(Evaluate, PiecewiseBreakpointsAreGross) {
  Env env;
  env.bind("b", G("G1"));
  auto def = std::get<PiecewiseDef>(parse_statement("def s(x) = { 0 if x < b; 1 if x >= b }"));
  env.define("s", make_piecewise(def, env));
  EXPECT_EQ(evaluate(*parse_expression("s(G1 - 1)"), env), GrossNumber());
  EXPECT_EQ(evaluate(*parse_expression("s(G1)"), env), GrossNumber(1));
  // First matching branch wins.
  auto overlap = std::get<PiecewiseDef>(parse_statement("def t(x) = { 1 if x < 5; 2 if x < 10 }"));
  env.define("t", make_piecewise(overlap, env));
  EXPECT_EQ(evaluate(*parse_expression("t(3)"), env), GrossNumber(1));
  EXPECT_EQ(evaluate(*parse_expression("t(7)"), env), GrossNumber(2));
}

TEST(Evaluate, ReferentiallyTransparent) {
  Env env;
  env.bind("x", G("G1^{2} - 3*G1^{-1}"));
  AstPtr e = parse_expression("(x + 1)^3 / (x + 1) - x*x");
  GrossNumber a = evaluate(*e, env);
  GrossNumber b = evaluate(*e, env);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, G("2*G1^{2} + 1 - 6*G1^{-1}"));
}

}  // namespace
}  // namespace grossone
