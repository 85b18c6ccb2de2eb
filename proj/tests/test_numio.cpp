#include <gtest/gtest.h>

#include "grossone/numio.hpp"
#include "test_helpers.hpp"

namespace grossone {
namespace {

using testing::G;
using testing::Q;

std::vector<TokenKind> kinds(std::string_view text) {
  std::vector<TokenKind> out;
  for (const auto& t : lex(text))
    if (t.kind != TokenKind::End) out.push_back(t.kind);
  return out;
}

TEST(Lexer, GrossoneSpellings) {
  auto toks = lex("G1 + 1");
  ASSERT_EQ(toks.size(), 4u);
  EXPECT_EQ(toks[0].kind, TokenKind::Grossone);
  EXPECT_EQ(toks[1].kind, TokenKind::Plus);
  EXPECT_EQ(toks[2].kind, TokenKind::DecimalLit);
  EXPECT_EQ(toks[2].lexeme, "1");
  EXPECT_EQ(toks[3].kind, TokenKind::End);
  EXPECT_EQ(kinds("① + 1"), kinds("G1 + 1"));
}

TEST(Lexer, BracedExponent) {
  auto toks = lex("①^{-9.2}");
  std::vector<TokenKind> want = {TokenKind::Grossone, TokenKind::Caret,      TokenKind::LBrace,
                                 TokenKind::Minus,    TokenKind::DecimalLit, TokenKind::RBrace};
  EXPECT_EQ(kinds("①^{-9.2}"), want);
  EXPECT_EQ(toks[4].lexeme, "9.2");
  // Columns count code points, so '^' after the 3-byte grossone sits in column 2.
  EXPECT_EQ(toks[1].pos, (SourcePos{1, 2}));
}

TEST(Lexer, MalformedNumberPointsAtSecondDot) {
  try {
    lex("17.2.1");
    FAIL() << "expected MalformedNumber";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedNumber);
    EXPECT_EQ(e.position(), (SourcePos{1, 5}));
  }
}

TEST(Lexer, UnknownCharacterPosition) {
  try {
    lex("1 +\n  2 $ 3");
    FAIL() << "expected UnknownCharacter";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownCharacter);
    EXPECT_EQ(e.position(), (SourcePos{2, 5}));
  }
}

TEST(Lexer, KeywordsCommentsAndRelations) {
  std::vector<TokenKind> want = {TokenKind::Keyword, TokenKind::Ident, TokenKind::Assign,
                                 TokenKind::DecimalLit};
  EXPECT_EQ(kinds("let x = 3  # trailing comment"), want);
  std::vector<TokenKind> rel = {TokenKind::Less,         TokenKind::LessEqual, TokenKind::Greater,
                                TokenKind::GreaterEqual, TokenKind::LessEqual, TokenKind::GreaterEqual};
  EXPECT_EQ(kinds("< <= > >= ≤ ≥"), rel);
  EXPECT_EQ(kinds("G1x")[0], TokenKind::Ident);
}

TEST(ParseNumber, FiveTermNumeral) {
  GrossNumber c1 = parse_number(
      "17.21*G1^{52.4*G1 - 72.1} + 134*G1^{81.43} + 7.02 + 52.1*G1^{-9.2} - 0.23*G1^{-3.7*G1}");
  ASSERT_EQ(c1.size(), 5u);
  EXPECT_EQ(c1.terms()[0].coefficient, Q("17.21"));
  EXPECT_EQ(c1.terms()[0].exponent,
            GrossNumber::normalize({{Q("52.4"), GrossNumber(1)}, {Q("-72.1"), GrossNumber()}}));
  EXPECT_EQ(c1.terms()[1].coefficient, Q("134"));
  EXPECT_EQ(c1.terms()[1].exponent, GrossNumber(Q("81.43")));
  EXPECT_EQ(c1.terms()[2].coefficient, Q("7.02"));
  EXPECT_EQ(c1.terms()[3].exponent, GrossNumber(Q("-9.2")));
  EXPECT_EQ(c1.terms()[4].coefficient, Q("-0.23"));
  EXPECT_EQ(c1.terms()[4].exponent, GrossNumber::monomial(Q("-3.7"), GrossNumber(1)));
}

TEST(ParseNumber, SimpleForms) {
  EXPECT_TRUE(parse_number("0").is_zero());
  GrossNumber gg = parse_number("G1^{G1}");
  ASSERT_EQ(gg.size(), 1u);
  EXPECT_EQ(gg.leading().coefficient, Rational(1));
  EXPECT_EQ(gg.leading().exponent, GrossNumber::grossone());
  EXPECT_EQ(parse_number("G1"), GrossNumber::grossone());
  EXPECT_EQ(parse_number("5"), GrossNumber(5));
  EXPECT_EQ(parse_number("①^{-1}"), parse_number("G1^-1"));
  EXPECT_EQ(parse_number("1/3*G1 + 2/3*G1"), parse_number("G1"));
  EXPECT_EQ(parse_number("-G1 + 2"), parse_number("2 - G1"));
}

TEST(ParseNumber, Errors) {
  EXPECT_ERROR_KIND(parse_number("1 +"), ErrorKind::SyntaxError);
  EXPECT_ERROR_KIND(parse_number("2 G1"), ErrorKind::SyntaxError);
  EXPECT_ERROR_KIND(parse_number("G1^{1"), ErrorKind::SyntaxError);
  EXPECT_ERROR_KIND(parse_number("x"), ErrorKind::SyntaxError);
  EXPECT_ERROR_KIND(parse_number("1/0"), ErrorKind::SyntaxError);
}

std::string nested(int levels) {
  std::string s = "G1";
  for (int i = 0; i < levels; ++i) s = "G1^{" + s + "}";
  return s;
}

TEST(ParseNumber, DepthCap) {
  EXPECT_NO_THROW(parse_number(nested(8)));
  EXPECT_ERROR_KIND(parse_number(nested(9)), ErrorKind::DepthLimitExceeded);
  EXPECT_NO_THROW(parse_number(nested(9), ParseOptions{9}));
  EXPECT_ERROR_KIND(parse_number(nested(2), ParseOptions{1}), ErrorKind::DepthLimitExceeded);
  EXPECT_ERROR_KIND(parse_expression(nested(9)), ErrorKind::DepthLimitExceeded);
}

TEST(ParseExpression, CallTree) {
  AstPtr e = parse_expression("f(-2*G1^{-1}) * g(G1)");
  const auto& mul = std::get<ast::Binary>(e->node);
  EXPECT_EQ(mul.op, BinaryOp::Mul);
  const auto& f = std::get<ast::Call>(mul.lhs->node);
  EXPECT_EQ(f.name, "f");
  ASSERT_EQ(f.args.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<ast::Binary>(f.args[0]->node));
  const auto& g = std::get<ast::Call>(mul.rhs->node);
  EXPECT_EQ(g.name, "g");
  EXPECT_TRUE(std::holds_alternative<ast::GrossoneSymbol>(g.args[0]->node));
}

TEST(ParseExpression, Precedence) {
  AstPtr e = parse_expression("(G1 - 1) * (G1 + 1)");
  EXPECT_EQ(std::get<ast::Binary>(e->node).op, BinaryOp::Mul);
  // -2^2 is -(2^2)
  AstPtr neg = parse_expression("-2^2");
  const auto& n = std::get<ast::Negate>(neg->node);
  EXPECT_EQ(std::get<ast::Binary>(n.operand->node).op, BinaryOp::Pow);
  // 2^3^2 is 2^(3^2)
  AstPtr pow = parse_expression("2^3^2");
  const auto& p = std::get<ast::Binary>(pow->node);
  EXPECT_TRUE(std::holds_alternative<ast::Literal>(p.lhs->node));
  EXPECT_EQ(std::get<ast::Binary>(p.rhs->node).op, BinaryOp::Pow);
  // 1 + 2 < 4 compares sums
  AstPtr cmp = parse_expression("1 + 2 < 4");
  EXPECT_EQ(std::get<ast::Compare>(cmp->node).op, CompareOp::Less);
}

TEST(ParseExpression, SyntaxErrorAtEnd) {
  try {
    parse_expression("1 +");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
    EXPECT_EQ(e.position(), (SourcePos{1, 4}));
    EXPECT_NE(e.detail().find("end of input"), std::string::npos);
  }
  EXPECT_ERROR_KIND(parse_expression("(1"), ErrorKind::SyntaxError);
  EXPECT_ERROR_KIND(parse_expression("f(1,)"), ErrorKind::SyntaxError);
  EXPECT_ERROR_KIND(parse_expression("1 2"), ErrorKind::SyntaxError);
}

TEST(ParseStatement, Forms) {
  auto let = std::get<LetBinding>(parse_statement("let z = G1^{-1}"));
  EXPECT_EQ(let.name, "z");
  auto def = std::get<PiecewiseDef>(
      parse_statement("def f(x) = { 2*x if x < 0; 1 if x = 0; x^3 if x > 0 }"));
  EXPECT_EQ(def.name, "f");
  EXPECT_EQ(def.param, "x");
  ASSERT_EQ(def.branches.size(), 3u);
  EXPECT_EQ(def.branches[0].op, CompareOp::Less);
  EXPECT_EQ(def.branches[1].op, CompareOp::Equal);
  EXPECT_EQ(def.branches[2].op, CompareOp::Greater);
  auto fn = std::get<FunctionDef>(parse_statement("def h(a, b) = a*b"));
  EXPECT_EQ(fn.params.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<ExprStatement>(parse_statement("1 + 1")));
  EXPECT_TRUE(std::holds_alternative<SetBinding>(parse_statement("set B = image(N, 2, 0)")));
  EXPECT_ERROR_KIND(parse_statement("def f(x) = { x if y < 0 }"), ErrorKind::SyntaxError);
  EXPECT_ERROR_KIND(parse_statement("def f(x, y) = { x if x < 0 }"), ErrorKind::SyntaxError);
  EXPECT_ERROR_KIND(parse_statement("set B = 3"), ErrorKind::SyntaxError);
  EXPECT_ERROR_KIND(parse_statement("let = 3"), ErrorKind::SyntaxError);
}

TEST(Printer, CanonicalText) {
  GrossNumber half = GrossNumber(Q("0.5"));
  GrossNumber x = add(multiply(half, parse_number("G1^{2}")), multiply(half, parse_number("G1")));
  EXPECT_EQ(print_canonical(x), "0.5*G1^{2} + 0.5*G1");
  EXPECT_EQ(print_canonical(GrossNumber()), "0");
  EXPECT_EQ(print_canonical(parse_number("G1^{-1}")), "G1^{-1}");
  EXPECT_EQ(print_canonical(parse_number("-G1 - 1")), "-G1 - 1");
  EXPECT_EQ(print_canonical(parse_number("1/3*G1^{-2} - 1/3")), "-1/3 + 1/3*G1^{-2}");
  EXPECT_EQ(print_canonical(parse_number("G1^{G1^{-1}}")), "G1^{G1^{-1}}");
}

TEST(Printer, DecimalMode) {
  GrossNumber x = parse_number("1/3*G1 + 2/3");
  EXPECT_EQ(print_canonical(x, PrintMode::decimal(3)), "0.333*G1 + 0.667");
  EXPECT_EQ(print_canonical(x, PrintMode::exact()), "1/3*G1 + 2/3");
}

TEST(Printer, FiveTermRoundTrip) {
  const char* text =
      "17.21*G1^{52.4*G1 - 72.1} + 134*G1^{81.43} + 7.02 + 52.1*G1^{-9.2} - 0.23*G1^{-3.7*G1}";
  GrossNumber c1 = parse_number(text);
  std::string printed = print_canonical(c1);
  EXPECT_EQ(printed, text);
  EXPECT_EQ(parse_number(printed), c1);
}

}  // namespace
}  // namespace grossone
