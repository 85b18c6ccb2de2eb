#ifndef GROSSONE_PARSER_HPP
#define GROSSONE_PARSER_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "grossone/ast.hpp"
#include "grossone/gross_number.hpp"
#include "grossone/lexer.hpp"

namespace grossone {

inline constexpr std::size_t kDefaultDepthCap = 8;
inline constexpr std::size_t kMaxParenDepth = 256;

struct ParseOptions {
  /// Maximum nesting of exponent braces G1^{...}.
  std::size_t depth_cap = kDefaultDepthCap;
};

namespace detail {

class Parser {
 public:
  Parser(std::string_view input, ParseOptions opts) : tokens_(lex(input)), opts_(opts) {
    if (opts_.depth_cap < 1) throw Error(ErrorKind::InvalidArgument, "depth cap must be >= 1");
  }

  // ---- literal grammar ---------------------------------------------------
  //   literal  := sign? term (('+'|'-') term)*
  //   term     := coef ('*' base)? | base
  //   coef     := DECIMAL ('/' DECIMAL)?
  //   base     := G1 ('^' (exponent))?
  //   exponent := '{' literal '}' | '-'? coef
  GrossNumber literal_all() {
    GrossNumber x = literal();
    expect(TokenKind::End, "end of input");
    return x;
  }

  // ---- expression grammar -------------------------------------------------
  AstPtr expression_all() {
    AstPtr e = comparison();
    expect(TokenKind::End, "end of input");
    return e;
  }

  Statement statement_all() {
    Statement s = statement();
    expect(TokenKind::End, "end of input");
    return s;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  bool check(TokenKind k) const { return peek().kind == k; }
  bool check_keyword(std::string_view word) const {
    return peek().kind == TokenKind::Keyword && peek().lexeme == word;
  }
  const Token& take() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool accept(TokenKind k) {
    if (!check(k)) return false;
    take();
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.lexeme + "'";
    throw ParseError(ErrorKind::SyntaxError, t.pos, "expected " + what + ", found " + found);
  }
  const Token& expect(TokenKind k, const std::string& what) {
    if (!check(k)) fail(what);
    return take();
  }

  struct DepthGuard {
    std::size_t& depth;
    DepthGuard(std::size_t& d, std::size_t cap, SourcePos pos, const char* what) : depth(d) {
      if (++depth > cap) {
        --depth;
        throw ParseError(ErrorKind::DepthLimitExceeded, pos,
                         std::string(what) + " nested deeper than " + std::to_string(cap));
      }
    }
    ~DepthGuard() { --depth; }
  };

  // literal grammar

  Rational coefficient() {
    const Token& t = expect(TokenKind::DecimalLit, "number");
    Rational c = Rational::parse(t.lexeme);
    if (accept(TokenKind::Slash)) {
      const Token& d = expect(TokenKind::DecimalLit, "denominator");
      Rational den = Rational::parse(d.lexeme);
      if (den.is_zero()) throw ParseError(ErrorKind::SyntaxError, d.pos, "zero denominator");
      c /= den;
    }
    return c;
  }

  GrossNumber literal_exponent() {
    if (check(TokenKind::LBrace)) {
      DepthGuard g(brace_depth_, opts_.depth_cap, peek().pos, "exponent braces");
      take();
      GrossNumber e = literal();
      expect(TokenKind::RBrace, "'}'");
      return e;
    }
    bool neg = accept(TokenKind::Minus);
    Rational c = coefficient();
    return GrossNumber(neg ? -c : c);
  }

  GrossTerm literal_term() {
    Rational c(1);
    if (check(TokenKind::DecimalLit)) {
      c = coefficient();
      if (!accept(TokenKind::Star)) return GrossTerm{c, GrossNumber{}};
    }
    expect(TokenKind::Grossone, "number or G1");
    GrossNumber e(1);
    if (accept(TokenKind::Caret)) e = literal_exponent();
    return GrossTerm{c, std::move(e)};
  }

  GrossNumber literal() {
    std::vector<GrossTerm> terms;
    bool neg = accept(TokenKind::Minus);
    if (!neg) accept(TokenKind::Plus);
    while (true) {
      GrossTerm t = literal_term();
      if (neg) t.coefficient = -t.coefficient;
      terms.push_back(std::move(t));
      if (accept(TokenKind::Plus)) neg = false;
      else if (accept(TokenKind::Minus)) neg = true;
      else break;
    }
    return GrossNumber::normalize(std::move(terms));
  }

  // expression grammar, loosest first:
  //   comparison > additive > multiplicative > unary minus > power > primary

  static bool relation(TokenKind k, CompareOp& op) {
    switch (k) {
      case TokenKind::Less: op = CompareOp::Less; return true;
      case TokenKind::LessEqual: op = CompareOp::LessEqual; return true;
      case TokenKind::Assign: op = CompareOp::Equal; return true;
      case TokenKind::GreaterEqual: op = CompareOp::GreaterEqual; return true;
      case TokenKind::Greater: op = CompareOp::Greater; return true;
      default: return false;
    }
  }

  AstPtr comparison() {
    AstPtr lhs = additive();
    CompareOp op;
    if (relation(peek().kind, op)) {
      SourcePos pos = take().pos;
      AstPtr rhs = additive();
      return make_ast(ast::Compare{op, lhs, rhs}, pos);
    }
    return lhs;
  }

  AstPtr additive() {
    AstPtr lhs = multiplicative();
    while (check(TokenKind::Plus) || check(TokenKind::Minus)) {
      const Token& t = take();
      BinaryOp op = t.kind == TokenKind::Plus ? BinaryOp::Add : BinaryOp::Sub;
      AstPtr rhs = multiplicative();
      lhs = make_ast(ast::Binary{op, lhs, rhs}, t.pos);
    }
    return lhs;
  }

  AstPtr multiplicative() {
    AstPtr lhs = unary();
    while (check(TokenKind::Star) || check(TokenKind::Slash)) {
      const Token& t = take();
      BinaryOp op = t.kind == TokenKind::Star ? BinaryOp::Mul : BinaryOp::Div;
      AstPtr rhs = unary();
      lhs = make_ast(ast::Binary{op, lhs, rhs}, t.pos);
    }
    return lhs;
  }

  AstPtr unary() {
    if (check(TokenKind::Minus)) {
      SourcePos pos = take().pos;
      DepthGuard g(paren_depth_, kMaxParenDepth, pos, "unary operators");
      return make_ast(ast::Negate{unary()}, pos);
    }
    if (check(TokenKind::Plus)) {
      SourcePos pos = take().pos;
      DepthGuard g(paren_depth_, kMaxParenDepth, pos, "unary operators");
      return unary();
    }
    return power();
  }

  AstPtr power() {
    AstPtr base = primary();
    if (check(TokenKind::Caret)) {
      SourcePos pos = take().pos;
      AstPtr exponent;
      if (check(TokenKind::LBrace)) {
        DepthGuard g(brace_depth_, opts_.depth_cap, peek().pos, "exponent braces");
        take();
        exponent = additive();
        expect(TokenKind::RBrace, "'}'");
      } else {
        DepthGuard g(paren_depth_, kMaxParenDepth, pos, "exponents");
        exponent = unary();  // right-associative
      }
      return make_ast(ast::Binary{BinaryOp::Pow, base, exponent}, pos);
    }
    return base;
  }

  std::vector<AstPtr> call_args() {
    std::vector<AstPtr> args;
    if (check(TokenKind::RParen)) return args;
    do {
      args.push_back(comparison());
    } while (accept(TokenKind::Comma));
    return args;
  }

  AstPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::DecimalLit:
        take();
        return make_ast(ast::Literal{GrossNumber(Rational::parse(t.lexeme))}, t.pos);
      case TokenKind::Grossone:
        take();
        return make_ast(ast::GrossoneSymbol{}, t.pos);
      case TokenKind::Ident: {
        take();
        if (accept(TokenKind::LParen)) {
          DepthGuard g(paren_depth_, kMaxParenDepth, t.pos, "parentheses");
          auto args = call_args();
          expect(TokenKind::RParen, "')'");
          return make_ast(ast::Call{t.lexeme, std::move(args)}, t.pos);
        }
        return make_ast(ast::Var{t.lexeme}, t.pos);
      }
      case TokenKind::LParen: {
        take();
        DepthGuard g(paren_depth_, kMaxParenDepth, t.pos, "parentheses");
        AstPtr e = comparison();
        expect(TokenKind::RParen, "')'");
        return e;
      }
      default:
        fail("expression");
    }
  }

  // statements

  std::string identifier() { return expect(TokenKind::Ident, "identifier").lexeme; }

  Statement statement() {
    if (check_keyword("let")) {
      take();
      std::string name = identifier();
      expect(TokenKind::Assign, "'='");
      return LetBinding{name, comparison()};
    }
    if (check_keyword("set")) {
      take();
      std::string name = identifier();
      expect(TokenKind::Assign, "'='");
      SourcePos pos = peek().pos;
      AstPtr value = comparison();
      if (!std::holds_alternative<ast::Call>(value->node))
        throw ParseError(ErrorKind::SyntaxError, pos, "expected a set constructor call");
      return SetBinding{name, value};
    }
    if (check_keyword("def")) {
      take();
      std::string name = identifier();
      expect(TokenKind::LParen, "'('");
      std::vector<std::string> params;
      if (!check(TokenKind::RParen)) {
        do {
          params.push_back(identifier());
        } while (accept(TokenKind::Comma));
      }
      expect(TokenKind::RParen, "')'");
      expect(TokenKind::Assign, "'='");
      if (check(TokenKind::LBrace)) return piecewise(name, params);
      return FunctionDef{name, params, comparison()};
    }
    return ExprStatement{comparison()};
  }

  PiecewiseDef piecewise(const std::string& name, const std::vector<std::string>& params) {
    SourcePos open = take().pos;
    if (params.size() != 1)
      throw ParseError(ErrorKind::SyntaxError, open,
                       "piecewise definitions take exactly one parameter");
    PiecewiseDef def{name, params[0], {}};
    do {
      if (check(TokenKind::RBrace)) break;  // trailing ';'
      AstPtr body = additive();
      if (!check_keyword("if")) fail("'if'");
      take();
      const Token& p = expect(TokenKind::Ident, "parameter name");
      if (p.lexeme != def.param)
        throw ParseError(ErrorKind::SyntaxError, p.pos,
                         "branch condition must test parameter '" + def.param + "'");
      CompareOp op;
      if (!relation(peek().kind, op)) fail("comparison operator");
      take();
      AstPtr bound = additive();
      def.branches.push_back(BranchDef{body, op, bound});
    } while (accept(TokenKind::Semicolon));
    expect(TokenKind::RBrace, "'}'");
    if (def.branches.empty())
      throw ParseError(ErrorKind::SyntaxError, open, "piecewise definition has no branches");
    return def;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseOptions opts_;
  std::size_t brace_depth_ = 0;
  std::size_t paren_depth_ = 0;
};

}  // namespace detail

/// Parses a gross-number literal such as "17.21*G1^{52.4*G1 - 72.1} + 7.02".
/// Terms may appear in any order and repeat; the result is canonical.
inline GrossNumber parse_number(std::string_view input, ParseOptions opts = {}) {
  return detail::Parser(input, opts).literal_all();
}

/// Parses an arithmetic expression (with calls, variables and comparisons).
inline AstPtr parse_expression(std::string_view input, ParseOptions opts = {}) {
  return detail::Parser(input, opts).expression_all();
}

/// Parses one session statement: let/def/set or a bare expression.
inline Statement parse_statement(std::string_view input, ParseOptions opts = {}) {
  return detail::Parser(input, opts).statement_all();
}

}  // namespace grossone

#endif  // GROSSONE_PARSER_HPP
