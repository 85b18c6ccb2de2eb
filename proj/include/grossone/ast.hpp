#ifndef GROSSONE_AST_HPP
#define GROSSONE_AST_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "grossone/error.hpp"
#include "grossone/gross_number.hpp"

namespace grossone {

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class CompareOp { Less, LessEqual, Equal, GreaterEqual, Greater };

namespace ast {

struct Literal {
  GrossNumber value;
};
struct GrossoneSymbol {};
struct Var {
  std::string name;
};
struct Negate {
  AstPtr operand;
};
struct Binary {
  BinaryOp op;
  AstPtr lhs;
  AstPtr rhs;
};
struct Call {
  std::string name;
  std::vector<AstPtr> args;
};
struct Compare {
  CompareOp op;
  AstPtr lhs;
  AstPtr rhs;
};

}  // namespace ast

/// Immutable expression tree node.
struct Ast {
  using Node = std::variant<ast::Literal, ast::GrossoneSymbol, ast::Var, ast::Negate, ast::Binary,
                            ast::Call, ast::Compare>;
  Node node;
  SourcePos pos;
};

template <typename T>
AstPtr make_ast(T node, SourcePos pos = {}) {
  return std::make_shared<const Ast>(Ast{Ast::Node(std::move(node)), pos});
}

inline bool holds_relation(CompareOp op, int cmp) {
  switch (op) {
    case CompareOp::Less: return cmp < 0;
    case CompareOp::LessEqual: return cmp <= 0;
    case CompareOp::Equal: return cmp == 0;
    case CompareOp::GreaterEqual: return cmp >= 0;
    case CompareOp::Greater: return cmp > 0;
  }
  return false;
}

// Statements accepted by a session.

/// `let name = expr`
struct LetBinding {
  std::string name;
  AstPtr value;
};

/// One `body if param <op> bound` clause of a piecewise definition.
struct BranchDef {
  AstPtr body;
  CompareOp op;
  AstPtr bound;
};

/// `def name(x) = { body if x < b; ... }`
struct PiecewiseDef {
  std::string name;
  std::string param;
  std::vector<BranchDef> branches;
};

/// `def name(x, y) = expr`
struct FunctionDef {
  std::string name;
  std::vector<std::string> params;
  AstPtr body;
};

/// `set name = call(...)`; binds a progression set in the session.
struct SetBinding {
  std::string name;
  AstPtr value;
};

struct ExprStatement {
  AstPtr expr;
};

using Statement = std::variant<LetBinding, PiecewiseDef, FunctionDef, SetBinding, ExprStatement>;

}  // namespace grossone

#endif  // GROSSONE_AST_HPP
