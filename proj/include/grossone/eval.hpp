#ifndef GROSSONE_EVAL_HPP
#define GROSSONE_EVAL_HPP

// Direct evaluation of expressions at finite, infinite and infinitesimal points.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "grossone/ast.hpp"
#include "grossone/gross_number.hpp"
#include "grossone/printer.hpp"

namespace grossone {

inline constexpr std::size_t kMaxCallDepth = 512;

struct EvalOptions {
  /// Unset: '/' must divide exactly. Set: '/' keeps this many quotient terms.
  std::optional<std::size_t> truncate_terms;
};

/// Sign-conditioned function: the first branch whose `x <op> bound` holds is taken.
struct PiecewiseFn {
  struct Branch {
    CompareOp op;
    GrossNumber bound;
    AstPtr body;
  };
  std::string param;
  std::vector<Branch> branches;
};

struct LambdaFn {
  std::vector<std::string> params;
  AstPtr body;
};

using ArgEvaluator = std::function<GrossNumber(const Ast&)>;

/// Built-in function. Receives unevaluated arguments plus an evaluator for the
/// caller's scope, so it may treat some arguments as names.
using NativeFn = std::function<GrossNumber(std::span<const AstPtr>, const ArgEvaluator&)>;

/// Name bindings for one session. Values and functions live in separate namespaces.
class Env {
 public:
  using Function = std::variant<PiecewiseFn, LambdaFn, NativeFn>;

  void bind(const std::string& name, GrossNumber value) { values_[name] = std::move(value); }
  void define(const std::string& name, Function f) { functions_[name] = std::move(f); }

  const GrossNumber* value(const std::string& name) const {
    auto it = values_.find(name);
    return it == values_.end() ? nullptr : &it->second;
  }
  const Function* function(const std::string& name) const {
    auto it = functions_.find(name);
    return it == functions_.end() ? nullptr : &it->second;
  }

 private:
  std::map<std::string, GrossNumber, std::less<>> values_;
  std::map<std::string, Function, std::less<>> functions_;
};

namespace detail {

using Locals = std::vector<std::pair<std::string, GrossNumber>>;

class Evaluator {
 public:
  Evaluator(const Env& env, const EvalOptions& opts) : env_(env), opts_(opts) {}

  GrossNumber eval(const Ast& node, const Locals& locals) {
    return std::visit([&](const auto& n) { return this->visit(n, node, locals); }, node.node);
  }

  GrossNumber apply(const PiecewiseFn& f, const std::string& name, const GrossNumber& x) {
    for (const auto& b : f.branches) {
      if (holds_relation(b.op, compare(x, b.bound))) {
        Locals scope{{f.param, x}};
        return call_body(*b.body, scope);
      }
    }
    throw Error(ErrorKind::NoBranchMatched,
                "no branch of " + name + " matches " + f.param + " = " + print_canonical(x));
  }

 private:
  GrossNumber call_body(const Ast& body, const Locals& scope) {
    if (++call_depth_ > kMaxCallDepth) {
      --call_depth_;
      throw Error(ErrorKind::DepthLimitExceeded, "call depth limit exceeded");
    }
    struct Unwind {
      std::size_t& d;
      ~Unwind() { --d; }
    } unwind{call_depth_};
    return eval(body, scope);
  }

  GrossNumber visit(const ast::Literal& n, const Ast&, const Locals&) { return n.value; }

  GrossNumber visit(const ast::GrossoneSymbol&, const Ast&, const Locals&) {
    return GrossNumber::grossone();
  }

  GrossNumber visit(const ast::Var& n, const Ast&, const Locals& locals) {
    for (auto it = locals.rbegin(); it != locals.rend(); ++it)
      if (it->first == n.name) return it->second;
    if (const GrossNumber* v = env_.value(n.name)) return *v;
    throw Error(ErrorKind::UnboundName, "unbound name " + n.name);
  }

  GrossNumber visit(const ast::Negate& n, const Ast&, const Locals& locals) {
    return negate(eval(*n.operand, locals));
  }

  GrossNumber visit(const ast::Binary& n, const Ast&, const Locals& locals) {
    GrossNumber a = eval(*n.lhs, locals);
    GrossNumber b = eval(*n.rhs, locals);
    switch (n.op) {
      case BinaryOp::Add: return add(a, b);
      case BinaryOp::Sub: return subtract(a, b);
      case BinaryOp::Mul: return multiply(a, b);
      case BinaryOp::Div:
        if (opts_.truncate_terms) return divide(a, b, *opts_.truncate_terms).quotient;
        return exact_divide(a, b);
      case BinaryOp::Pow: return power_gross(a, b);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown operator");
  }

  GrossNumber visit(const ast::Compare& n, const Ast&, const Locals& locals) {
    GrossNumber a = eval(*n.lhs, locals);
    GrossNumber b = eval(*n.rhs, locals);
    return GrossNumber(holds_relation(n.op, compare(a, b)) ? 1 : 0);
  }

  GrossNumber visit(const ast::Call& n, const Ast&, const Locals& locals) {
    const Env::Function* f = env_.function(n.name);
    if (!f) throw Error(ErrorKind::UnboundName, "unbound function " + n.name);
    if (const auto* native = std::get_if<NativeFn>(f)) {
      ArgEvaluator arg = [&](const Ast& a) { return eval(a, locals); };
      return (*native)(n.args, arg);
    }
    std::vector<GrossNumber> args;
    args.reserve(n.args.size());
    for (const auto& a : n.args) args.push_back(eval(*a, locals));
    if (const auto* pw = std::get_if<PiecewiseFn>(f)) {
      check_arity(n.name, 1, args.size());
      return apply(*pw, n.name, args[0]);
    }
    const auto& lambda = std::get<LambdaFn>(*f);
    check_arity(n.name, lambda.params.size(), args.size());
    Locals scope;
    for (std::size_t i = 0; i < args.size(); ++i)
      scope.emplace_back(lambda.params[i], std::move(args[i]));
    return call_body(*lambda.body, scope);
  }

  static void check_arity(const std::string& name, std::size_t want, std::size_t got) {
    if (want != got)
      throw Error(ErrorKind::ArityMismatch, name + " expects " + std::to_string(want) +
                                                " argument(s), got " + std::to_string(got));
  }

  const Env& env_;
  const EvalOptions& opts_;
  std::size_t call_depth_ = 0;
};

}  // namespace detail

/// Exact value of `expr` under `env`. Pure: same inputs give identical results.
inline GrossNumber evaluate(const Ast& expr, const Env& env, const EvalOptions& opts = {}) {
  return detail::Evaluator(env, opts).eval(expr, {});
}

/// Multi-point expressions such as f(a+z2)*(g(y1)/f(a+z1) - 1.25*g(y2)^3) are
/// evaluated by the same machinery; this name exists for readability at call sites.
inline GrossNumber evaluate_compound(const Ast& expr, const Env& env,
                                     const EvalOptions& opts = {}) {
  return evaluate(expr, env, opts);
}

inline GrossNumber apply_piecewise(const PiecewiseFn& f, const GrossNumber& x, const Env& env,
                                   const EvalOptions& opts = {}) {
  return detail::Evaluator(env, opts).apply(f, "function", x);
}

/// Resolves branch breakpoints in `env` once, at definition time.
inline PiecewiseFn make_piecewise(const PiecewiseDef& def, const Env& env,
                                  const EvalOptions& opts = {}) {
  PiecewiseFn f{def.param, {}};
  for (const auto& b : def.branches)
    f.branches.push_back(PiecewiseFn::Branch{b.op, evaluate(*b.bound, env, opts), b.body});
  return f;
}

}  // namespace grossone

#endif  // GROSSONE_EVAL_HPP
