#ifndef GROSSONE_SESSION_HPP
#define GROSSONE_SESSION_HPP

// Statement-level front end shared by the command-line tool: session state,
// one-shot commands, and the read-eval-print loop.

#include <cstddef>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "grossone/eval.hpp"
#include "grossone/numio.hpp"
#include "grossone/setcalc.hpp"
#include "grossone/summation.hpp"

namespace grossone {

/// Stable process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitSyntax = 2,
  kExitEvaluation = 3,
};

struct SessionConfig {
  /// Unset: exact division only. Set: truncated division keeping this many terms.
  std::optional<std::size_t> div_truncate;
  PrintMode print_mode;
  std::size_t depth_cap = kDefaultDepthCap;

  void validate() const {
    if (div_truncate && *div_truncate < 1)
      throw Error(ErrorKind::InvalidArgument, "--div-truncate must be >= 1");
    if (print_mode.kind == PrintMode::Kind::Decimal && print_mode.digits < 1)
      throw Error(ErrorKind::InvalidArgument, "decimal digits must be >= 1");
    if (depth_cap < 1) throw Error(ErrorKind::InvalidArgument, "--depth-cap must be >= 1");
  }

  EvalOptions eval_options() const { return EvalOptions{div_truncate}; }
  ParseOptions parse_options() const { return ParseOptions{depth_cap}; }
};

/// "exact" or "decimal:D".
inline std::optional<PrintMode> parse_print_mode(std::string_view text) {
  if (text == "exact") return PrintMode::exact();
  constexpr std::string_view prefix = "decimal:";
  if (text.substr(0, prefix.size()) != prefix) return std::nullopt;
  std::string_view digits = text.substr(prefix.size());
  if (digits.empty() || digits.size() > 4) return std::nullopt;
  unsigned d = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
    d = d * 10 + static_cast<unsigned>(c - '0');
  }
  if (d < 1) return std::nullopt;
  return PrintMode::decimal(d);
}

/// Interpreter state: value and function bindings plus named progression sets.
///
/// Built-in functions (set arguments are given by name):
///   count(S)  member(x, S)  last(S)  remove(S, x)  insert(S, x)
///   subset_smaller(A, B)  product(c1, ..., cn)  tuples(base, length)
///   hotel(rooms)  prob(m, K)  parity(x)
/// Set constructors for `set NAME = ...`:
///   progression(start, step, count)  range(first, last)  image(S, a, b)
/// The sets N (naturals) and E (even naturals) are predefined.
class Session {
 public:
  explicit Session(SessionConfig config = {}) : config_(config) {
    config_.validate();
    sets_->emplace("N", ProgressionSet::naturals());
    sets_->emplace("E", ProgressionSet::evens());
    install_builtins();
  }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  const SessionConfig& config() const noexcept { return config_; }
  const Env& env() const noexcept { return env_; }

  /// Runs one statement. Returns the value of a bare expression, nothing for definitions.
  std::optional<GrossNumber> execute(std::string_view text) {
    Statement st = parse_statement(text, config_.parse_options());
    return std::visit([&](auto& s) { return run(s); }, st);
  }

  GrossNumber evaluate_text(std::string_view text) const {
    AstPtr e = parse_expression(text, config_.parse_options());
    return evaluate(*e, env_, config_.eval_options());
  }

  std::string format(const GrossNumber& x) const { return print_canonical(x, config_.print_mode); }

  const ProgressionSet* set(const std::string& name) const {
    auto it = sets_->find(name);
    return it == sets_->end() ? nullptr : &it->second;
  }

 private:
  using SetTable = std::map<std::string, ProgressionSet, std::less<>>;

  std::optional<GrossNumber> run(const LetBinding& s) {
    env_.bind(s.name, evaluate(*s.value, env_, config_.eval_options()));
    return std::nullopt;
  }
  std::optional<GrossNumber> run(const PiecewiseDef& s) {
    env_.define(s.name, make_piecewise(s, env_, config_.eval_options()));
    return std::nullopt;
  }
  std::optional<GrossNumber> run(const FunctionDef& s) {
    env_.define(s.name, LambdaFn{s.params, s.body});
    return std::nullopt;
  }
  std::optional<GrossNumber> run(const SetBinding& s) {
    ProgressionSet value = construct_set(std::get<ast::Call>(s.value->node));
    sets_->insert_or_assign(s.name, std::move(value));
    return std::nullopt;
  }
  std::optional<GrossNumber> run(const ExprStatement& s) {
    return evaluate(*s.expr, env_, config_.eval_options());
  }

  GrossNumber eval(const Ast& a) const { return evaluate(a, env_, config_.eval_options()); }

  static Rational finite_value(const GrossNumber& x, const char* what) {
    auto r = x.as_rational();
    if (!r) throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be finite");
    return *r;
  }

  static void arity(const std::string& name, std::span<const AstPtr> args, std::size_t n) {
    if (args.size() != n)
      throw Error(ErrorKind::ArityMismatch, name + " expects " + std::to_string(n) +
                                                " argument(s), got " + std::to_string(args.size()));
  }

  static const ProgressionSet& lookup_set(const SetTable& sets, const Ast& a) {
    const auto* v = std::get_if<ast::Var>(&a.node);
    if (!v) throw Error(ErrorKind::InvalidArgument, "expected a set name");
    auto it = sets.find(v->name);
    if (it == sets.end()) throw Error(ErrorKind::UnboundName, "unbound set " + v->name);
    return it->second;
  }

  ProgressionSet construct_set(const ast::Call& call) const {
    const auto& args = call.args;
    if (call.name == "progression") {
      arity(call.name, args, 3);
      return ProgressionSet(eval(*args[0]), finite_value(eval(*args[1]), "step"), eval(*args[2]));
    }
    if (call.name == "range") {
      arity(call.name, args, 2);
      GrossNumber first = eval(*args[0]);
      GrossNumber last = eval(*args[1]);
      return ProgressionSet(first, Rational(1), add(subtract(last, first), GrossNumber(1)));
    }
    if (call.name == "image") {
      arity(call.name, args, 3);
      return affine_image(lookup_set(*sets_, *args[0]), finite_value(eval(*args[1]), "factor"),
                          finite_value(eval(*args[2]), "offset"));
    }
    throw Error(ErrorKind::UnboundName, "unknown set constructor " + call.name);
  }

  void install_builtins() {
    std::shared_ptr<const SetTable> sets = sets_;
    auto flag = [](bool b) { return GrossNumber(b ? 1 : 0); };
    env_.define("count", NativeFn([sets](std::span<const AstPtr> a, const ArgEvaluator&) {
      arity("count", a, 1);
      return count(lookup_set(*sets, *a[0]));
    }));
    env_.define("last", NativeFn([sets](std::span<const AstPtr> a, const ArgEvaluator&) {
      arity("last", a, 1);
      return lookup_set(*sets, *a[0]).last();
    }));
    env_.define("member", NativeFn([sets, flag](std::span<const AstPtr> a, const ArgEvaluator& ev) {
      arity("member", a, 2);
      return flag(member(ev(*a[0]), lookup_set(*sets, *a[1])));
    }));
    env_.define("remove", NativeFn([sets](std::span<const AstPtr> a, const ArgEvaluator& ev) {
      arity("remove", a, 2);
      return remove_one(lookup_set(*sets, *a[0]), ev(*a[1]));
    }));
    env_.define("insert", NativeFn([sets](std::span<const AstPtr> a, const ArgEvaluator& ev) {
      arity("insert", a, 2);
      return add_one(lookup_set(*sets, *a[0]), ev(*a[1]));
    }));
    env_.define("subset_smaller", NativeFn([sets, flag](std::span<const AstPtr> a, const ArgEvaluator&) {
      arity("subset_smaller", a, 2);
      return flag(proper_subset_strictly_smaller(lookup_set(*sets, *a[0]), lookup_set(*sets, *a[1])));
    }));
    env_.define("product", NativeFn([](std::span<const AstPtr> a, const ArgEvaluator& ev) {
      std::vector<GrossNumber> counts;
      for (const auto& x : a) counts.push_back(ev(*x));
      return product_count(counts);
    }));
    env_.define("tuples", NativeFn([](std::span<const AstPtr> a, const ArgEvaluator& ev) {
      arity("tuples", a, 2);
      return tuple_space_count(ev(*a[0]), ev(*a[1]));
    }));
    env_.define("hotel", NativeFn([](std::span<const AstPtr> a, const ArgEvaluator& ev) {
      arity("hotel", a, 1);
      HotelOutcome h = hotel_shift(ev(*a[0]));
      return h.accommodated ? GrossNumber{} : h.evicted_room;
    }));
    env_.define("prob", NativeFn([](std::span<const AstPtr> a, const ArgEvaluator& ev) {
      arity("prob", a, 2);
      return probability(ProbabilityModel(ev(*a[1]), ev(*a[0])));
    }));
    env_.define("parity", NativeFn([](std::span<const AstPtr> a, const ArgEvaluator& ev) {
      arity("parity", a, 1);
      return GrossNumber(parity(ev(*a[0])) == Parity::Even ? 0 : 1);
    }));
  }

  SessionConfig config_;
  Env env_;
  std::shared_ptr<SetTable> sets_ = std::make_shared<SetTable>();
};

namespace detail {

// Runs `body`, mapping failures onto exit codes and messages on `err`.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    body();
    return kExitOk;
  } catch (const ParseError& e) {
    err << "syntax error: " << e.what() << "\n";
    return kExitSyntax;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitEvaluation;
  }
}

}  // namespace detail

/// Evaluates one expression and prints its canonical value.
inline int cmd_eval(std::string_view expr, const SessionConfig& config, std::ostream& out,
                    std::ostream& err) {
  return detail::guarded(err, [&] {
    Session session(config);
    out << session.format(session.evaluate_text(expr)) << "\n";
  });
}

/// Closed-form sum of a polynomial summand in `var` over 1..upper, optionally alternating
/// (+p(1) - p(2) + p(3) - ...).
inline int cmd_sum(std::string_view summand, const std::string& var, std::string_view upper,
                   bool alternating, const SessionConfig& config, std::ostream& out,
                   std::ostream& err) {
  return detail::guarded(err, [&] {
    Session session(config);
    AstPtr body = parse_expression(summand, config.parse_options());
    AstPtr upper_ast = parse_expression(upper, config.parse_options());
    GrossNumber k = evaluate(*upper_ast, session.env(), config.eval_options());
    if (sign(k) < 0 || !is_integer_like(k))
      throw Error(ErrorKind::ParityUndefined,
                  "item count must be a non-negative integer without infinitesimal parts");
    PolynomialSummand p = polynomial_from_ast(*body, var, session.env(), config.eval_options());
    GrossNumber s = alternating ? sum_alternating_polynomial(p, k) : sum_polynomial(p, k);
    out << session.format(s) << "\n";
  });
}

/// P(E) = favorable / total with its classification and, for a possible event, its extent.
inline int cmd_prob(std::string_view total, std::string_view favorable,
                    const SessionConfig& config, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    Session session(config);
    GrossNumber k = session.evaluate_text(total);
    GrossNumber m = session.evaluate_text(favorable);
    ProbabilityModel model(k, m);
    GrossNumber p = probability(model);
    out << session.format(p) << "\n";
    out << to_string(classify_event(model)) << "\n";
    if (!m.is_zero()) out << to_string(event_extent(m)) << "\n";
  });
}

/// Reads statements line by line until EOF or ":quit". Errors are reported on
/// `err` and do not end the session. With `prompt`, a prompt goes to `err`.
inline int repl(std::istream& in, std::ostream& out, std::ostream& err,
                const SessionConfig& config, bool prompt = false, std::string_view source = "") {
  Session session(config);
  std::string line;
  std::size_t line_no = 0;
  while (true) {
    if (prompt) err << "G1> " << std::flush;
    if (!std::getline(in, line)) break;
    ++line_no;
    std::string_view text(line);
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
      text.remove_suffix(1);
    if (text.empty() || text.front() == '#') continue;
    if (text == ":quit" || text == ":q") break;
    std::string where = source.empty() ? "" : std::string(source) + ":" + std::to_string(line_no) + ": ";
    try {
      if (auto v = session.execute(text)) out << session.format(*v) << "\n";
    } catch (const ParseError& e) {
      err << where << "syntax error: " << e.what() << "\n";
    } catch (const Error& e) {
      err << where << "error: " << e.what() << "\n";
    }
  }
  return kExitOk;
}

}  // namespace grossone

#endif  // GROSSONE_SESSION_HPP
