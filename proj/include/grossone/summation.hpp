#ifndef GROSSONE_SUMMATION_HPP
#define GROSSONE_SUMMATION_HPP

// Sums with an explicitly given (finite or infinite) number of items.
//
// Polynomial summands have Faulhaber closed forms that are polynomials in the
// item count k, so they can be evaluated directly at gross k. Alternating sums
// are split into their odd-index and even-index subsums, which needs k's parity.

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "grossone/ast.hpp"
#include "grossone/eval.hpp"
#include "grossone/gross_number.hpp"

namespace grossone {

namespace detail {

inline Rational binomial(unsigned n, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return Rational(r);
}

// Akiyama-Tanigawa; yields the B_1 = +1/2 convention.
inline Rational bernoulli_uncached(unsigned n) {
  std::vector<Rational> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = Rational(BigInt(1), BigInt(m + 1));
    for (unsigned j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
  }
  return a[0];
}

class SummationCache {
 public:
  static SummationCache& instance() {
    static SummationCache cache;
    return cache;
  }

  Rational bernoulli(unsigned n) {
    std::lock_guard lock(mu_);
    while (bernoulli_.size() <= n) bernoulli_.push_back(bernoulli_uncached(bernoulli_.size()));
    return bernoulli_[n];
  }

  // Coefficients (index = power of k) of sum_{i=1}^{k} i^j.
  std::vector<Rational> faulhaber(unsigned j) {
    {
      std::lock_guard lock(mu_);
      if (j < faulhaber_.size() && !faulhaber_[j].empty()) return faulhaber_[j];
    }
    std::vector<Rational> c(j + 2);
    Rational scale(BigInt(1), BigInt(j + 1));
    for (unsigned m = 0; m <= j; ++m) c[j + 1 - m] = scale * binomial(j + 1, m) * bernoulli(m);
    std::lock_guard lock(mu_);
    if (faulhaber_.size() <= j) faulhaber_.resize(j + 1);
    faulhaber_[j] = c;
    return c;
  }

 private:
  std::mutex mu_;
  std::vector<Rational> bernoulli_;
  std::vector<std::vector<Rational>> faulhaber_;
};

}  // namespace detail

/// Exact Bernoulli number with B_1 = +1/2.
inline Rational bernoulli(unsigned n) { return detail::SummationCache::instance().bernoulli(n); }

/// sum_{i=1}^{k} i^j, as the Faulhaber polynomial in k evaluated at k.
inline GrossNumber faulhaber(unsigned j, const GrossNumber& k) {
  std::vector<Rational> c = detail::SummationCache::instance().faulhaber(j);
  GrossNumber acc;
  for (std::size_t i = c.size(); i-- > 0;) acc = add(multiply(acc, k), GrossNumber(c[i]));
  return acc;
}

/// Polynomial in the summation index with gross-number coefficients.
class PolynomialSummand {
 public:
  PolynomialSummand() = default;
  explicit PolynomialSummand(std::vector<GrossNumber> coefficients)
      : coeffs_(std::move(coefficients)) {
    trim();
  }

  static PolynomialSummand constant(GrossNumber c) { return PolynomialSummand({std::move(c)}); }
  /// The index variable itself.
  static PolynomialSummand identity() { return PolynomialSummand({GrossNumber{}, GrossNumber(1)}); }

  const std::vector<GrossNumber>& coefficients() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  GrossNumber coefficient(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : GrossNumber{}; }

  GrossNumber operator()(const GrossNumber& i) const {
    GrossNumber acc;
    for (std::size_t j = coeffs_.size(); j-- > 0;) acc = add(multiply(acc, i), coeffs_[j]);
    return acc;
  }

  friend PolynomialSummand operator+(const PolynomialSummand& p, const PolynomialSummand& q) {
    std::vector<GrossNumber> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = add(p.coefficient(j), q.coefficient(j));
    return PolynomialSummand(std::move(c));
  }
  friend PolynomialSummand operator-(const PolynomialSummand& p) {
    return p.scaled(GrossNumber(-1));
  }
  friend PolynomialSummand operator-(const PolynomialSummand& p, const PolynomialSummand& q) {
    return p + (-q);
  }
  friend PolynomialSummand operator*(const PolynomialSummand& p, const PolynomialSummand& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<GrossNumber> c(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t a = 0; a < p.coeffs_.size(); ++a)
      for (std::size_t b = 0; b < q.coeffs_.size(); ++b)
        c[a + b] = add(c[a + b], multiply(p.coeffs_[a], q.coeffs_[b]));
    return PolynomialSummand(std::move(c));
  }
  friend bool operator==(const PolynomialSummand&, const PolynomialSummand&) = default;

  PolynomialSummand scaled(const GrossNumber& s) const {
    std::vector<GrossNumber> c = coeffs_;
    for (auto& x : c) x = multiply(x, s);
    return PolynomialSummand(std::move(c));
  }

  /// q(t) = p(a*t + b).
  PolynomialSummand compose_affine(const GrossNumber& a, const GrossNumber& b) const {
    PolynomialSummand lin({b, a});
    PolynomialSummand acc;
    for (std::size_t j = coeffs_.size(); j-- > 0;) acc = acc * lin + constant(coeffs_[j]);
    return acc;
  }

  /// q(t) = p(t + m).
  PolynomialSummand shifted(const GrossNumber& m) const { return compose_affine(GrossNumber(1), m); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<GrossNumber> coeffs_;
};

/// sum_{i=1}^{k} p(i) = sum_j p_j * faulhaber(j, k).
inline GrossNumber sum_polynomial(const PolynomialSummand& p, const GrossNumber& k) {
  GrossNumber total;
  for (std::size_t j = 0; j < p.coefficients().size(); ++j) {
    const GrossNumber& c = p.coefficients()[j];
    if (!c.is_zero()) total = add(total, multiply(c, faulhaber(static_cast<unsigned>(j), k)));
  }
  return total;
}

/// 1 - 1 + 1 - ... with k items: 0 for even k, 1 for odd k.
inline GrossNumber sum_alternating_unit(const GrossNumber& k) {
  return parity(k) == Parity::Even ? GrossNumber{} : GrossNumber(1);
}

/// Odd-index and even-index subsums of sum_{i=1}^{k} (-1)^{i+1} p(i).
struct AlternatingSplit {
  GrossNumber odd_items;   // number of items with odd index (added)
  GrossNumber even_items;  // number of items with even index (subtracted)
  GrossNumber odd_sum;     // p(1) + p(3) + ...
  GrossNumber even_sum;    // p(2) + p(4) + ...
  GrossNumber total;       // odd_sum - even_sum
};

inline AlternatingSplit alternating_split(const PolynomialSummand& p, const GrossNumber& k) {
  const Rational half(BigInt(1), BigInt(2));
  AlternatingSplit s;
  if (parity(k) == Parity::Even) {
    s.odd_items = scalar_mul(half, k);
    s.even_items = s.odd_items;
  } else {
    s.odd_items = scalar_mul(half, add(k, GrossNumber(1)));
    s.even_items = scalar_mul(half, subtract(k, GrossNumber(1)));
  }
  s.odd_sum = sum_polynomial(p.compose_affine(GrossNumber(2), GrossNumber(-1)), s.odd_items);
  s.even_sum = sum_polynomial(p.compose_affine(GrossNumber(2), GrossNumber{}), s.even_items);
  s.total = subtract(s.odd_sum, s.even_sum);
  return s;
}

/// sum_{i=1}^{k} (-1)^{i+1} p(i); needs parity(k).
inline GrossNumber sum_alternating_polynomial(const PolynomialSummand& p, const GrossNumber& k) {
  return alternating_split(p, k).total;
}

/// Direct iteration over i = 1..k with `var` bound to i.
inline GrossNumber sum_finite_generic(const Ast& summand, const std::string& var, std::uint64_t k,
                                      const Env& env, const EvalOptions& opts = {}) {
  Env local = env;
  GrossNumber total;
  for (std::uint64_t i = 1; i <= k; ++i) {
    local.bind(var, GrossNumber(static_cast<std::int64_t>(i)));
    total = add(total, evaluate(summand, local, opts));
  }
  return total;
}

namespace detail {

inline bool mentions(const Ast& node, const std::string& var) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ast::Var>) {
          return n.name == var;
        } else if constexpr (std::is_same_v<T, ast::Negate>) {
          return mentions(*n.operand, var);
        } else if constexpr (std::is_same_v<T, ast::Binary> || std::is_same_v<T, ast::Compare>) {
          return mentions(*n.lhs, var) || mentions(*n.rhs, var);
        } else if constexpr (std::is_same_v<T, ast::Call>) {
          for (const auto& a : n.args)
            if (mentions(*a, var)) return true;
          return false;
        } else {
          return false;
        }
      },
      node.node);
}

inline constexpr std::int64_t kMaxSummandDegree = 256;

inline PolynomialSummand to_polynomial(const Ast& node, const std::string& var, const Env& env,
                                       const EvalOptions& opts) {
  if (!mentions(node, var)) return PolynomialSummand::constant(evaluate(node, env, opts));
  auto unsupported = [&](const std::string& why) {
    return Error(ErrorKind::UnsupportedSummand,
                 "unsupported summand: " + why +
                     "; only polynomials in " + var + " have closed forms at gross item counts");
  };
  if (std::holds_alternative<ast::Var>(node.node)) return PolynomialSummand::identity();
  if (const auto* n = std::get_if<ast::Negate>(&node.node))
    return -to_polynomial(*n->operand, var, env, opts);
  if (const auto* b = std::get_if<ast::Binary>(&node.node)) {
    switch (b->op) {
      case BinaryOp::Add:
        return to_polynomial(*b->lhs, var, env, opts) + to_polynomial(*b->rhs, var, env, opts);
      case BinaryOp::Sub:
        return to_polynomial(*b->lhs, var, env, opts) - to_polynomial(*b->rhs, var, env, opts);
      case BinaryOp::Mul:
        return to_polynomial(*b->lhs, var, env, opts) * to_polynomial(*b->rhs, var, env, opts);
      case BinaryOp::Div: {
        if (mentions(*b->rhs, var)) throw unsupported("division by an expression in " + var);
        GrossNumber d = evaluate(*b->rhs, env, opts);
        PolynomialSummand p = to_polynomial(*b->lhs, var, env, opts);
        std::vector<GrossNumber> c = p.coefficients();
        for (auto& x : c) x = exact_divide(x, d);
        return PolynomialSummand(std::move(c));
      }
      case BinaryOp::Pow: {
        if (mentions(*b->rhs, var)) throw unsupported("exponent depends on " + var);
        GrossNumber e = evaluate(*b->rhs, env, opts);
        auto r = e.as_rational();
        if (!r || !r->is_integer() || r->sign() < 0 || *r > Rational(kMaxSummandDegree))
          throw unsupported("power must be a small non-negative integer");
        PolynomialSummand base = to_polynomial(*b->lhs, var, env, opts);
        PolynomialSummand acc = PolynomialSummand::constant(GrossNumber(1));
        for (BigInt i = 0; i < r->numerator(); ++i) acc = acc * base;
        return acc;
      }
    }
  }
  if (std::holds_alternative<ast::Call>(node.node)) throw unsupported("function call on " + var);
  throw unsupported("comparison");
}

}  // namespace detail

/// Extracts the polynomial p(var) from a summand expression; UnsupportedSummand otherwise.
inline PolynomialSummand polynomial_from_ast(const Ast& summand, const std::string& var,
                                             const Env& env = {}, const EvalOptions& opts = {}) {
  return detail::to_polynomial(summand, var, env, opts);
}

}  // namespace grossone

#endif  // GROSSONE_SUMMATION_HPP
