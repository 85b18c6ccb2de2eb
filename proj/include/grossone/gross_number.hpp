#ifndef GROSSONE_GROSS_NUMBER_HPP
#define GROSSONE_GROSS_NUMBER_HPP

// Canonical gross-numbers: finite sums  c_1*G1^{p_1} + ... + c_n*G1^{p_n}
// with nonzero rational grossdigits c_i and strictly decreasing grosspowers
// p_i, where every grosspower is itself a canonical gross-number.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "grossone/error.hpp"
#include "grossone/rational.hpp"

namespace grossone {

struct GrossTerm;

class GrossNumber {
 public:
  /// Zero (the empty term sequence).
  GrossNumber() = default;
  GrossNumber(std::int64_t value);      // NOLINT: implicit, finite value
  GrossNumber(const Rational& value);   // NOLINT: implicit, finite value

  /// G1 itself.
  static GrossNumber grossone();
  /// c * G1^p as a single term (zero when c == 0).
  static GrossNumber monomial(const Rational& coefficient, GrossNumber exponent);
  /// Merges equal exponents, drops zero coefficients, sorts strictly decreasing.
  /// Each exponent must already be canonical.
  static GrossNumber normalize(std::vector<GrossTerm> terms);

  const std::vector<GrossTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// Zero or a single term with grosspower 0.
  bool is_finite() const noexcept;
  /// The rational value when is_finite().
  std::optional<Rational> as_rational() const;

  const GrossTerm& leading() const;
  const GrossTerm& trailing() const;

  friend bool operator==(const GrossNumber& a, const GrossNumber& b);

 private:
  struct Canonical {};
  GrossNumber(std::vector<GrossTerm> terms, Canonical) : terms_(std::move(terms)) {}

  friend class DivisionBuilder;
  friend GrossNumber add(const GrossNumber&, const GrossNumber&);
  friend GrossNumber negate(const GrossNumber&);
  friend GrossNumber scalar_mul(const Rational&, const GrossNumber&);
  friend GrossNumber multiply(const GrossNumber&, const GrossNumber&);

  std::vector<GrossTerm> terms_;
};

/// One digit of the positional record: coefficient * G1^exponent.
struct GrossTerm {
  Rational coefficient;
  GrossNumber exponent;

  friend bool operator==(const GrossTerm&, const GrossTerm&) = default;
};

enum class NumClass { Zero, Infinitesimal, FiniteNonzero, Infinite };

enum class Parity { Even, Odd };

/// Result of truncated long division. dividend == quotient * divisor + remainder.
struct DivResult {
  GrossNumber quotient;
  GrossNumber remainder;
  bool exact = false;
  std::size_t terms_emitted = 0;
};

inline constexpr std::size_t kDefaultDivisionTerms = 20;
inline constexpr std::size_t kExactDivisionBudget = 1024;

// ---------------------------------------------------------------------------
// Ordering

/// Sign of the leading (largest-exponent) coefficient; 0 for zero.
inline int sign(const GrossNumber& x) {
  return x.is_zero() ? 0 : x.leading().coefficient.sign();
}

/// sign(x - y), computed without materializing the difference.
inline int compare(const GrossNumber& x, const GrossNumber& y) {
  const auto& a = x.terms();
  const auto& b = y.terms();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare(a[i].exponent, b[j].exponent);
    if (c > 0) return a[i].coefficient.sign();
    if (c < 0) return -b[j].coefficient.sign();
    auto cc = a[i].coefficient <=> b[j].coefficient;
    if (cc < 0) return -1;
    if (cc > 0) return 1;
    ++i;
    ++j;
  }
  if (i < a.size()) return a[i].coefficient.sign();
  if (j < b.size()) return -b[j].coefficient.sign();
  return 0;
}

inline std::strong_ordering operator<=>(const GrossNumber& a, const GrossNumber& b) {
  int c = compare(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline bool operator==(const GrossNumber& a, const GrossNumber& b) {
  return a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------
// Construction

inline GrossNumber::GrossNumber(std::int64_t value) : GrossNumber(Rational(value)) {}

inline GrossNumber::GrossNumber(const Rational& value) {
  if (!value.is_zero()) terms_.push_back(GrossTerm{value, GrossNumber{}});
}

inline GrossNumber GrossNumber::grossone() { return monomial(Rational(1), GrossNumber(1)); }

inline GrossNumber GrossNumber::monomial(const Rational& coefficient, GrossNumber exponent) {
  if (coefficient.is_zero()) return {};
  std::vector<GrossTerm> t;
  t.push_back(GrossTerm{coefficient, std::move(exponent)});
  return GrossNumber(std::move(t), Canonical{});
}

inline GrossNumber GrossNumber::normalize(std::vector<GrossTerm> terms) {
  std::stable_sort(terms.begin(), terms.end(), [](const GrossTerm& a, const GrossTerm& b) {
    return compare(a.exponent, b.exponent) > 0;
  });
  std::vector<GrossTerm> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exponent == t.exponent) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
  return GrossNumber(std::move(out), Canonical{});
}

inline bool GrossNumber::is_finite() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

inline std::optional<Rational> GrossNumber::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (is_finite()) return terms_[0].coefficient;
  return std::nullopt;
}

inline const GrossTerm& GrossNumber::leading() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "zero has no leading term");
  return terms_.front();
}

inline const GrossTerm& GrossNumber::trailing() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "zero has no trailing term");
  return terms_.back();
}

// ---------------------------------------------------------------------------
// Ring operations

inline GrossNumber add(const GrossNumber& x, const GrossNumber& y) {
  const auto& a = x.terms_;
  const auto& b = y.terms_;
  std::vector<GrossTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare(a[i].exponent, b[j].exponent);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      Rational s = a[i].coefficient + b[j].coefficient;
      if (!s.is_zero()) out.push_back(GrossTerm{std::move(s), a[i].exponent});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return GrossNumber(std::move(out), GrossNumber::Canonical{});
}

inline GrossNumber negate(const GrossNumber& x) {
  std::vector<GrossTerm> out = x.terms_;
  for (auto& t : out) t.coefficient = -t.coefficient;
  return GrossNumber(std::move(out), GrossNumber::Canonical{});
}

inline GrossNumber subtract(const GrossNumber& x, const GrossNumber& y) {
  return add(x, negate(y));
}

inline GrossNumber scalar_mul(const Rational& q, const GrossNumber& x) {
  if (q.is_zero()) return {};
  std::vector<GrossTerm> out = x.terms_;
  for (auto& t : out) t.coefficient *= q;
  return GrossNumber(std::move(out), GrossNumber::Canonical{});
}

inline GrossNumber multiply(const GrossNumber& x, const GrossNumber& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (y.is_monomial() || x.is_monomial()) {
    const GrossNumber& mono = y.is_monomial() ? y : x;
    const GrossNumber& poly = y.is_monomial() ? x : y;
    const GrossTerm& m = mono.terms_[0];
    std::vector<GrossTerm> out;
    out.reserve(poly.size());
    // Shifting every exponent by the same amount keeps the order.
    for (const auto& t : poly.terms_)
      out.push_back(GrossTerm{t.coefficient * m.coefficient, add(t.exponent, m.exponent)});
    return GrossNumber(std::move(out), GrossNumber::Canonical{});
  }
  std::vector<GrossTerm> out;
  out.reserve(x.size() * y.size());
  for (const auto& s : x.terms_)
    for (const auto& t : y.terms_)
      out.push_back(GrossTerm{s.coefficient * t.coefficient, add(s.exponent, t.exponent)});
  return GrossNumber::normalize(std::move(out));
}

inline GrossNumber operator-(const GrossNumber& x) { return negate(x); }
inline GrossNumber operator+(const GrossNumber& x, const GrossNumber& y) { return add(x, y); }
inline GrossNumber operator-(const GrossNumber& x, const GrossNumber& y) { return subtract(x, y); }
inline GrossNumber operator*(const GrossNumber& x, const GrossNumber& y) { return multiply(x, y); }
inline GrossNumber& operator+=(GrossNumber& x, const GrossNumber& y) { return x = add(x, y); }
inline GrossNumber& operator-=(GrossNumber& x, const GrossNumber& y) { return x = subtract(x, y); }
inline GrossNumber& operator*=(GrossNumber& x, const GrossNumber& y) { return x = multiply(x, y); }

// ---------------------------------------------------------------------------
// Classification

inline NumClass classify(const GrossNumber& x) {
  if (x.is_zero()) return NumClass::Zero;
  int s = sign(x.leading().exponent);
  if (s < 0) return NumClass::Infinitesimal;
  if (s == 0) return NumClass::FiniteNonzero;
  return NumClass::Infinite;
}

/// The grosspower-0 term as a finite gross-number (zero when absent).
inline GrossNumber finite_part(const GrossNumber& x) {
  for (const auto& t : x.terms())
    if (t.exponent.is_zero()) return GrossNumber(t.coefficient);
  return {};
}

inline bool has_infinite_part(const GrossNumber& x) {
  return !x.is_zero() && sign(x.leading().exponent) > 0;
}

inline bool has_infinitesimal_part(const GrossNumber& x) {
  return !x.is_zero() && sign(x.trailing().exponent) < 0;
}

/// Nesting depth of the exponent tree; zero has depth 0, finite numbers depth 1.
inline std::size_t depth(const GrossNumber& x) {
  std::size_t d = 0;
  for (const auto& t : x.terms()) d = std::max(d, depth(t.exponent));
  return x.is_zero() ? 0 : d + 1;
}

// ---------------------------------------------------------------------------
// Powers

namespace detail {

inline Rational rational_pow(Rational base, std::uint64_t n) {
  Rational result(1);
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

inline GrossNumber finite_integer(std::int64_t n) { return GrossNumber(n); }

}  // namespace detail

/// x^n for integer n. Negative n needs a monomial base.
inline GrossNumber power_int(const GrossNumber& x, std::int64_t n) {
  if (x.is_zero()) {
    if (n <= 0) throw Error(ErrorKind::ZeroToNonpositivePower, "zero to a non-positive power");
    return {};
  }
  if (n == 0) return GrossNumber(1);
  if (x.is_monomial()) {
    const GrossTerm& t = x.leading();
    std::uint64_t mag = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
    Rational c = detail::rational_pow(t.coefficient, mag);
    if (n < 0) c = c.reciprocal();
    return GrossNumber::monomial(c, multiply(t.exponent, detail::finite_integer(n)));
  }
  if (n < 0)
    throw Error(ErrorKind::NegativePowerOfNonMonomial,
                "negative power of a non-monomial; use division");
  GrossNumber result(1);
  GrossNumber base = x;
  auto k = static_cast<std::uint64_t>(n);
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

/// True for zero or a single grosspower-0 term with integer coefficient.
inline bool is_finite_integer(const GrossNumber& x) {
  auto r = x.as_rational();
  return r && r->is_integer();
}

/// x^k for gross exponent k, on the supported domain:
/// finite integer k, 0^k (k > 0), 1^k, and (G1^p)^k = G1^{p*k}.
inline GrossNumber power_gross(const GrossNumber& x, const GrossNumber& k) {
  if (is_finite_integer(k)) {
    const BigInt& n = k.is_zero() ? BigInt(0) : k.leading().coefficient.numerator();
    constexpr std::int64_t kLimit = std::int64_t{1} << 20;
    bool unit = x.is_monomial() && x.leading().coefficient.abs().is_one();
    if (!unit && !x.is_zero() && (n > kLimit || n < -kLimit))
      throw Error(ErrorKind::UnsupportedExponentiation, "integer exponent too large");
    if (n <= std::numeric_limits<std::int64_t>::max() &&
        n >= std::numeric_limits<std::int64_t>::min())
      return power_int(x, static_cast<std::int64_t>(n));
  }
  if (x.is_zero()) {
    if (sign(k) > 0) return {};
    throw Error(ErrorKind::ZeroToNonpositivePower, "zero to a non-positive power");
  }
  if (x == GrossNumber(1)) return x;
  if (x.is_monomial() && x.leading().coefficient.is_one())
    return GrossNumber::monomial(Rational(1), multiply(x.leading().exponent, k));
  throw Error(ErrorKind::UnsupportedExponentiation,
              "unsupported exponentiation: base must be 0, 1 or G1^p for a non-integer exponent");
}

// ---------------------------------------------------------------------------
// Division

class DivisionBuilder {
 public:
  static void emit(std::vector<GrossTerm>& q, GrossNumber& r, const GrossNumber& divisor,
                   const GrossNumber& exponent) {
    Rational c = r.leading().coefficient / divisor.leading().coefficient;
    GrossNumber step = GrossNumber::monomial(c, exponent);
    r = subtract(r, multiply(step, divisor));
    q.push_back(GrossTerm{std::move(c), exponent});
  }
  static GrossNumber make(std::vector<GrossTerm> q) {
    return GrossNumber(std::move(q), GrossNumber::Canonical{});
  }
};

/// Leading-term long division emitting at most max_terms quotient terms.
inline DivResult divide(const GrossNumber& x, const GrossNumber& y,
                        std::size_t max_terms = kDefaultDivisionTerms) {
  if (y.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (max_terms < 1) throw Error(ErrorKind::InvalidArgument, "max_terms must be >= 1");
  std::vector<GrossTerm> q;
  GrossNumber r = x;
  while (!r.is_zero() && q.size() < max_terms)
    DivisionBuilder::emit(q, r, y, subtract(r.leading().exponent, y.leading().exponent));
  DivResult out;
  out.terms_emitted = q.size();
  out.quotient = DivisionBuilder::make(std::move(q));
  out.exact = r.is_zero();
  out.remainder = std::move(r);
  return out;
}

/// x / y when the quotient is a finite gross-number; InexactDivision otherwise.
///
/// An exact quotient q has trailing grosspower trailing(x) - trailing(y), so the
/// long division stops as soon as it would emit a term below that bound.
inline GrossNumber exact_divide(const GrossNumber& x, const GrossNumber& y,
                                std::size_t max_terms = kExactDivisionBudget) {
  if (y.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (x.is_zero()) return {};
  if (y.is_monomial()) {
    const GrossTerm& m = y.leading();
    GrossNumber inv = GrossNumber::monomial(m.coefficient.reciprocal(), negate(m.exponent));
    return multiply(x, inv);
  }
  GrossNumber bound = subtract(x.trailing().exponent, y.trailing().exponent);
  std::vector<GrossTerm> q;
  GrossNumber r = x;
  while (!r.is_zero()) {
    GrossNumber e = subtract(r.leading().exponent, y.leading().exponent);
    if (compare(e, bound) < 0 || q.size() >= max_terms)
      throw Error(ErrorKind::InexactDivision, "inexact division");
    DivisionBuilder::emit(q, r, y, e);
  }
  return DivisionBuilder::make(std::move(q));
}

inline DivResult reciprocal(const GrossNumber& x, std::size_t max_terms = kDefaultDivisionTerms) {
  return divide(GrossNumber(1), x, max_terms);
}

inline GrossNumber operator/(const GrossNumber& x, const GrossNumber& y) {
  return exact_divide(x, y);
}

// ---------------------------------------------------------------------------
// Parity

/// Integer finite part, no infinitesimal terms; positive-exponent terms count as even.
inline bool is_integer_like(const GrossNumber& x) {
  for (const auto& t : x.terms()) {
    int s = sign(t.exponent);
    if (s < 0) return false;
    if (s == 0 && !t.coefficient.is_integer()) return false;
  }
  return true;
}

inline Parity parity(const GrossNumber& x) {
  if (!is_integer_like(x))
    throw Error(ErrorKind::ParityUndefined,
                "parity undefined: infinitesimal part or non-integer finite part");
  for (const auto& t : x.terms()) {
    if (t.exponent.is_zero()) {
      return t.coefficient.numerator() % 2 == 0 ? Parity::Even : Parity::Odd;
    }
  }
  return Parity::Even;
}

}  // namespace grossone

#endif  // GROSSONE_GROSS_NUMBER_HPP
