#ifndef GROSSONE_RATIONAL_HPP
#define GROSSONE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "grossone/error.hpp"

namespace grossone {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction with arbitrary-precision numerator and denominator.
///
/// Always kept reduced: gcd(|num|, den) == 1, den > 0, and zero is 0/1.
/// Used as the grossdigit type of gross-numbers.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit on purpose
  explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}

  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
    reduce();
  }

  /// Parses "-?digits", "-?digits.digits" or "-?digits/digits" exactly.
  static Rational parse(std::string_view text) {
    auto fail = [&] {
      return Error(ErrorKind::InvalidArgument,
                   "malformed rational literal '" + std::string(text) + "'");
    };
    bool negative = false;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      negative = text[i] == '-';
      ++i;
    }
    auto digits = [&](BigInt& out, std::size_t& count) {
      count = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        out = out * 10 + (text[i] - '0');
        ++i;
        ++count;
      }
    };
    BigInt whole = 0;
    std::size_t n = 0;
    digits(whole, n);
    if (n == 0) throw fail();
    Rational result(whole);
    if (i < text.size() && text[i] == '.') {
      ++i;
      BigInt frac = 0;
      digits(frac, n);
      if (n == 0) throw fail();
      BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(n));
      result = Rational(whole * scale + frac, scale);
    } else if (i < text.size() && text[i] == '/') {
      ++i;
      BigInt den = 0;
      digits(den, n);
      if (n == 0) throw fail();
      result = Rational(whole, den);
    }
    if (i != text.size()) throw fail();
    return negative ? -result : result;
  }

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  int sign() const noexcept { return num_.sign(); }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_one() const noexcept { return num_ == 1 && den_ == 1; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational abs() const { return Rational(num_ < 0 ? BigInt(-num_) : num_, den_, Reduced{}); }

  Rational reciprocal() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    return Rational(den_, num_);
  }

  Rational operator-() const { return Rational(-num_, den_, Reduced{}); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// True when the value has a finite decimal expansion (denominator 2^a 5^b).
  bool is_terminating_decimal() const {
    BigInt d = den_;
    while (d % 2 == 0) d /= 2;
    while (d % 5 == 0) d /= 5;
    return d == 1;
  }

  /// "n" or "n/d".
  std::string to_fraction_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  /// Lossless text: plain decimal when terminating, "n/d" otherwise.
  std::string to_exact_string() const {
    if (!is_terminating_decimal()) return to_fraction_string();
    unsigned twos = 0, fives = 0;
    BigInt d = den_;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    unsigned scale = std::max(twos, fives);
    BigInt scaled = num_ * (boost::multiprecision::pow(BigInt(10), scale) / den_);
    return format_scaled(scaled, scale);
  }

  /// Rounded to `digits` fractional digits (half away from zero), trailing zeros trimmed.
  std::string to_decimal_string(unsigned digits) const {
    BigInt scale = boost::multiprecision::pow(BigInt(10), digits);
    BigInt mag = num_ < 0 ? BigInt(-num_) : num_;
    BigInt scaled = (2 * mag * scale + den_) / (2 * den_);
    if (num_ < 0) scaled = -scaled;
    return format_scaled(scaled, digits);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_fraction_string();
  }

 private:
  struct Reduced {};
  Rational(BigInt num, BigInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  void reduce() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static std::string format_scaled(const BigInt& scaled, unsigned scale) {
    bool negative = scaled < 0;
    std::string digits = (negative ? BigInt(-scaled) : scaled).str();
    if (scale > 0) {
      if (digits.size() <= scale) digits.insert(0, scale - digits.size() + 1, '0');
      digits.insert(digits.size() - scale, 1, '.');
      while (digits.back() == '0') digits.pop_back();
      if (digits.back() == '.') digits.pop_back();
    }
    if (negative && digits != "0") digits.insert(0, 1, '-');
    return digits;
  }

  BigInt num_;
  BigInt den_;
};

}  // namespace grossone

#endif  // GROSSONE_RATIONAL_HPP
