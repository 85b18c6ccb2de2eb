#ifndef GROSSONE_PRINTER_HPP
#define GROSSONE_PRINTER_HPP

#include <ostream>
#include <string>

#include "grossone/gross_number.hpp"

namespace grossone {

/// Exact is the round-trip format. Decimal rounds grossdigits for display only.
struct PrintMode {
  enum class Kind { Exact, Decimal };
  Kind kind = Kind::Exact;
  unsigned digits = 6;

  static PrintMode exact() { return {}; }
  static PrintMode decimal(unsigned digits) { return {Kind::Decimal, digits}; }
};

namespace detail {

inline std::string coefficient_text(const Rational& c, const PrintMode& mode) {
  return mode.kind == PrintMode::Kind::Exact ? c.to_exact_string() : c.to_decimal_string(mode.digits);
}

}  // namespace detail

/// Prints terms in decreasing grosspower order: "0.5*G1^{2} + 0.5*G1 - 3 + G1^{-1}".
inline std::string print_canonical(const GrossNumber& x, const PrintMode& mode = PrintMode{}) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : x.terms()) {
    bool negative = t.coefficient.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational mag = t.coefficient.abs();
    if (t.exponent.is_zero()) {
      out += detail::coefficient_text(mag, mode);
      continue;
    }
    if (!mag.is_one()) out += detail::coefficient_text(mag, mode) + "*";
    out += "G1";
    if (t.exponent != GrossNumber(1)) out += "^{" + print_canonical(t.exponent, mode) + "}";
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const GrossNumber& x) {
  return os << print_canonical(x);
}

}  // namespace grossone

#endif  // GROSSONE_PRINTER_HPP
