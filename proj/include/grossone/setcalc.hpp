#ifndef GROSSONE_SETCALC_HPP
#define GROSSONE_SETCALC_HPP

// Element counts of grossone-measured sets and infinitesimal probabilities.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "grossone/gross_number.hpp"
#include "grossone/printer.hpp"

namespace grossone {

/// Arithmetic progression start, start + step, ..., start + step*(count - 1).
///
/// The count is stored rather than derived, so facts such as "the even
/// naturals number G1/2" are representable without enumerating elements.
class ProgressionSet {
 public:
  ProgressionSet(GrossNumber start, Rational step, GrossNumber count)
      : start_(std::move(start)), step_(std::move(step)), count_(std::move(count)) {
    if (step_.is_zero()) throw Error(ErrorKind::InvalidArgument, "progression step must be nonzero");
    if (sign(count_) <= 0) throw Error(ErrorKind::InvalidArgument, "progression count must be positive");
    if (!is_integer_like(count_))
      throw Error(ErrorKind::InvalidArgument, "progression count must be integer-like");
  }

  /// N = {1, 2, ..., G1}.
  static ProgressionSet naturals() {
    return ProgressionSet(GrossNumber(1), Rational(1), GrossNumber::grossone());
  }
  /// E = {2, 4, ..., G1}, with G1/2 elements.
  static ProgressionSet evens() {
    return ProgressionSet(GrossNumber(2), Rational(2),
                          scalar_mul(Rational(BigInt(1), BigInt(2)), GrossNumber::grossone()));
  }
  /// {first, first+1, ..., last} for finite integers first <= last.
  static ProgressionSet range(std::int64_t first, std::int64_t last) {
    if (last < first) throw Error(ErrorKind::InvalidArgument, "empty range");
    return ProgressionSet(GrossNumber(first), Rational(1), GrossNumber(last - first + 1));
  }
  /// Finite explicit set; the elements must be listed as an arithmetic progression.
  static ProgressionSet from_elements(std::span<const Rational> elements) {
    if (elements.empty()) throw Error(ErrorKind::InvalidArgument, "empty element list");
    Rational step = elements.size() > 1 ? elements[1] - elements[0] : Rational(1);
    for (std::size_t i = 1; i < elements.size(); ++i)
      if (elements[i] - elements[i - 1] != step || step.is_zero())
        throw Error(ErrorKind::InvalidArgument, "elements do not form an arithmetic progression");
    return ProgressionSet(GrossNumber(elements[0]), step,
                          GrossNumber(static_cast<std::int64_t>(elements.size())));
  }

  const GrossNumber& start() const noexcept { return start_; }
  const Rational& step() const noexcept { return step_; }
  const GrossNumber& count() const noexcept { return count_; }

  /// start + step*(i - 1).
  GrossNumber element(const GrossNumber& i) const {
    return add(start_, scalar_mul(step_, subtract(i, GrossNumber(1))));
  }
  GrossNumber last() const { return element(count_); }

  friend bool operator==(const ProgressionSet&, const ProgressionSet&) = default;

 private:
  GrossNumber start_;
  Rational step_;
  GrossNumber count_;
};

inline GrossNumber count(const ProgressionSet& s) { return s.count(); }

/// 1-based index of x in s, if x is an element.
inline std::optional<GrossNumber> index_of(const GrossNumber& x, const ProgressionSet& s) {
  GrossNumber offset = scalar_mul(s.step().reciprocal(), subtract(x, s.start()));
  if (!is_integer_like(offset)) return std::nullopt;
  if (sign(offset) < 0 || compare(offset, subtract(s.count(), GrossNumber(1))) > 0)
    return std::nullopt;
  return add(offset, GrossNumber(1));
}

inline bool member(const GrossNumber& x, const ProgressionSet& s) {
  return index_of(x, s).has_value();
}

/// {a*x + b : x in s}; same number of elements.
inline ProgressionSet affine_image(const ProgressionSet& s, const Rational& a, const Rational& b) {
  if (a.is_zero()) throw Error(ErrorKind::InvalidArgument, "affine factor must be nonzero");
  return ProgressionSet(add(scalar_mul(a, s.start()), GrossNumber(b)), a * s.step(), s.count());
}

/// Count of s without x.
inline GrossNumber remove_one(const ProgressionSet& s, const GrossNumber& x) {
  if (!member(x, s))
    throw Error(ErrorKind::NotAMember, print_canonical(x) + " is not a member of the set");
  return subtract(s.count(), GrossNumber(1));
}

/// Count of s with x added.
inline GrossNumber add_one(const ProgressionSet& s, const GrossNumber& x) {
  if (member(x, s))
    throw Error(ErrorKind::AlreadyMember, print_canonical(x) + " is already a member of the set");
  return add(s.count(), GrossNumber(1));
}

/// Number of tuples (a_1, ..., a_n) with a_i drawn from sets of the given sizes.
inline GrossNumber product_count(std::span<const GrossNumber> counts) {
  GrossNumber total(1);
  for (const auto& c : counts) total = multiply(total, c);
  return total;
}

/// base_count^length; 2^G1 and similar are UnsupportedExponentiation.
inline GrossNumber tuple_space_count(const GrossNumber& base_count, const GrossNumber& length) {
  return power_gross(base_count, length);
}

/// Whether every element of a lies in b.
inline bool is_subset(const ProgressionSet& a, const ProgressionSet& b) {
  auto first = index_of(a.start(), b);
  if (!first) return false;
  if (a.count() == GrossNumber(1)) return true;
  Rational ratio = a.step() / b.step();
  if (!ratio.is_integer()) return false;
  // Indices into b are linear in the index into a, so both ends suffice.
  return index_of(a.last(), b).has_value();
}

/// For a proper subset a of b, whether count(a) < count(b). Always true; the
/// operation exists to check that claim on concrete sets.
inline bool proper_subset_strictly_smaller(const ProgressionSet& a, const ProgressionSet& b) {
  if (!is_subset(a, b)) throw Error(ErrorKind::NotASubset, "first set is not a subset of the second");
  if (a.count() == b.count()) throw Error(ErrorKind::NotASubset, "sets are equal, not a proper subset");
  return compare(a.count(), b.count()) < 0;
}

struct HotelOutcome {
  bool accommodated = false;
  GrossNumber evicted_room;
};

/// Moves the guest of room i to room i+1 in a full hotel with `rooms` rooms.
inline HotelOutcome hotel_shift(const GrossNumber& rooms) {
  ProgressionSet hotel(GrossNumber(1), Rational(1), rooms);
  GrossNumber target = add(rooms, GrossNumber(1));
  HotelOutcome out;
  out.accommodated = member(target, hotel);
  if (!out.accommodated) out.evicted_room = rooms;
  return out;
}

// ---------------------------------------------------------------------------
// Probability

/// Equiprobable sample space with `total` elementary events, `favorable` of them in E.
struct ProbabilityModel {
  GrossNumber total;
  GrossNumber favorable;

  ProbabilityModel(GrossNumber k, GrossNumber m) : total(std::move(k)), favorable(std::move(m)) {
    if (sign(total) <= 0) throw Error(ErrorKind::InvalidArgument, "total must be positive");
    if (sign(favorable) < 0) throw Error(ErrorKind::InvalidArgument, "favorable must be non-negative");
    if (compare(favorable, total) > 0)
      throw Error(ErrorKind::InvalidArgument, "favorable must not exceed total");
  }
};

enum class EventClass { Impossible, InfinitesimalProbability, FiniteProbability, Certain };
enum class EventExtent { Point, Arc };

constexpr std::string_view to_string(EventClass c) {
  switch (c) {
    case EventClass::Impossible: return "Impossible";
    case EventClass::InfinitesimalProbability: return "InfinitesimalProbability";
    case EventClass::FiniteProbability: return "FiniteProbability";
    case EventClass::Certain: return "Certain";
  }
  return "Unknown";
}

constexpr std::string_view to_string(EventExtent e) {
  return e == EventExtent::Point ? "Point" : "Arc";
}

/// P(E) = m / K, exactly.
inline GrossNumber probability(const ProbabilityModel& model) {
  return exact_divide(model.favorable, model.total);
}

inline EventClass classify_event(const ProbabilityModel& model) {
  if (model.favorable.is_zero()) return EventClass::Impossible;
  if (model.favorable == model.total) return EventClass::Certain;
  return classify(probability(model)) == NumClass::Infinitesimal
             ? EventClass::InfinitesimalProbability
             : EventClass::FiniteProbability;
}

/// A finite favorable count marks a point, an infinite one an arc.
inline EventExtent event_extent(const GrossNumber& m) {
  switch (classify(m)) {
    case NumClass::FiniteNonzero:
      if (sign(m) > 0) return EventExtent::Point;
      break;
    case NumClass::Infinite:
      if (sign(m) > 0) return EventExtent::Arc;
      break;
    default:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, "extent is defined for positive finite or infinite counts");
}

}  // namespace grossone

#endif  // GROSSONE_SETCALC_HPP
