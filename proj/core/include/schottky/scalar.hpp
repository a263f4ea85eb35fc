#pragma once

#include "schottky/interval.hpp"

#include <concepts>
#include <string>
#include <string_view>

namespace schottky {

// The two arithmetic backends every geometric routine is generic over:
// exact rationals, and rigorous MPFR enclosures.
template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, Interval>;

enum class Sign { negative, zero, positive, indeterminate };

inline Sign sign_of(const Rational& q) {
  const int s = sgn(q);
  return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

inline Sign sign_of(const Interval& x) {
  if (certainly_positive(x)) return Sign::positive;
  if (certainly_negative(x)) return Sign::negative;
  if (x.is_point()) return Sign::zero;
  return Sign::indeterminate;
}

inline Rational abs_value(const Rational& q) { return abs(q); }
inline Interval abs_value(const Interval& x) { return abs(x); }

inline Interval to_interval(const Rational& q, mpfr_prec_t prec = kDefaultPrecision) {
  return Interval(q, prec);
}
inline Interval to_interval(const Interval& x, mpfr_prec_t = kDefaultPrecision) { return x; }

// Lifts an exact value into the requested backend.
template <Scalar T>
T lift(const Rational& q, mpfr_prec_t prec = kDefaultPrecision) {
  if constexpr (std::same_as<T, Rational>) {
    return q;
  } else {
    return Interval(q, prec);
  }
}

// Equality that is decided exactly for rationals and means "cannot be told
// apart" for enclosures.
inline bool may_equal(const Rational& a, const Rational& b) { return a == b; }
inline bool may_equal(const Interval& a, const Interval& b) { return a.overlaps(b); }

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(const Interval& x) { return x.mid(); }

// Parses "p/q", integers, and plain or scientific decimals ("0.25", "1e-3")
// into an exact rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

// Canonical exact text: "p/q", or "p" for integers.
std::string to_string(const Rational& q);

// Decimal approximation for human-readable output.
std::string to_decimal(const Rational& q, int digits = 17);

// 2^e for any integer e.
Rational pow2(long e);

}  // namespace schottky
