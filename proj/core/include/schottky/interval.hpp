#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <string>

namespace schottky {

using Rational = mpq_class;

inline constexpr mpfr_prec_t kDefaultPrecision = 256;

// Rigorous enclosure of a real number at a fixed binary precision.
//
// The value is carried as a midpoint with an error radius; internally the
// two endpoints are kept and every operation rounds the lower endpoint down
// and the upper endpoint up, so the true result is always contained.
// Precision of a result is the larger precision of its operands.
class Interval {
 public:
  Interval();
  explicit Interval(long value, mpfr_prec_t prec = kDefaultPrecision);
  explicit Interval(const Rational& value, mpfr_prec_t prec = kDefaultPrecision);
  Interval(const Rational& lower, const Rational& upper, mpfr_prec_t prec = kDefaultPrecision);

  static Interval from_double(double value, mpfr_prec_t prec = kDefaultPrecision);
  static Interval positive_infinity(mpfr_prec_t prec = kDefaultPrecision);
  static Interval pi(mpfr_prec_t prec = kDefaultPrecision);
  // Smallest interval containing both arguments.
  static Interval hull(const Interval& a, const Interval& b);

  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

  // Exact endpoints (dyadic rationals). Throws for infinite endpoints.
  Rational lower_rational() const;
  Rational upper_rational() const;

  double lower() const;  // rounded toward -inf
  double upper() const;  // rounded toward +inf
  double mid() const;
  // Upper bound on half the width.
  double radius() const;

  bool is_finite() const;
  bool is_point() const;
  bool contains(const Rational& q) const;
  bool contains(const Interval& inner) const;
  bool contains_zero() const;
  bool overlaps(const Interval& other) const;

  // "mid +/- rad" with the given number of significant digits.
  std::string to_string(int digits = 17) const;

  Interval operator-() const;
  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);
  Interval& operator*=(const Interval& rhs);
  Interval& operator/=(const Interval& rhs);

  friend Interval operator+(Interval lhs, const Interval& rhs) { return lhs += rhs; }
  friend Interval operator-(Interval lhs, const Interval& rhs) { return lhs -= rhs; }
  friend Interval operator*(Interval lhs, const Interval& rhs) { return lhs *= rhs; }
  friend Interval operator/(Interval lhs, const Interval& rhs) { return lhs /= rhs; }

  friend Interval operator+(const Interval& lhs, const Rational& rhs) {
    return lhs + Interval(rhs, lhs.precision());
  }
  friend Interval operator-(const Interval& lhs, const Rational& rhs) {
    return lhs - Interval(rhs, lhs.precision());
  }
  friend Interval operator*(const Interval& lhs, const Rational& rhs) {
    return lhs * Interval(rhs, lhs.precision());
  }
  friend Interval operator/(const Interval& lhs, const Rational& rhs) {
    return lhs / Interval(rhs, lhs.precision());
  }
  friend Interval operator-(const Rational& lhs, const Interval& rhs) {
    return Interval(lhs, rhs.precision()) - rhs;
  }
  friend Interval operator/(const Rational& lhs, const Interval& rhs) {
    return Interval(lhs, rhs.precision()) / rhs;
  }

  // Raw endpoint access for the function library.
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo_mut() { return lo_; }
  mpfr_ptr hi_mut() { return hi_; }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

// Certain comparisons: true only when every value of the enclosures agrees.
bool certainly_less(const Interval& a, const Interval& b);
bool certainly_less_equal(const Interval& a, const Interval& b);
bool certainly_positive(const Interval& a);
bool certainly_negative(const Interval& a);

Interval abs(const Interval& x);
Interval square(const Interval& x);
Interval sqrt(const Interval& x);
Interval exp(const Interval& x);
// log of an enclosure reaching down to zero has lower endpoint -inf.
Interval log(const Interval& x);
Interval log2(const Interval& x);
Interval sin(const Interval& x);
Interval cos(const Interval& x);
Interval cosh(const Interval& x);
Interval sinh(const Interval& x);
// Argument is clamped to [1, inf) first.
Interval acosh(const Interval& x);
Interval asinh(const Interval& x);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
// x^(p/q) for x >= 0 via q-th root of x^p.
Interval pow(const Interval& x, const Rational& exponent);
// exp(exponent * log(x)) for x > 0 and an arbitrary real exponent.
Interval pow(const Interval& x, const Interval& exponent);

}  // namespace schottky
