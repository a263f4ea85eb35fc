#pragma once

#include "schottky/scalar.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace schottky {

class GeometryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Point of the upper half-plane model, y > 0.
template <Scalar T>
class HPoint {
 public:
  HPoint(T x, T y) : x_(std::move(x)), y_(std::move(y)) {
    if (sign_of(y_) != Sign::positive) {
      throw GeometryError("half-plane point needs a certainly positive imaginary part");
    }
  }

  const T& x() const { return x_; }
  const T& y() const { return y_; }

 private:
  T x_;
  T y_;
};

// Point of the ideal boundary R u {inf} of the half-plane.
template <Scalar T>
class BoundaryPoint {
 public:
  static BoundaryPoint infinity() { return BoundaryPoint(); }
  static BoundaryPoint finite(T x) { return BoundaryPoint(std::move(x)); }

  bool is_infinity() const { return !value_.has_value(); }
  const T& value() const {
    if (!value_) throw GeometryError("the point at infinity has no real coordinate");
    return *value_;
  }

 private:
  BoundaryPoint() = default;
  explicit BoundaryPoint(T x) : value_(std::move(x)) {}

  std::optional<T> value_;
};

// Circle centred on the real axis. Its upper half is a hyperbolic geodesic.
//
// `bounded_side` records which complementary region is meant when a circle is
// the image of a disk: true for the disk itself, false for its exterior.
template <Scalar T>
struct Circle {
  T center;
  T radius;
  bool bounded_side = true;

  Circle(T c, T r, bool bounded = true) : center(std::move(c)), radius(std::move(r)), bounded_side(bounded) {
    if (sign_of(radius) != Sign::positive) throw GeometryError("circle radius must be positive");
  }
};

template <Scalar T>
Circle<Interval> to_interval(const Circle<T>& c, mpfr_prec_t prec = kDefaultPrecision) {
  return Circle<Interval>(to_interval(c.center, prec), to_interval(c.radius, prec), c.bounded_side);
}

template <Scalar T>
HPoint<Interval> to_interval(const HPoint<T>& p, mpfr_prec_t prec = kDefaultPrecision) {
  return HPoint<Interval>(to_interval(p.x(), prec), to_interval(p.y(), prec));
}

// cosh of the hyperbolic distance: 1 + |p - q|^2 / (2 y_p y_q). Exact on the
// rational backend.
template <Scalar T>
T cosh_distance(const HPoint<T>& p, const HPoint<T>& q) {
  const T dx = p.x() - q.x();
  const T dy = p.y() - q.y();
  const T num = dx * dx + dy * dy;
  const T den = T(2) * p.y() * q.y();
  return T(1) + num / den;
}

template <Scalar T>
Interval hyp_distance(const HPoint<T>& p, const HPoint<T>& q, mpfr_prec_t prec = kDefaultPrecision) {
  return acosh(to_interval(cosh_distance(p, q), prec));
}

// Inversion in the circle: z -> c + r^2 / (conj(z) - c).
template <Scalar T>
HPoint<T> invert(const Circle<T>& circle, const HPoint<T>& z) {
  const T dx = z.x() - circle.center;
  const T norm = dx * dx + z.y() * z.y();
  const T r2 = circle.radius * circle.radius;
  return HPoint<T>(circle.center + r2 * dx / norm, r2 * z.y() / norm);
}

// Boundary action; the centre and infinity are exchanged.
template <Scalar T>
BoundaryPoint<T> invert(const Circle<T>& circle, const BoundaryPoint<T>& z) {
  if (z.is_infinity()) return BoundaryPoint<T>::finite(circle.center);
  const T dx = z.value() - circle.center;
  switch (sign_of(dx)) {
    case Sign::zero:
      return BoundaryPoint<T>::infinity();
    case Sign::indeterminate:
      throw GeometryError("cannot decide whether the point is the inversion centre");
    default:
      break;
  }
  return BoundaryPoint<T>::finite(circle.center + circle.radius * circle.radius / dx);
}

// Image of the circle `d` under inversion in `c`.
//
// With u = center(d) - center(c) the image has centre c + r_c^2 u/(u^2 - r_d^2)
// and radius r_c^2 r_d / |u^2 - r_d^2|. When the centre of `c` lies inside `d`
// the image of the disk is the exterior of the returned circle, which is
// recorded in `bounded_side`.
template <Scalar T>
Circle<T> invert(const Circle<T>& c, const Circle<T>& d) {
  const T u = d.center - c.center;
  const T den = u * u - d.radius * d.radius;
  const T r2 = c.radius * c.radius;
  const Sign s = sign_of(den);
  if (s == Sign::zero) {
    throw GeometryError("circle passes through the inversion centre; its image is a line");
  }
  if (s == Sign::indeterminate) {
    throw GeometryError("cannot decide whether the circle passes through the inversion centre");
  }
  const bool maps_to_bounded = s == Sign::positive;
  const T radius = r2 * d.radius / abs_value(den);
  return Circle<T>(c.center + r2 * u / den, radius, maps_to_bounded == d.bounded_side);
}

// Closed-disk containment of `inner` in `outer`: |c_i - c_o| + r_i <= r_o.
// Returns nullopt when the enclosures cannot decide.
template <Scalar T>
std::optional<bool> disk_contains(const Circle<T>& outer, const Circle<T>& inner, bool strict = true) {
  const T slack = outer.radius - inner.radius - abs_value(inner.center - outer.center);
  const Sign s = sign_of(slack);
  if (s == Sign::indeterminate) return std::nullopt;
  return strict ? s == Sign::positive : s != Sign::negative;
}

// Closed disks are disjoint when |c_a - c_b| > r_a + r_b.
template <Scalar T>
std::optional<bool> disks_disjoint(const Circle<T>& a, const Circle<T>& b) {
  const Sign s = sign_of(abs_value(a.center - b.center) - a.radius - b.radius);
  if (s == Sign::indeterminate) return std::nullopt;
  return s == Sign::positive;
}

// Point of the unit-disk model, or the image of a boundary point on S^1.
template <Scalar T>
struct DiskPoint {
  T re;
  T im;
};

// Cayley transform w = (z - i)/(z + i).
template <Scalar T>
DiskPoint<T> disk_from_half_plane(const HPoint<T>& z) {
  const T x2 = z.x() * z.x();
  const T yp1 = z.y() + T(1);
  const T den = x2 + yp1 * yp1;
  return {(x2 + z.y() * z.y() - T(1)) / den, T(-2) * z.x() / den};
}

template <Scalar T>
DiskPoint<T> disk_from_half_plane(const BoundaryPoint<T>& z) {
  if (z.is_infinity()) return {T(1), T(0)};
  const T x2 = z.value() * z.value();
  const T den = x2 + T(1);
  return {(x2 - T(1)) / den, T(-2) * z.value() / den};
}

// Inverse Cayley transform restricted to the unit circle: w -> i(1 + w)/(1 - w).
// The point w = 1 maps to infinity.
template <Scalar T>
BoundaryPoint<T> half_plane_from_disk_boundary(const DiskPoint<T>& w) {
  const T dre = T(1) - w.re;
  const T den = dre * dre + w.im * w.im;
  switch (sign_of(den)) {
    case Sign::zero:
      return BoundaryPoint<T>::infinity();
    case Sign::indeterminate:
      throw GeometryError("cannot separate the boundary point from 1");
    default:
      break;
  }
  // i(1+w)(1-conj w)/|1-w|^2 has real part -2 Im(w)/|1-w|^2.
  return BoundaryPoint<T>::finite(T(-2) * w.im / den);
}

// Orientation-preserving isometry z -> (z - x_o)/y_o sending o to i.
template <Scalar T>
HPoint<T> recentre(const HPoint<T>& z, const HPoint<T>& o) {
  return HPoint<T>((z.x() - o.x()) / o.y(), z.y() / o.y());
}

template <Scalar T>
BoundaryPoint<T> recentre(const BoundaryPoint<T>& z, const HPoint<T>& o) {
  if (z.is_infinity()) return z;
  return BoundaryPoint<T>::finite((z.value() - o.x()) / o.y());
}

}  // namespace schottky
