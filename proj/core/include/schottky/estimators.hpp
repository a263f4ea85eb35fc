#pragma once

#include "schottky/dimension.hpp"

#include <span>
#include <vector>

namespace schottky {

// sum_j r_j^s over the cover. An upper bound for the s-dimensional content of
// anything the disks cover; no infimum over covers is taken.
template <Scalar T>
Interval hausdorff_content(std::span<const Circle<T>> cover, const Rational& s,
                           mpfr_prec_t prec = kDefaultPrecision) {
  if (s <= 0) throw std::invalid_argument("Hausdorff content needs a positive exponent");
  Interval total(0L, prec);
  for (const auto& disk : cover) total += pow(to_interval(disk.radius, prec), s);
  return total;
}

class BracketError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct BisectionResult {
  double alpha = 0;
  double residual = 0;  // S(alpha) - 1 at the returned alpha
  int iterations = 0;
};

// Root of S(alpha) = sum_w exp(alpha log r_w) = 1 for alpha > 0. The
// bracket starts at 0 and doubles until S drops below 1. Throws BracketError
// when no root exists (at most one word, or some radius >= 1).
BisectionResult level_dimension_bisect(std::span<const double> log_radii, double tolerance = 1e-9);

// Same for the level-n words of the window, using enclosed logarithms of the
// word radii.
BisectionResult level_dimension_bisect(const GeneratorSchedule& schedule, WordWindow window, std::size_t n,
                                       double tolerance = 1e-9, const SumOptions& options = {});

struct BoxCount {
  std::vector<Rational> scales;
  std::vector<std::uint64_t> counts;
  double slope = 0;  // least squares of log N against log(1/scale)
};

// Occupied cells [j s, (j+1) s) of the grid anchored at 0, per scale.
// Throws std::invalid_argument for fewer than two distinct scales or a
// nonpositive scale.
BoxCount box_count(std::span<const Rational> points, std::span<const Rational> scales);

// 2^{-first}, ..., 2^{-last}.
std::vector<Rational> dyadic_scales(long first, long last);

// Centres of the depth-n disks of the window: a finite sample of the limit set
// with every true limit point of the level within one radius of a sample point.
std::vector<Rational> limit_set_sample(const GeneratorSchedule& schedule, WordWindow window, std::size_t depth);

// Orbit points gamma p for the identity and every reduced word of length
// 1..radius over the window, in enumeration order by length.
class OrbitBall {
 public:
  struct Element {
    std::vector<Letter> word;  // empty for the identity
    HPoint<Rational> point;
  };

  // Throws GeometryError when p lies on or inside a window disk.
  OrbitBall(const GeneratorSchedule& schedule, WordWindow window, HPoint<Rational> p, std::size_t radius,
            mpfr_prec_t prec = kDefaultPrecision);

  const HPoint<Rational>& basepoint() const { return elements_.front().point; }
  WordWindow window() const { return window_; }
  std::size_t radius() const { return radius_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  // Orbit points lifted to intervals at the construction precision.
  const std::vector<HPoint<Interval>>& points() const { return lifted_; }
  mpfr_prec_t precision() const { return prec_; }

 private:
  WordWindow window_;
  std::size_t radius_;
  mpfr_prec_t prec_;
  std::vector<Element> elements_;
  std::vector<HPoint<Interval>> lifted_;
};

// 1 + sum_{j=1..n} m (m-1)^{j-1}.
std::uint64_t orbit_ball_size(std::uint64_t m, std::size_t n);

struct PoincareShells {
  std::vector<Interval> shells;    // shells[j] = sum over words of length j
  std::vector<Interval> partials;  // cumulative sums
  std::vector<double> ratios;      // shells[j] / shells[j-1] for j >= 2 (mid values)
};

// Partial Poincare series sum_{|gamma| <= n} exp(-s d(p, gamma p)) split by
// word length. Exponent 0 gives the shell cardinalities.
PoincareShells poincare_partial(const OrbitBall& ball, const Rational& exponent);

}  // namespace schottky
