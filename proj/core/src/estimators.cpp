#include "schottky/estimators.hpp"

#include <algorithm>
#include <cmath>

namespace schottky {

namespace {

long double level_sum(std::span<const double> log_radii, long double alpha) {
  long double s = 0;
  for (double l : log_radii) s += std::exp(alpha * static_cast<long double>(l));
  return s;
}

}  // namespace

BisectionResult level_dimension_bisect(std::span<const double> log_radii, double tolerance) {
  if (tolerance <= 0) throw std::invalid_argument("bisection tolerance must be positive");
  if (log_radii.size() < 2) {
    throw BracketError("S(alpha) = 1 has no positive root with fewer than two words");
  }
  for (double l : log_radii) {
    if (!(l < 0)) throw BracketError("a radius >= 1 keeps S(alpha) >= 1 for every alpha");
  }
  BisectionResult out;
  long double lo = 0;
  long double hi = 1;
  while (level_sum(log_radii, hi) >= 1) {
    lo = hi;
    hi *= 2;
    if (hi > 1e12L) throw BracketError("no sign change found while doubling the bracket");
  }
  while (hi - lo > tolerance) {
    const long double mid = (lo + hi) / 2;
    if (level_sum(log_radii, mid) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++out.iterations;
  }
  const long double alpha = (lo + hi) / 2;
  out.alpha = static_cast<double>(alpha);
  out.residual = static_cast<double>(level_sum(log_radii, alpha) - 1);
  return out;
}

BisectionResult level_dimension_bisect(const GeneratorSchedule& schedule, WordWindow window, std::size_t n,
                                       double tolerance, const SumOptions& options) {
  std::vector<double> logs;
  for (const auto& r : level_radii(schedule, window, n, options)) logs.push_back(log(r).mid());
  return level_dimension_bisect(logs, tolerance);
}

BoxCount box_count(std::span<const Rational> points, std::span<const Rational> scales) {
  for (const auto& s : scales) {
    if (s <= 0) throw std::invalid_argument("box-count scales must be positive");
  }
  std::vector<Rational> distinct(scales.begin(), scales.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 2) throw std::invalid_argument("box-count slope needs at least two distinct scales");

  BoxCount out;
  out.scales.assign(scales.begin(), scales.end());
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& s : scales) {
    std::vector<mpz_class> cells;
    cells.reserve(points.size());
    for (const auto& x : points) {
      const Rational q = x / s;
      mpz_class cell;
      mpz_fdiv_q(cell.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
      cells.push_back(std::move(cell));
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    out.counts.push_back(cells.size());
    xs.push_back(-log(Interval(s, 128)).mid());
    ys.push_back(cells.empty() ? 0.0 : std::log(static_cast<double>(cells.size())));
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0;
  double my = 0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    mx += xs[j];
    my += ys[j];
  }
  mx /= n;
  my /= n;
  double sxy = 0;
  double sxx = 0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    sxy += (xs[j] - mx) * (ys[j] - my);
    sxx += (xs[j] - mx) * (xs[j] - mx);
  }
  out.slope = sxy / sxx;
  return out;
}

std::vector<Rational> dyadic_scales(long first, long last) {
  std::vector<Rational> out;
  for (long j = first; j <= last; ++j) out.push_back(pow2(-j));
  return out;
}

std::vector<Rational> limit_set_sample(const GeneratorSchedule& schedule, WordWindow window, std::size_t depth) {
  std::vector<Rational> out;
  for (const auto& disk : level_disks<Rational>(schedule, window, depth)) out.push_back(disk.center);
  return out;
}

std::uint64_t orbit_ball_size(std::uint64_t m, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t j = 1; j <= n; ++j) total += reduced_word_count(m, j);
  return total;
}

OrbitBall::OrbitBall(const GeneratorSchedule& schedule, WordWindow window, HPoint<Rational> p, std::size_t radius,
                     mpfr_prec_t prec)
    : window_(window), radius_(radius), prec_(prec) {
  for (Letter i = window.first(); i <= window.last(); ++i) {
    const auto& e = schedule.entry(i);
    const Rational dx = p.x() - e.center;
    if (dx * dx + p.y() * p.y() <= e.radius * e.radius) {
      throw GeometryError("basepoint lies in the closed disk of generator " + std::to_string(i));
    }
  }
  elements_.push_back({{}, std::move(p)});
  std::size_t begin = 0;
  std::size_t end = 1;
  for (std::size_t j = 1; j <= radius; ++j) {
    for (Letter i = window.first(); i <= window.last(); ++i) {
      const Circle<Rational> mirror = schedule.circle<Rational>(i);
      for (std::size_t e = begin; e < end; ++e) {
        const auto& prev = elements_[e];
        if (!prev.word.empty() && prev.word.front() == i) continue;
        std::vector<Letter> word;
        word.reserve(prev.word.size() + 1);
        word.push_back(i);
        word.insert(word.end(), prev.word.begin(), prev.word.end());
        HPoint<Rational> image = invert(mirror, prev.point);
        elements_.push_back({std::move(word), std::move(image)});
      }
    }
    begin = end;
    end = elements_.size();
  }
  lifted_.reserve(elements_.size());
  for (const auto& e : elements_) lifted_.push_back(to_interval(e.point, prec_));
}

PoincareShells poincare_partial(const OrbitBall& ball, const Rational& exponent) {
  if (exponent < 0) throw std::invalid_argument("Poincare exponent must be nonnegative");
  const mpfr_prec_t prec = ball.precision();
  PoincareShells out;
  out.shells.assign(ball.radius() + 1, Interval(0L, prec));
  const HPoint<Rational>& p = ball.basepoint();
  const Interval s(exponent, prec);
  for (const auto& e : ball.elements()) {
    const Interval d = hyp_distance(p, e.point, prec);
    out.shells[e.word.size()] += exp(-(s * d));
  }
  Interval running(0L, prec);
  for (const auto& shell : out.shells) {
    running += shell;
    out.partials.push_back(running);
  }
  for (std::size_t j = 2; j < out.shells.size(); ++j) out.ratios.push_back((out.shells[j] / out.shells[j - 1]).mid());
  return out;
}

}  // namespace schottky
