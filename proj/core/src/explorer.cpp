#include "schottky/explorer.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace schottky {

Interval delta_zero(mpfr_prec_t prec) { return Interval(2L, prec) * acosh(sqrt(Interval(2L, prec))); }

WordPath WordPath::finite(ReducedWord word) { return WordPath(PathKind::finite, std::move(word)); }

WordPath WordPath::periodic(ReducedWord period) {
  if (period.front() == period.back()) {
    throw std::invalid_argument("periodic block " + period.to_string() +
                                " repeats into equal adjacent letters");
  }
  return WordPath(PathKind::periodic, std::move(period));
}

WordPath WordPath::escalating(ReducedWord seed) { return WordPath(PathKind::escalating, std::move(seed)); }

std::optional<std::size_t> WordPath::length() const {
  if (kind_ == PathKind::finite) return seed_.length();
  return std::nullopt;
}

Letter WordPath::letter(std::size_t j) const {
  const std::size_t n = seed_.length();
  switch (kind_) {
    case PathKind::finite:
      if (j >= n) throw std::out_of_range("finite word has only " + std::to_string(n) + " letters");
      return seed_[j];
    case PathKind::periodic:
      return seed_[j % n];
    case PathKind::escalating:
      if (j < n) return seed_[j];
      return seed_.back() + static_cast<Letter>(j - n + 1);
  }
  return seed_[0];
}

ReducedWord WordPath::prefix(std::size_t n) const {
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) out.push_back(letter(j));
  return ReducedWord(std::move(out));
}

Letter WordPath::max_letter(std::size_t n) const {
  Letter best = 0;
  for (std::size_t j = 0; j < n; ++j) best = std::max(best, letter(j));
  return best;
}

std::string to_string(PathKind kind) {
  switch (kind) {
    case PathKind::finite: return "finite";
    case PathKind::periodic: return "periodic";
    case PathKind::escalating: return "escalating";
  }
  return "finite";
}

LimitEstimate limit_point(const GeneratorSchedule& schedule, const WordPath& path, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("limit point estimates need depth >= 1");
  const Circle<Rational> disk = word_disk<Rational>(schedule, path.prefix(depth));
  return {depth, disk.center, disk.radius};
}

std::vector<LimitEstimate> limit_point_sequence(const GeneratorSchedule& schedule, const WordPath& path,
                                                std::size_t depth) {
  std::vector<LimitEstimate> out;
  for (std::size_t n = 1; n <= depth; ++n) out.push_back(limit_point(schedule, path, n));
  return out;
}

HPoint<Interval> geodesic_ray_point(const HPoint<Interval>& p, const BoundaryPoint<Interval>& lambda,
                                    const Interval& t) {
  const Interval stretch = exp(t);
  if (lambda.is_infinity()) return HPoint<Interval>(p.x(), p.y() * stretch);
  // z -> -1/(z - lambda) moves lambda to infinity, where the ray is vertical.
  const Interval a = p.x() - lambda.value();
  const Interval& b = p.y();
  const Interval den = a * a + b * b;
  const Interval u = -a / den;
  const Interval v = b / den * stretch;
  const Interval den2 = u * u + v * v;
  return HPoint<Interval>(lambda.value() - u / den2, v / den2);
}

Interval orbit_distance(const HPoint<Interval>& z, const OrbitBall& ball) {
  const auto& points = ball.points();
  Interval best = cosh_distance(z, points.front());
  for (std::size_t e = 1; e < points.size(); ++e) best = min(best, cosh_distance(z, points[e]));
  return acosh(best);
}

Interval orbit_distance(const HPoint<Rational>& z, const OrbitBall& ball) {
  const auto& elements = ball.elements();
  Rational best = cosh_distance(z, elements.front().point);
  for (std::size_t e = 1; e < elements.size(); ++e) {
    const Rational c = cosh_distance(z, elements[e].point);
    if (c < best) best = c;
  }
  return acosh(Interval(best, ball.precision()));
}

DirichletResult dirichlet_membership(const HPoint<Rational>& x, const OrbitBall& ball) {
  const auto& elements = ball.elements();
  const Rational own = cosh_distance(x, elements.front().point);
  DirichletResult out;
  for (std::size_t e = 1; e < elements.size(); ++e) {
    const Rational other = cosh_distance(x, elements[e].point);
    if (other < own) {
      out.member = false;
      return out;
    }
    if (other == own) out.on_boundary = true;
  }
  return out;
}

DirichletResult dirichlet_membership(const HPoint<Interval>& x, const OrbitBall& ball) {
  const auto& points = ball.points();
  const Interval own = cosh_distance(x, points.front());
  DirichletResult out;
  for (std::size_t e = 1; e < points.size(); ++e) {
    const Interval other = cosh_distance(x, points[e]);
    if (certainly_less(other, own)) {
      out.member = false;
      return out;
    }
    if (other.overlaps(own)) out.on_boundary = true;
  }
  return out;
}

std::string to_string(RayClass c) {
  switch (c) {
    case RayClass::recurrent: return "recurrent-consistent";
    case RayClass::escaping: return "escaping-consistent";
    case RayClass::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

namespace {

// t_j = j * step for j = 1.. while t_j <= horizon.
std::vector<Rational> sample_times(const Rational& horizon, const Rational& step) {
  if (step <= 0) throw std::invalid_argument("ray step must be positive");
  if (horizon < 0) throw std::invalid_argument("ray horizon must be nonnegative");
  std::vector<Rational> out;
  for (Rational t = step; t <= horizon; t += step) out.push_back(t);
  return out;
}

}  // namespace

RayProfile conicality_profile(const OrbitBall& ball, const BoundaryPoint<Interval>& lambda,
                              const Rational& horizon, const Rational& step) {
  RayProfile profile{horizon, step, ball.radius(), {}};
  const auto times = sample_times(horizon, step);
  const HPoint<Interval>& p = ball.points().front();
  profile.samples.resize(times.size());
  for (std::size_t j = 0; j < times.size(); ++j) {
    const Interval t(times[j], ball.precision());
    profile.samples[j] = {times[j].get_d(), orbit_distance(geodesic_ray_point(p, lambda, t), ball)};
  }
  return profile;
}

double beta_depth(const RayProfile& profile, double tail_fraction) {
  if (profile.samples.empty()) throw std::invalid_argument("beta depth of an empty profile");
  if (!(tail_fraction > 0 && tail_fraction <= 1)) throw std::invalid_argument("tail fraction must lie in (0, 1]");
  const std::size_t n = profile.samples.size();
  const std::size_t tail = std::max<std::size_t>(1, static_cast<std::size_t>(static_cast<double>(n) * tail_fraction));
  double best = 1;
  for (std::size_t j = n - tail; j < n; ++j) {
    const auto& s = profile.samples[j];
    best = std::min(best, s.distance.mid() / s.t);
  }
  return std::clamp(best, 0.0, 1.0);
}

RaySummary summarize_profile(const RayProfile& profile, double tail_fraction) {
  RaySummary out;
  out.threshold = 2 * delta_zero(64).mid();
  if (profile.samples.empty()) return out;
  out.beta = beta_depth(profile, tail_fraction);
  out.min_distance = profile.samples.front().distance.mid();
  out.final_distance = profile.samples.back().distance.mid();
  for (const auto& s : profile.samples) {
    const double d = s.distance.mid();
    out.min_distance = std::min(out.min_distance, d);
    if (!out.exit_time) {
      if (d > out.threshold) out.exit_time = s.t;
    } else if (d <= out.threshold) {
      ++out.returns;
    }
  }
  if (!out.exit_time || out.returns > 0) {
    out.classification = RayClass::recurrent;
    return out;
  }
  const double quarter = 0.75 * profile.horizon.get_d();
  bool sustained = true;
  for (const auto& s : profile.samples) {
    if (s.t >= quarter && !(s.distance.mid() > out.threshold)) sustained = false;
  }
  out.classification = sustained && *out.exit_time < quarter ? RayClass::escaping : RayClass::indeterminate;
  return out;
}

JorgensenResult jorgensen_check(const OrbitBall& ball, const BoundaryPoint<Interval>& lambda,
                                const Rational& horizon, const Rational& step) {
  JorgensenResult out;
  const auto times = sample_times(horizon, step);
  if (times.empty()) {
    out.vacuous = true;
    return out;
  }
  const HPoint<Interval>& p = ball.points().front();
  for (const auto& t : times) {
    const HPoint<Interval> z = geodesic_ray_point(p, lambda, Interval(t, ball.precision()));
    if (!dirichlet_membership(z, ball).member) {
      out.consistent = false;
      out.first_exit = t.get_d();
      return out;
    }
  }
  return out;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string profile_to_csv(const RayProfile& profile) {
  std::ostringstream out;
  out << "t,D_t,ball_n\n";
  for (const auto& s : profile.samples) {
    out << format_double(s.t) << ',' << format_double(s.distance.mid()) << ',' << profile.ball_radius << '\n';
  }
  return out.str();
}

std::string summary_to_json(const RaySummary& summary, const RayProfile& profile, const std::string& word,
                            const std::string& lambda) {
  nlohmann::ordered_json doc;
  doc["word"] = word;
  doc["lambda"] = lambda;
  doc["horizon"] = to_string(profile.horizon);
  doc["step"] = to_string(profile.step);
  doc["ball_n"] = profile.ball_radius;
  doc["samples"] = profile.samples.size();
  doc["classification"] = to_string(summary.classification);
  doc["heuristic"] = true;
  doc["threshold"] = summary.threshold;
  doc["min_D"] = summary.min_distance;
  doc["final_D"] = summary.final_distance;
  doc["exit_time"] = summary.exit_time ? nlohmann::ordered_json(*summary.exit_time) : nlohmann::ordered_json();
  doc["returns"] = summary.returns;
  doc["beta_proxy"] = summary.beta;
  return doc.dump(2) + "\n";
}

}  // namespace schottky
