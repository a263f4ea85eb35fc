#pragma once

#include "schottky/estimators.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schottky {

// delta_0 = 2 arccosh(sqrt 2), the hyperbolicity constant used for the
// escape threshold 2 delta_0.
Interval delta_zero(mpfr_prec_t prec = kDefaultPrecision);

enum class PathKind { finite, periodic, escalating };

// Infinite (or finite) reduced word i_1 i_2 ... generated lazily.
//   finite      the given letters only
//   periodic    the given block repeated; its last letter must differ from its first
//   escalating  the given letters, then last+1, last+2, ...
class WordPath {
 public:
  static WordPath finite(ReducedWord word);
  static WordPath periodic(ReducedWord period);
  static WordPath escalating(ReducedWord seed);

  PathKind kind() const { return kind_; }
  const ReducedWord& seed() const { return seed_; }
  // Number of letters, or nullopt for an infinite path.
  std::optional<std::size_t> length() const;
  // Letter j (0-based). Throws std::out_of_range past the end of a finite path.
  Letter letter(std::size_t j) const;
  ReducedWord prefix(std::size_t n) const;
  // Largest letter among the first n.
  Letter max_letter(std::size_t n) const;

 private:
  WordPath(PathKind kind, ReducedWord seed) : kind_(kind), seed_(std::move(seed)) {}

  PathKind kind_;
  ReducedWord seed_;
};

std::string to_string(PathKind kind);

struct LimitEstimate {
  std::size_t depth = 0;
  Rational center;  // centre of C_{i_1 ... i_n}
  Rational radius;  // the limit point is within this distance of `center`
};

// Limit point estimate from the depth-n disk of the path.
LimitEstimate limit_point(const GeneratorSchedule& schedule, const WordPath& path, std::size_t depth);
// Estimates for depths 1..depth.
std::vector<LimitEstimate> limit_point_sequence(const GeneratorSchedule& schedule, const WordPath& path,
                                                std::size_t depth);

// Point at distance t from p on the geodesic ray from p to lambda.
HPoint<Interval> geodesic_ray_point(const HPoint<Interval>& p, const BoundaryPoint<Interval>& lambda,
                                    const Interval& t);

// min over the ball of d(z, gamma p).
Interval orbit_distance(const HPoint<Interval>& z, const OrbitBall& ball);
Interval orbit_distance(const HPoint<Rational>& z, const OrbitBall& ball);

struct DirichletResult {
  bool member = true;       // no orbit point is certainly closer than p
  bool on_boundary = false; // some orbit point is (or may be) exactly as close as p
};

// Window approximation of x in D_p: d(x, p) <= d(x, gamma p) for every
// gamma != 1 of the ball. "false" is conclusive, "true" only says x lies in
// the finite intersection of half-planes.
DirichletResult dirichlet_membership(const HPoint<Rational>& x, const OrbitBall& ball);
DirichletResult dirichlet_membership(const HPoint<Interval>& x, const OrbitBall& ball);

struct RaySample {
  double t = 0;
  Interval distance;  // D(t) = orbit_distance(ray(t), p, ball)
};

enum class RayClass { recurrent, escaping, indeterminate };
std::string to_string(RayClass c);

struct RayProfile {
  Rational horizon;
  Rational step;
  std::size_t ball_radius = 0;
  std::vector<RaySample> samples;  // t = step, 2 step, ..., <= horizon
};

struct RaySummary {
  RayClass classification = RayClass::indeterminate;
  double threshold = 0;  // 2 delta_0
  double min_distance = 0;
  double final_distance = 0;
  std::optional<double> exit_time;  // first t with D > threshold
  std::size_t returns = 0;          // samples back at or below threshold after exit
  double beta = 0;
};

// Samples D(t) along the ray from the ball's basepoint to lambda.
RayProfile conicality_profile(const OrbitBall& ball, const BoundaryPoint<Interval>& lambda,
                              const Rational& horizon, const Rational& step);

// Heuristic reading of a profile, compared against 2 delta_0:
//   recurrent   D never exceeds the threshold, or comes back to it after exceeding it
//   escaping    D exceeds the threshold and stays above it for the last quarter of the horizon
//   otherwise   indeterminate
RaySummary summarize_profile(const RayProfile& profile, double tail_fraction = 0.5);

// min over the last `tail_fraction` of the samples of D(t)/t, clamped to
// [0, 1]. Throws std::invalid_argument for an empty profile.
double beta_depth(const RayProfile& profile, double tail_fraction = 0.5);

struct JorgensenResult {
  bool consistent = true;          // every sampled ray point passed the Dirichlet test
  bool vacuous = false;            // no samples (horizon 0)
  std::optional<double> first_exit;  // first t outside the window domain
};

JorgensenResult jorgensen_check(const OrbitBall& ball, const BoundaryPoint<Interval>& lambda,
                                const Rational& horizon, const Rational& step);

// Columns t,D_t,ball_n.
std::string profile_to_csv(const RayProfile& profile);
std::string summary_to_json(const RaySummary& summary, const RayProfile& profile, const std::string& word,
                            const std::string& lambda);

}  // namespace schottky
