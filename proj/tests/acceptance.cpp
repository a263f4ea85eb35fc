// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance          run every criterion
//   acceptance 3 7      run the listed criteria
//
// Exit status is 0 iff every selected criterion passed.

#include "support.hpp"

#include "schottky/certificate.hpp"
#include "schottky/estimators.hpp"
#include "schottky/explorer.hpp"
#include "schottky/visual.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

using namespace schottky;
using R = Rational;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::string cli(const std::string& args) { return std::string(SCHOTTKY_CLI_PATH) + " " + args; }

Outcome beardon_recursion() {
  const auto start = Clock::now();
  const auto sweep = beardon_sweep(paper_schedule(8), {2, 5}, 4);
  const double t = seconds_since(start);
  // Lengths 2..4 over five letters: 20 + 80 + 320 words.
  const bool pass = sweep.words == 420 && sweep.failures == 0 && t < 10;
  return {pass, fmt("%zu words, %zu failures, max lhs/rhs %.3e, %.2fs", sweep.words, sweep.failures,
                    sweep.max_ratio.get_d(), t)};
}

Outcome radii_tail() {
  const auto start = Clock::now();
  bool pass = true;
  std::string detail;
  for (Letter k = 2; k <= 4; ++k) {
    const RadiiSum sum = paper_radii_sum(k, 6, R(1, 2 * k));
    const R rhs = R(1) / (3 * pow2(static_cast<long>(k)));
    const bool ok = certainly_less_equal(sum.total, Interval(rhs));
    pass = pass && ok;
    detail += fmt("k=%u: %.6g <= %.6g%s; ", k, sum.total.upper(), rhs.get_d(), ok ? "" : " FAILS");
  }
  const double t = seconds_since(start);
  pass = pass && t < 1;
  return {pass, detail + fmt("%.3fs", t)};
}

Outcome center_control_bound() {
  const auto start = Clock::now();
  bool pass = true;
  std::string detail;
  for (Letter k = 2; k <= 4; ++k) {
    const auto cc = center_control(paper_schedule(k + 6), {k, 6}, R(1, 2 * k));
    const R rhs = R(1) / (3 * pow2(static_cast<long>(k) - 1));
    const bool ok = cc.has_tail && certainly_less_equal(cc.total, Interval(rhs));
    pass = pass && ok;
    detail += fmt("k=%u: %.6g <= %.6g%s; ", k, cc.total.upper(), rhs.get_d(), ok ? "" : " FAILS");
  }
  const double t = seconds_since(start);
  pass = pass && t < 1;
  return {pass, detail + fmt("%.3fs", t)};
}

Outcome level_monotonicity() {
  const auto start = Clock::now();
  bool pass = true;
  std::string detail;
  for (Letter k = 2; k <= 3; ++k) {
    const auto table = alpha_sum_table(paper_schedule(k + 6), {k, 6}, 4, R(1, 2 * k));
    for (std::size_t n = 2; n <= 4; ++n) {
      const bool ok = certainly_less_equal(table.sums[n - 1], table.sums[n - 2]);
      pass = pass && ok && table.pruned[n - 1] == 0;
      detail += fmt("k=%u S_%zu=%.3e%s; ", k, n, table.sums[n - 1].mid(), ok ? "" : " FAILS");
    }
  }
  const double t = seconds_since(start);
  pass = pass && t < 30;
  return {pass, detail + fmt("%.2fs", t)};
}

Outcome end_to_end() {
  struct Case {
    std::string args;
    std::string verdict;
    int code;
  };
  const std::vector<Case> cases = {{"certify --k 2 --alpha 1/4", "verdict: certified", 0},
                                   {"certify --k 3 --alpha 1/6", "verdict: certified", 0},
                                   {"certify --k 2 --alpha 1/100", "verdict: not certified", 1}};
  bool pass = true;
  std::string detail;
  for (const auto& c : cases) {
    const auto r = test_support::run(cli(c.args));
    const bool ok = r.exit_code == c.code && r.output.find(c.verdict + "\n") != std::string::npos;
    pass = pass && ok;
    detail += fmt("'%s' exit %d%s; ", c.args.c_str(), r.exit_code, ok ? "" : " UNEXPECTED");
  }
  return {pass, detail};
}

Outcome dimension_trend() {
  const auto s = paper_schedule(8);
  const WordWindow window{2, 4};
  std::vector<double> alphas;
  for (std::size_t n = 1; n <= 3; ++n) alphas.push_back(level_dimension_bisect(s, window, n).alpha);
  const bool nonincreasing = alphas[1] <= alphas[0] && alphas[2] <= alphas[1];
  const auto points = limit_set_sample(s, window, 4);
  const auto bc = box_count(points, dyadic_scales(62, 64));
  const bool slope_ok = bc.slope <= 0.25 + 0.1;
  return {nonincreasing && slope_ok,
          fmt("alpha_n = %.5f, %.5f, %.5f; box slope %.4f (limit 0.35)", alphas[0], alphas[1], alphas[2], bc.slope)};
}

Outcome visual_identity() {
  std::mt19937_64 rng(1234);
  const mpfr_prec_t prec = 256;
  const auto o = HPoint<R>(R(0), R(1));
  int bad_pairs = 0;
  double worst = 0;
  int pairs = 0;
  while (pairs < 1000) {
    const R a = test_support::random_rational(rng, 20000, 997);
    const R b = test_support::random_rational(rng, 20000, 997);
    if (a == b) continue;
    ++pairs;
    // Oracle: angle between the Cayley images (x - i)/(x + i) on the unit circle.
    const auto w = [](const R& x) {
      const std::complex<long double> z(static_cast<long double>(x.get_d()), 0);
      return (z - std::complex<long double>(0, 1)) / (z + std::complex<long double>(0, 1));
    };
    long double theta = std::abs(std::arg(w(a) / w(b)));
    const long double expected = std::sin(theta / 2);
    const Interval g = boundary_gromov_product(BoundaryPoint<R>::finite(a), BoundaryPoint<R>::finite(b), o, prec);
    const double err = std::abs(exp(-g).mid() - static_cast<double>(expected));
    worst = std::max(worst, err);
    if (err > 1e-9) ++bad_pairs;
  }
  const Interval pi = Interval::pi(prec);
  int bad_grid = 0;
  for (int j = 0; j <= 10000; ++j) {
    const Interval half = pi * Interval(R(j, 20000), prec);
    const Interval s = sin(half);
    if (certainly_less(half, s) || certainly_less(pi * s, half)) ++bad_grid;
  }
  return {bad_pairs == 0 && bad_grid == 0,
          fmt("%d pairs, worst |e^-(a|b) - sin(theta/2)| = %.2e; grid violations %d of 10001", pairs, worst, bad_grid)};
}

Outcome property_suites() {
  std::mt19937_64 rng(99);
  int involution_failures = 0;
  int agreement_failures = 0;
  const auto s = paper_schedule(8);
  const auto words = enumerate_words({0, 5}, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    const Circle<R> c(test_support::random_rational(rng, 100, 9), test_support::random_positive(rng, 20, 9));
    const HPoint<R> z(test_support::random_rational(rng, 200, 11), test_support::random_positive(rng, 50, 11));
    const auto back = invert(c, invert(c, z));
    if (back.x() != z.x() || back.y() != z.y()) ++involution_failures;
    const BoundaryPoint<R> x = BoundaryPoint<R>::finite(test_support::random_rational(rng, 500, 13));
    if (!x.is_infinity() && x.value() != c.center) {
      const auto xb = invert(c, invert(c, x));
      if (xb.is_infinity() || xb.value() != x.value()) ++involution_failures;
    }
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const HPoint<R> p(test_support::random_rational(rng, 200, 11), test_support::random_positive(rng, 50, 11));
    const HPoint<R> q(test_support::random_rational(rng, 200, 11), test_support::random_positive(rng, 50, 11));
    if (!cosh_distance(to_interval(p), to_interval(q)).contains(cosh_distance(p, q))) ++agreement_failures;
    const auto& w = words[static_cast<std::size_t>(trial) % words.size()];
    const auto exact = word_disk<R>(s, w);
    const auto approx = word_disk<Interval>(s, w);
    if (!approx.center.contains(exact.center) || !approx.radius.contains(exact.radius)) ++agreement_failures;
    const Circle<R> c(test_support::random_rational(rng, 100, 9), test_support::random_positive(rng, 20, 9));
    const auto img = invert(to_interval(c), to_interval(p));
    const auto img_exact = invert(c, p);
    if (!img.x().contains(img_exact.x()) || !img.y().contains(img_exact.y())) ++agreement_failures;
  }
  return {involution_failures == 0 && agreement_failures == 0,
          fmt("involution failures %d of 1000, enclosure failures %d of 1000", involution_failures,
              agreement_failures)};
}

Outcome diagnostics() {
  const auto s = paper_schedule(24);
  const OrbitBall ball(s, {0, 6}, HPoint<R>(R(0), R(1)), 4);
  const auto periodic = limit_point(s, WordPath::periodic(ReducedWord{1, 2}), 16);
  const auto escalating = limit_point(s, WordPath::escalating(ReducedWord{3, 4, 5, 6}), 16);
  bool pass = true;
  std::string detail;
  for (const R step : {R(1, 4), R(1, 8)}) {
    const auto p = summarize_profile(
        conicality_profile(ball, BoundaryPoint<Interval>::finite(Interval(periodic.center)), R(50), step));
    const auto e = summarize_profile(
        conicality_profile(ball, BoundaryPoint<Interval>::finite(Interval(escalating.center)), R(50), step));
    const bool p_ok = p.classification == RayClass::recurrent && p.beta < 0.1;
    const bool e_ok = e.classification == RayClass::escaping && e.beta > 0.5;
    pass = pass && p_ok && e_ok;
    detail += fmt("step %s: periodic %s beta %.3f%s, escalating %s beta %.3f%s; ", to_string(step).c_str(),
                  to_string(p.classification).c_str(), p.beta, p_ok ? "" : " (expected recurrent, beta < 0.1)",
                  to_string(e.classification).c_str(), e.beta, e_ok ? "" : " (expected escaping, beta > 0.5)");
  }
  return {pass, detail};
}

Outcome determinism() {
  const auto dir = test_support::scratch_dir("acceptance-determinism");
  struct Run {
    std::string args;
    std::string file;
  };
  std::vector<Run> runs;
  for (int j = 0; j < 3; ++j) {
    runs.push_back({"certify --k 2 --alpha 1/4 --jobs 1", "cert"});
    runs.push_back({"render --k 2 --m 4 --depth 4 --jobs 1", "render"});
  }
  runs.push_back({"certify --k 2 --alpha 1/4 --jobs 4", "cert"});
  runs.push_back({"render --k 2 --m 4 --depth 4 --jobs 4", "render"});
  std::map<std::string, std::string> reference;
  int differing = 0;
  int failed = 0;
  for (std::size_t j = 0; j < runs.size(); ++j) {
    const auto path = dir / (runs[j].file + std::to_string(j));
    const auto r = test_support::run(cli(runs[j].args + " --out " + path.string()));
    if (r.exit_code != 0) ++failed;
    const std::string content = test_support::read_file(path);
    auto [it, fresh] = reference.emplace(runs[j].file, content);
    if (!fresh && it->second != content) ++differing;
  }
  std::filesystem::remove_all(dir);
  return {differing == 0 && failed == 0 && !reference["cert"].empty() && !reference["render"].empty(),
          fmt("%zu runs, %d with differing bytes, %d with nonzero exit", runs.size(), differing, failed)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Beardon recursion, window (2, 5], lengths <= 4", beardon_recursion},
      {"radii tail bound <= 1/(3 2^k), k = 2, 3, 4", radii_tail},
      {"centre control <= 1/(3 2^(k-1)), k = 2, 3, 4", center_control_bound},
      {"level monotonicity S_n <= S_(n-1), k = 2, 3", level_monotonicity},
      {"end-to-end certify verdicts and exit codes", end_to_end},
      {"dimension trend and box-count consistency", dimension_trend},
      {"visual metric identity and sine sandwich", visual_identity},
      {"involution and backend agreement properties", property_suites},
      {"ray diagnostics for periodic and escalating words", diagnostics},
      {"byte-identical certify and render outputs", determinism},
  };
  std::vector<std::size_t> selected;
  for (int a = 1; a < argc; ++a) {
    const long j = std::strtol(argv[a], nullptr, 10);
    if (j < 1 || j > static_cast<long>(criteria.size())) {
      std::fprintf(stderr, "unknown criterion '%s'\n", argv[a]);
      return 2;
    }
    selected.push_back(static_cast<std::size_t>(j));
  }
  if (selected.empty()) {
    for (std::size_t j = 1; j <= criteria.size(); ++j) selected.push_back(j);
  }
  bool all = true;
  for (const std::size_t j : selected) {
    Outcome out;
    try {
      out = criteria[j - 1].second();
    } catch (const std::exception& ex) {
      out = {false, std::string("threw: ") + ex.what()};
    }
    all = all && out.pass;
    std::printf("[%s] criterion %zu: %s -- %s\n", out.pass ? "PASS" : "FAIL", j, criteria[j - 1].first.c_str(),
                out.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
