#pragma once

#include "schottky/dimension.hpp"

#include <string>
#include <vector>

namespace schottky {

// One verified inequality lhs <= rhs. `lhs` is a certified upper bound of
// the left side and `rhs` a certified lower bound of the right side, both
// exact dyadic or rational numbers, so lhs <= rhs settles the inequality.
struct Check {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool holds = false;
  std::string tail;  // how the infinite part was handled
};

enum class Verdict { certified, window_only, not_certified };

std::string to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

struct CertifyOptions {
  Letter k = 2;
  Rational alpha{1, 4};
  Letter m = 6;
  std::size_t n_max = 4;
  SumOptions sums;
};

struct Certificate {
  Letter k = 0;
  Rational alpha;
  Letter m = 0;
  std::size_t n_max = 0;
  Backend backend;
  Provenance schedule = Provenance::paper;
  std::vector<Check> checks;
  Verdict verdict = Verdict::not_certified;

  std::vector<std::string> failing_checks() const;
};

// Largest ratio r_w (|c_{i_1} - c_{i_2}| - 1)^2 / r_{suffix} over every word
// of length 2..n_max in the window, as a certified upper bound, together with
// the number of words for which the bound could not be confirmed.
struct BeardonSweep {
  Rational max_ratio;
  std::size_t words = 0;
  std::size_t failures = 0;
};
BeardonSweep beardon_sweep(const GeneratorSchedule& schedule, WordWindow window, std::size_t n_max,
                           const Backend& backend = {});

// Runs every check behind "dim <= alpha" for the window (k, k+m]:
//   radii_tail                 sum_{i>k} r_i^alpha <= 1/(3 2^k)
//   center_control             sum_{i != j > k} (|c_i - c_j| - 1)^{-2 alpha} <= 1
//   center_control_margin      the same sum <= 1/(3 2^{k-1})
//   beardon_window             Beardon's radius recursion on all window words
//   level_monotonicity_n<n>    S_n <= S_{n-1} for n = 2..n_max
// Tails are only available for the closed-form schedule; user schedules get
// the window versions and at best a "window-only" verdict.
// Throws std::invalid_argument for alpha outside (0, 1], m < 2, k < 1 or n_max < 1.
Certificate certify_dimension_upper(const GeneratorSchedule& schedule, const CertifyOptions& options);

std::string certificate_to_json(const Certificate& certificate);

// Re-reads a serialized certificate and checks that every recorded verdict
// follows from the recorded exact values. Returns the list of problems;
// empty means the file is consistent.
std::vector<std::string> verify_certificate_json(const std::string& text);

}  // namespace schottky
