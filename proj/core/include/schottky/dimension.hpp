#pragma once

#include "schottky/words.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace schottky {

enum class BackendKind { exact, hiprec };

// Arithmetic used for word disks. Powers r^alpha are always enclosed with
// MPFR at `bits`; the exact backend keeps the disks themselves rational.
struct Backend {
  BackendKind kind = BackendKind::exact;
  mpfr_prec_t bits = kDefaultPrecision;

  // "exact" or "hiprec:<bits>" with bits >= 64.
  static Backend parse(std::string_view text);
  std::string to_string() const;
  bool operator==(const Backend&) const = default;
};

struct SumOptions {
  Backend backend;
  unsigned jobs = 1;
};

// Runs body(0..count-1) on up to `jobs` threads. Callers store results by
// index and combine them afterwards in index order.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

// Disks C_w of all words of length n over the window, in enumeration order.
// Built level by level through C_{i w'} = h_i(C_{w'}); the last level is
// split by first letter across `jobs` threads. Instantiated for both backends.
template <Scalar T>
std::vector<Circle<T>> level_disks(const GeneratorSchedule& schedule, WordWindow window, std::size_t n,
                                   mpfr_prec_t prec = kDefaultPrecision, unsigned jobs = 1);

// Radii of all words of length n over the window, in enumeration order,
// lifted to intervals at the backend precision.
std::vector<Interval> level_radii(const GeneratorSchedule& schedule, WordWindow window, std::size_t n,
                                  const SumOptions& options = {});

// S_n(alpha) = sum of r_w^alpha over the words of length n in the window.
// Partial sums are formed per first letter and added in letter order, so the
// enclosure does not depend on the number of jobs.
Interval alpha_sum(const GeneratorSchedule& schedule, WordWindow window, std::size_t n, const Rational& alpha,
                   const SumOptions& options = {});

struct AlphaSumTable {
  WordWindow window;
  std::size_t n_max = 0;
  Rational alpha;
  std::vector<Interval> sums;           // sums[n-1] = S_n
  std::vector<std::uint64_t> pruned;    // words left out per level

  // Columns n,alpha,S_n,pruned_count.
  std::string to_csv() const;
};

AlphaSumTable alpha_sum_table(const GeneratorSchedule& schedule, WordWindow window, std::size_t n_max,
                              const Rational& alpha, const SumOptions& options = {});

class TailConditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Smallest i0 >= floor with 2 alpha (2 i0 + 3) >= 1, which makes the radius
// ratio r_{i+1}^alpha / r_i^alpha = 2^{-2 alpha (2i+1)} at most 1/2 for i > i0.
Letter radii_tail_start(const Rational& alpha, Letter floor);

// Bound 2 r_{i0+1}^alpha on sum_{i > i0} r_i^alpha for r_i = 2^{-2 i^2}.
// Throws TailConditionError when the ratio condition fails at i0.
Interval radii_tail_bound(const Rational& alpha, Letter i0, mpfr_prec_t prec = kDefaultPrecision);

struct RadiiSum {
  Letter k = 0;
  Letter last = 0;  // explicit terms k+1..last, analytic tail beyond
  Interval window_sum;
  Interval tail;
  Interval total;
};

// sum_{i > k} r_i^alpha for the closed-form radii: explicit terms up to
// max(k + m, tail start), then the geometric tail.
RadiiSum paper_radii_sum(Letter k, Letter m, const Rational& alpha, mpfr_prec_t prec = kDefaultPrecision);

struct CenterControl {
  Letter k = 0;
  Letter last = 0;  // pairs with both indices in k+1..last are explicit
  Interval window_sum;
  bool has_tail = false;
  Interval tail;
  Interval total;
};

// sum over ordered pairs i != j in the window of (|c_i - c_j| - 1)^{-2 alpha}.
// Throws HypothesisError when two centres are within distance 1.
Interval center_pair_sum(const GeneratorSchedule& schedule, WordWindow window, const Rational& alpha,
                         mpfr_prec_t prec = kDefaultPrecision);

// Window double sum plus, for the closed-form schedule, the tail over pairs
// with max(i, j) > last bounded through |c_i - c_j| - 1 >= 2^{max(i,j)^2 + 2}.
// When the geometric ratio condition fails at k + m the explicit part is
// extended until it holds.
CenterControl center_control(const GeneratorSchedule& schedule, WordWindow window, const Rational& alpha,
                             mpfr_prec_t prec = kDefaultPrecision);

}  // namespace schottky
