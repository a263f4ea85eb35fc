#include "schottky/dimension.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>
#include <thread>

namespace schottky {

Backend Backend::parse(std::string_view text) {
  if (text == "exact") return Backend{};
  constexpr std::string_view prefix = "hiprec:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string_view digits = text.substr(prefix.size());
    long bits = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), bits);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw std::invalid_argument("malformed backend precision in '" + std::string(text) + "'");
    }
    if (bits < 64) throw std::invalid_argument("hiprec backend needs at least 64 bits");
    if (bits > 1 << 20) throw std::invalid_argument("hiprec precision is unreasonably large");
    return Backend{BackendKind::hiprec, static_cast<mpfr_prec_t>(bits)};
  }
  throw std::invalid_argument("unknown backend '" + std::string(text) + "' (expected exact or hiprec:<bits>)");
}

std::string Backend::to_string() const {
  if (kind == BackendKind::exact) return "exact";
  return "hiprec:" + std::to_string(bits);
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

namespace {

// Disks of the words of length n starting with `first`, given the full
// previous level in enumeration order.
template <Scalar T>
std::vector<Circle<T>> extend_by_letter(const GeneratorSchedule& schedule, WordWindow window, Letter first,
                                        const std::vector<Circle<T>>& previous, std::size_t block,
                                        mpfr_prec_t prec) {
  const Circle<T> generator = schedule.circle<T>(first, prec);
  std::vector<Circle<T>> out;
  out.reserve(previous.size());
  for (std::size_t e = 0; e < previous.size(); ++e) {
    const Letter lead = window.first() + static_cast<Letter>(e / block);
    if (lead == first) continue;
    out.push_back(invert(generator, previous[e]));
  }
  return out;
}

template <Scalar T>
std::vector<std::vector<Circle<T>>> last_level_by_letter(const GeneratorSchedule& schedule, WordWindow window,
                                                         std::size_t n, mpfr_prec_t prec, unsigned jobs) {
  std::vector<std::vector<Circle<T>>> parts(window.m);
  if (n == 0 || window.m == 0) return parts;
  if (n == 1) {
    for (Letter j = 0; j < window.m; ++j) parts[j].push_back(schedule.circle<T>(window.first() + j, prec));
    return parts;
  }
  std::vector<Circle<T>> previous;
  for (Letter i = window.first(); i <= window.last(); ++i) previous.push_back(schedule.circle<T>(i, prec));
  std::size_t block = 1;
  for (std::size_t level = 2; level < n; ++level) {
    std::vector<Circle<T>> next;
    for (Letter i = window.first(); i <= window.last(); ++i) {
      auto part = extend_by_letter(schedule, window, i, previous, block, prec);
      std::move(part.begin(), part.end(), std::back_inserter(next));
    }
    block *= (window.m - 1);
    previous = std::move(next);
  }
  parallel_for(window.m, jobs, [&](std::size_t j) {
    parts[j] = extend_by_letter(schedule, window, window.first() + static_cast<Letter>(j), previous, block, prec);
  });
  return parts;
}

Interval radius_interval(const Circle<Rational>& c, mpfr_prec_t prec) { return Interval(c.radius, prec); }
Interval radius_interval(const Circle<Interval>& c, mpfr_prec_t) { return c.radius; }

template <Scalar T>
std::vector<Interval> letter_sums(const GeneratorSchedule& schedule, WordWindow window, std::size_t n,
                                  const Rational& alpha, const SumOptions& options) {
  const mpfr_prec_t prec = options.backend.bits;
  const auto parts = last_level_by_letter<T>(schedule, window, n, prec, options.jobs);
  std::vector<Interval> sums(parts.size(), Interval(0L, prec));
  parallel_for(parts.size(), options.jobs, [&](std::size_t j) {
    Interval s(0L, prec);
    for (const auto& disk : parts[j]) s += pow(radius_interval(disk, prec), alpha);
    sums[j] = s;
  });
  return sums;
}

}  // namespace

template <Scalar T>
std::vector<Circle<T>> level_disks(const GeneratorSchedule& schedule, WordWindow window, std::size_t n,
                                   mpfr_prec_t prec, unsigned jobs) {
  auto parts = last_level_by_letter<T>(schedule, window, n, prec, jobs);
  std::vector<Circle<T>> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

template std::vector<Circle<Rational>> level_disks<Rational>(const GeneratorSchedule&, WordWindow, std::size_t,
                                                             mpfr_prec_t, unsigned);
template std::vector<Circle<Interval>> level_disks<Interval>(const GeneratorSchedule&, WordWindow, std::size_t,
                                                             mpfr_prec_t, unsigned);

std::vector<Interval> level_radii(const GeneratorSchedule& schedule, WordWindow window, std::size_t n,
                                  const SumOptions& options) {
  const mpfr_prec_t prec = options.backend.bits;
  std::vector<Interval> out;
  if (options.backend.kind == BackendKind::exact) {
    for (const auto& c : level_disks<Rational>(schedule, window, n, prec, options.jobs)) {
      out.push_back(Interval(c.radius, prec));
    }
  } else {
    for (const auto& c : level_disks<Interval>(schedule, window, n, prec, options.jobs)) out.push_back(c.radius);
  }
  return out;
}

Interval alpha_sum(const GeneratorSchedule& schedule, WordWindow window, std::size_t n, const Rational& alpha,
                   const SumOptions& options) {
  if (alpha < 0) throw std::invalid_argument("alpha must be nonnegative");
  const auto sums = options.backend.kind == BackendKind::exact
                        ? letter_sums<Rational>(schedule, window, n, alpha, options)
                        : letter_sums<Interval>(schedule, window, n, alpha, options);
  Interval total(0L, options.backend.bits);
  for (const auto& s : sums) total += s;
  return total;
}

std::string AlphaSumTable::to_csv() const {
  std::ostringstream out;
  out << "n,alpha,S_n,pruned_count\n";
  for (std::size_t n = 1; n <= sums.size(); ++n) {
    out << n << ',' << schottky::to_string(alpha) << ',' << sums[n - 1].to_string(20) << ','
        << (n - 1 < pruned.size() ? pruned[n - 1] : 0) << '\n';
  }
  return out.str();
}

AlphaSumTable alpha_sum_table(const GeneratorSchedule& schedule, WordWindow window, std::size_t n_max,
                              const Rational& alpha, const SumOptions& options) {
  AlphaSumTable table{window, n_max, alpha, {}, std::vector<std::uint64_t>(n_max, 0)};
  for (std::size_t n = 1; n <= n_max; ++n) table.sums.push_back(alpha_sum(schedule, window, n, alpha, options));
  return table;
}

namespace {

// 2^{-e} for a nonnegative rational e.
Interval pow2_neg(const Rational& e, mpfr_prec_t prec) { return pow(Interval(Rational(1, 2), prec), e); }

bool radii_ratio_ok(const Rational& alpha, Letter i0) {
  return 2 * alpha * (2 * Rational(i0) + 3) >= 1;
}

constexpr Letter kMaxTailStart = 4096;

}  // namespace

Letter radii_tail_start(const Rational& alpha, Letter floor) {
  if (alpha <= 0) throw TailConditionError("tail bounds need a positive alpha");
  Letter i0 = floor;
  while (!radii_ratio_ok(alpha, i0)) {
    if (++i0 > kMaxTailStart) throw TailConditionError("alpha is too small for a geometric radius tail");
  }
  return i0;
}

Interval radii_tail_bound(const Rational& alpha, Letter i0, mpfr_prec_t prec) {
  if (alpha <= 0) throw TailConditionError("tail bounds need a positive alpha");
  if (!radii_ratio_ok(alpha, i0)) {
    throw TailConditionError("ratio condition 2 alpha (2 i0 + 3) >= 1 fails at i0 = " + std::to_string(i0) +
                             "; use i0 >= " + std::to_string(radii_tail_start(alpha, i0)));
  }
  const Rational next(i0 + 1);
  return Interval(2L, prec) * pow2_neg(2 * alpha * next * next, prec);
}

RadiiSum paper_radii_sum(Letter k, Letter m, const Rational& alpha, mpfr_prec_t prec) {
  RadiiSum out{k, radii_tail_start(alpha, k + m), Interval(0L, prec), Interval(0L, prec), Interval(0L, prec)};
  for (Letter i = k + 1; i <= out.last; ++i) {
    const Rational ii(i);
    out.window_sum += pow2_neg(2 * alpha * ii * ii, prec);
  }
  out.tail = radii_tail_bound(alpha, out.last, prec);
  out.total = out.window_sum + out.tail;
  return out;
}

namespace {

Interval pair_term(const Rational& ci, const Rational& cj, const Rational& alpha, mpfr_prec_t prec, Letter i,
                   Letter j) {
  const Rational gap = abs(ci - cj) - 1;
  if (gap <= 0) {
    throw HypothesisError("centres of " + std::to_string(i) + " and " + std::to_string(j) +
                          " are within distance 1");
  }
  return pow(Interval(gap, prec), Rational(-2 * alpha));
}

Interval pair_sum(const std::vector<std::pair<Letter, Rational>>& centers, const Rational& alpha,
                  mpfr_prec_t prec) {
  Interval total(0L, prec);
  for (const auto& [i, ci] : centers) {
    for (const auto& [j, cj] : centers) {
      if (i == j) continue;
      total += pair_term(ci, cj, alpha, prec, i, j);
    }
  }
  return total;
}

// 2 (j - k - 1) 2^{-2 alpha (j^2 + 2)}: both orders of every pair whose larger index is j.
Interval center_tail_term(Letter k, Letter j, const Rational& alpha, mpfr_prec_t prec) {
  const Rational jj(j);
  return Interval(Rational(2 * (j - k - 1)), prec) * pow2_neg(2 * alpha * (jj * jj + 2), prec);
}

// Successive tail terms shrink by at least 1/2 from j = last + 1 onwards:
// (j - k)/(j - k - 1) 2^{-2 alpha (2j + 1)} <= 1/2, which decreases in j.
bool center_ratio_ok(Letter k, Letter last, const Rational& alpha, mpfr_prec_t prec) {
  const Letter j = last + 1;
  const Rational growth(2 * (j - k), j - k - 1);
  const Interval decay = pow(Interval(2L, prec), Rational(2 * alpha * (2 * Rational(j) + 1)));
  return certainly_less_equal(Interval(growth, prec), decay);
}

}  // namespace

Interval center_pair_sum(const GeneratorSchedule& schedule, WordWindow window, const Rational& alpha,
                         mpfr_prec_t prec) {
  std::vector<std::pair<Letter, Rational>> centers;
  for (Letter i = window.first(); i <= window.last(); ++i) centers.emplace_back(i, schedule.entry(i).center);
  return pair_sum(centers, alpha, prec);
}

CenterControl center_control(const GeneratorSchedule& schedule, WordWindow window, const Rational& alpha,
                             mpfr_prec_t prec) {
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  CenterControl out{window.k, window.last(), Interval(0L, prec), false, Interval(0L, prec), Interval(0L, prec)};
  if (schedule.provenance() != Provenance::paper) {
    out.window_sum = center_pair_sum(schedule, window, alpha, prec);
    out.total = out.window_sum;
    return out;
  }
  while (!center_ratio_ok(window.k, out.last, alpha, prec)) {
    if (++out.last > kMaxTailStart) throw TailConditionError("alpha is too small for a geometric centre tail");
  }
  std::vector<std::pair<Letter, Rational>> centers;
  for (Letter i = window.first(); i <= out.last; ++i) {
    centers.emplace_back(i, schedule.contains(i) ? schedule.entry(i).center : paper_center(i));
  }
  out.window_sum = pair_sum(centers, alpha, prec);
  out.has_tail = true;
  out.tail = Interval(2L, prec) * center_tail_term(window.k, out.last + 1, alpha, prec);
  out.total = out.window_sum + out.tail;
  return out;
}

}  // namespace schottky
