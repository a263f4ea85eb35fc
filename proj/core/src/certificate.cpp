#include "schottky/certificate.hpp"

#include <json.hpp>

namespace schottky {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::window_only: return "window-only";
    case Verdict::not_certified: return "not certified";
  }
  return "not certified";
}

Verdict parse_verdict(std::string_view text) {
  if (text == "certified") return Verdict::certified;
  if (text == "window-only") return Verdict::window_only;
  if (text == "not certified") return Verdict::not_certified;
  throw std::invalid_argument("unknown verdict '" + std::string(text) + "'");
}

std::vector<std::string> Certificate::failing_checks() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.holds) out.push_back(c.name);
  }
  return out;
}

namespace {

Rational upper_of(const Rational& q) { return q; }
Rational upper_of(const Interval& x) { return x.upper_rational(); }

template <Scalar T>
BeardonSweep sweep(const GeneratorSchedule& schedule, WordWindow window, std::size_t n_max, mpfr_prec_t prec) {
  BeardonSweep out;
  if (window.m < 2) return out;
  std::vector<Circle<T>> previous = level_disks<T>(schedule, window, 1, prec);
  std::size_t suffix_block = 1;  // (m-1)^{n-2}: words of level n-1 per first letter
  for (std::size_t n = 2; n <= n_max; ++n) {
    const std::vector<Circle<T>> current = level_disks<T>(schedule, window, n, prec);
    const std::size_t block = suffix_block * (window.m - 1);
    for (std::size_t e = 0; e < current.size(); ++e) {
      const std::size_t lead = e / block;
      const std::size_t offset = e % block;
      std::size_t second = offset / suffix_block;
      if (second >= lead) ++second;
      const std::size_t suffix = second * suffix_block + offset % suffix_block;
      const Letter i1 = window.first() + static_cast<Letter>(lead);
      const Letter i2 = window.first() + static_cast<Letter>(second);
      const Rational gap = abs(schedule.entry(i1).center - schedule.entry(i2).center) - 1;
      if (gap <= 0) {
        throw HypothesisError("centres of " + std::to_string(i1) + " and " + std::to_string(i2) +
                              " are within distance 1");
      }
      const T ratio = current[e].radius * lift<T>(gap * gap, prec) / previous[suffix].radius;
      const Rational bound = upper_of(ratio);
      if (out.words == 0 || bound > out.max_ratio) out.max_ratio = bound;
      if (bound > 1) ++out.failures;
      ++out.words;
    }
    previous = current;
    suffix_block = block;
  }
  return out;
}

Check make_check(std::string name, const Interval& lhs, const Interval& rhs, std::string tail) {
  Check c{std::move(name), lhs.upper_rational(), rhs.lower_rational(), false, std::move(tail)};
  c.holds = c.lhs <= c.rhs;
  return c;
}

Check make_check(std::string name, const Interval& lhs, const Rational& rhs, std::string tail) {
  Check c{std::move(name), lhs.upper_rational(), rhs, false, std::move(tail)};
  c.holds = c.lhs <= c.rhs;
  return c;
}

}  // namespace

BeardonSweep beardon_sweep(const GeneratorSchedule& schedule, WordWindow window, std::size_t n_max,
                           const Backend& backend) {
  if (backend.kind == BackendKind::exact) return sweep<Rational>(schedule, window, n_max, backend.bits);
  return sweep<Interval>(schedule, window, n_max, backend.bits);
}

Certificate certify_dimension_upper(const GeneratorSchedule& schedule, const CertifyOptions& options) {
  if (options.alpha <= 0 || options.alpha > 1) throw std::invalid_argument("alpha must lie in (0, 1]");
  if (options.m < 2) throw std::invalid_argument("window size m must be at least 2");
  if (options.k < 1) throw std::invalid_argument("k must be at least 1");
  if (options.n_max < 1) throw std::invalid_argument("n_max must be at least 1");

  const WordWindow window{options.k, options.m};
  for (Letter i = window.first(); i <= window.last(); ++i) {
    if (!schedule.contains(i)) {
      throw std::invalid_argument("schedule does not define generator " + std::to_string(i));
    }
  }
  const mpfr_prec_t prec = options.sums.backend.bits;
  const bool closed_form = schedule.provenance() == Provenance::paper;

  Certificate cert;
  cert.k = options.k;
  cert.alpha = options.alpha;
  cert.m = options.m;
  cert.n_max = options.n_max;
  cert.backend = options.sums.backend;
  cert.schedule = schedule.provenance();

  const Rational radii_rhs = Rational(1) / (3 * pow2(static_cast<long>(options.k)));
  const Rational center_margin_rhs = Rational(1) / (3 * pow2(static_cast<long>(options.k) - 1));

  if (closed_form) {
    const RadiiSum radii = paper_radii_sum(options.k, options.m, options.alpha, prec);
    cert.checks.push_back(make_check("radii_tail", radii.total, radii_rhs,
                                     "explicit i=" + std::to_string(window.first()) + ".." +
                                         std::to_string(radii.last) + ", geometric tail 2 r_" +
                                         std::to_string(radii.last + 1) + "^alpha"));
  } else {
    Interval sum(0L, prec);
    for (Letter i = window.first(); i <= window.last(); ++i) {
      sum += pow(Interval(schedule.entry(i).radius, prec), options.alpha);
    }
    cert.checks.push_back(make_check("radii_window", sum, radii_rhs, "window only"));
  }

  const CenterControl cc = center_control(schedule, window, options.alpha, prec);
  const std::string cc_tail =
      cc.has_tail ? "explicit pairs in " + std::to_string(window.first()) + ".." + std::to_string(cc.last) +
                        ", gap-bound geometric tail"
                  : "window only";
  cert.checks.push_back(make_check("center_control", cc.total, Rational(1), cc_tail));
  if (closed_form) {
    cert.checks.push_back(make_check("center_control_margin", cc.total, center_margin_rhs, cc_tail));
  }

  const BeardonSweep beardon = beardon_sweep(schedule, window, options.n_max, options.sums.backend);
  if (beardon.words > 0) {
    Check c{"beardon_window", beardon.max_ratio, Rational(1), beardon.failures == 0,
            std::to_string(beardon.words) + " words of length 2.." + std::to_string(options.n_max)};
    c.holds = c.holds && c.lhs <= c.rhs;
    cert.checks.push_back(std::move(c));
  }

  std::vector<Interval> sums;
  for (std::size_t n = 1; n <= options.n_max; ++n) {
    sums.push_back(alpha_sum(schedule, window, n, options.alpha, options.sums));
  }
  for (std::size_t n = 2; n <= options.n_max; ++n) {
    cert.checks.push_back(make_check("level_monotonicity_n" + std::to_string(n), sums[n - 1], sums[n - 2],
                                     "window words of length " + std::to_string(n)));
  }

  const bool all_hold = cert.failing_checks().empty();
  if (!all_hold) {
    cert.verdict = Verdict::not_certified;
  } else {
    cert.verdict = closed_form ? Verdict::certified : Verdict::window_only;
  }
  return cert;
}

std::string certificate_to_json(const Certificate& certificate) {
  nlohmann::ordered_json doc;
  doc["k"] = certificate.k;
  doc["alpha"] = to_string(certificate.alpha);
  doc["window"] = {{"m", certificate.m}, {"n_max", certificate.n_max}};
  doc["backend"] = certificate.backend.to_string();
  doc["schedule"] = certificate.schedule == Provenance::paper ? "paper" : "user";
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : certificate.checks) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["lhs"] = to_string(c.lhs);
    item["rhs"] = to_string(c.rhs);
    item["lhs_approx"] = to_decimal(c.lhs, 12);
    item["rhs_approx"] = to_decimal(c.rhs, 12);
    item["holds"] = c.holds;
    item["tail"] = c.tail;
    checks.push_back(std::move(item));
  }
  doc["checks"] = std::move(checks);
  doc["verdict"] = to_string(certificate.verdict);
  return doc.dump(2) + "\n";
}

std::vector<std::string> verify_certificate_json(const std::string& text) {
  std::vector<std::string> problems;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    return {std::string("not valid JSON: ") + ex.what()};
  }
  try {
    const Rational alpha = parse_rational(doc.at("alpha").get<std::string>());
    if (alpha <= 0 || alpha > 1) problems.push_back("alpha outside (0, 1]");
    const Verdict verdict = parse_verdict(doc.at("verdict").get<std::string>());
    const bool paper = doc.at("schedule").get<std::string>() == "paper";
    bool all_hold = true;
    for (const auto& item : doc.at("checks")) {
      const std::string name = item.at("name").get<std::string>();
      const Rational lhs = parse_rational(item.at("lhs").get<std::string>());
      const Rational rhs = parse_rational(item.at("rhs").get<std::string>());
      const bool holds = item.at("holds").get<bool>();
      if (holds && lhs > rhs) problems.push_back("check " + name + " claims to hold but lhs > rhs");
      if (!holds && lhs <= rhs && name != "beardon_window") {
        problems.push_back("check " + name + " is marked failing although lhs <= rhs");
      }
      all_hold = all_hold && holds;
    }
    const Verdict expected =
        !all_hold ? Verdict::not_certified : (paper ? Verdict::certified : Verdict::window_only);
    if (verdict != expected) {
      problems.push_back("verdict '" + to_string(verdict) + "' does not follow from the checks (expected '" +
                         to_string(expected) + "')");
    }
  } catch (const nlohmann::json::exception& ex) {
    problems.push_back(std::string("malformed certificate: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    problems.push_back(std::string("malformed value: ") + ex.what());
  }
  return problems;
}

}  // namespace schottky
