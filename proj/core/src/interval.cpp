#include "schottky/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace schottky {
namespace {

// Scratch MPFR value with RAII cleanup.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  ~Mpfr() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  operator mpfr_ptr() { return v_; }

 private:
  mpfr_t v_;
};

mpfr_prec_t joint_precision(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

void raise_precision(Interval& x, mpfr_prec_t prec) {
  if (x.precision() >= prec) return;
  mpfr_prec_round(x.lo_mut(), prec, MPFR_RNDD);
  mpfr_prec_round(x.hi_mut(), prec, MPFR_RNDU);
}

void check_not_nan(const Interval& x, const char* what) {
  if (mpfr_nan_p(x.lo()) || mpfr_nan_p(x.hi())) {
    throw std::domain_error(std::string("interval arithmetic produced NaN in ") + what);
  }
}

Interval with_precision(mpfr_prec_t prec) { return Interval(0L, prec); }

// Applies a monotone nondecreasing MPFR function endpoint-wise.
template <class F>
Interval monotone(const Interval& x, F f) {
  Interval out = with_precision(x.precision());
  f(out.lo_mut(), x.lo(), MPFR_RNDD);
  f(out.hi_mut(), x.hi(), MPFR_RNDU);
  return out;
}

}  // namespace

Interval::Interval() : Interval(0L) {}

Interval::Interval(long value, mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval::Interval(const Rational& value, mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Rational& lower, const Rational& upper, mpfr_prec_t prec) {
  if (lower > upper) throw std::invalid_argument("interval lower endpoint exceeds upper endpoint");
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_q(lo_, lower.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, upper.get_mpq_t(), MPFR_RNDU);
}

Interval Interval::from_double(double value, mpfr_prec_t prec) {
  Interval out = with_precision(prec);
  mpfr_set_d(out.lo_, value, MPFR_RNDD);
  mpfr_set_d(out.hi_, value, MPFR_RNDU);
  return out;
}

Interval Interval::positive_infinity(mpfr_prec_t prec) {
  Interval out = with_precision(prec);
  mpfr_set_inf(out.lo_, 1);
  mpfr_set_inf(out.hi_, 1);
  return out;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval out = with_precision(prec);
  mpfr_const_pi(out.lo_, MPFR_RNDD);
  mpfr_const_pi(out.hi_, MPFR_RNDU);
  return out;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval out = with_precision(joint_precision(a, b));
  mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this == &other) return *this;
  mpfr_set_prec(lo_, other.precision());
  mpfr_set_prec(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Rational Interval::lower_rational() const {
  if (!mpfr_number_p(lo_)) throw std::domain_error("lower endpoint is not finite");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return q;
}

Rational Interval::upper_rational() const {
  if (!mpfr_number_p(hi_)) throw std::domain_error("upper endpoint is not finite");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return q;
}

double Interval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid() const {
  if (mpfr_inf_p(lo_) || mpfr_inf_p(hi_)) {
    if (mpfr_equal_p(lo_, hi_)) return mpfr_get_d(lo_, MPFR_RNDN);
    return 0.5 * (lower() + upper());
  }
  Mpfr sum(precision() + 2);
  mpfr_add(sum, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(sum, sum, 1, MPFR_RNDN);
  return mpfr_get_d(sum, MPFR_RNDN);
}

double Interval::radius() const {
  Mpfr width(precision() + 2);
  mpfr_sub(width, hi_, lo_, MPFR_RNDU);
  mpfr_div_2ui(width, width, 1, MPFR_RNDU);
  return mpfr_get_d(width, MPFR_RNDU);
}

bool Interval::is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }
bool Interval::is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& inner) const {
  return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_greaterequal_p(hi_, inner.hi_);
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::overlaps(const Interval& other) const {
  return mpfr_lessequal_p(lo_, other.hi_) && mpfr_lessequal_p(other.lo_, hi_);
}

std::string Interval::to_string(int digits) const {
  std::vector<char> buffer(static_cast<std::size_t>(digits) + 64);
  Mpfr m(precision() + 2);
  if (is_finite()) {
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  } else {
    mpfr_set(m, hi_, MPFR_RNDN);
  }
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Rg", digits, m.get());
  std::string out(buffer.data());
  if (!is_point()) {
    std::snprintf(buffer.data(), buffer.size(), " +/- %.3g", radius());
    out += buffer.data();
  }
  return out;
}

Interval Interval::operator-() const {
  Interval out = with_precision(precision());
  mpfr_neg(out.lo_, hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  return out;
}

Interval& Interval::operator+=(const Interval& rhs) {
  raise_precision(*this, rhs.precision());
  mpfr_add(lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, rhs.hi_, MPFR_RNDU);
  check_not_nan(*this, "addition");
  return *this;
}

Interval& Interval::operator-=(const Interval& rhs) {
  raise_precision(*this, rhs.precision());
  Mpfr lo(precision());
  mpfr_sub(lo, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, rhs.lo_, MPFR_RNDU);
  mpfr_set(lo_, lo.get(), MPFR_RNDD);
  check_not_nan(*this, "subtraction");
  return *this;
}

Interval& Interval::operator*=(const Interval& rhs) {
  const mpfr_prec_t prec = joint_precision(*this, rhs);
  Mpfr lo(prec), hi(prec), t(prec);
  mpfr_srcptr a[2] = {lo_, hi_};
  mpfr_srcptr b[2] = {rhs.lo_, rhs.hi_};
  mpfr_set_inf(lo.get(), 1);
  mpfr_set_inf(hi.get(), -1);
  for (auto* x : a) {
    for (auto* y : b) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      mpfr_min(lo, lo, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      mpfr_max(hi, hi, t, MPFR_RNDU);
    }
  }
  mpfr_set_prec(lo_, prec);
  mpfr_set_prec(hi_, prec);
  mpfr_set(lo_, lo.get(), MPFR_RNDD);
  mpfr_set(hi_, hi.get(), MPFR_RNDU);
  check_not_nan(*this, "multiplication");
  return *this;
}

Interval& Interval::operator/=(const Interval& rhs) {
  if (rhs.contains_zero()) {
    throw std::domain_error("interval division by an enclosure containing zero");
  }
  const mpfr_prec_t prec = joint_precision(*this, rhs);
  Mpfr lo(prec), hi(prec), t(prec);
  mpfr_srcptr a[2] = {lo_, hi_};
  mpfr_srcptr b[2] = {rhs.lo_, rhs.hi_};
  mpfr_set_inf(lo.get(), 1);
  mpfr_set_inf(hi.get(), -1);
  for (auto* x : a) {
    for (auto* y : b) {
      mpfr_div(t, x, y, MPFR_RNDD);
      mpfr_min(lo, lo, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      mpfr_max(hi, hi, t, MPFR_RNDU);
    }
  }
  mpfr_set_prec(lo_, prec);
  mpfr_set_prec(hi_, prec);
  mpfr_set(lo_, lo.get(), MPFR_RNDD);
  mpfr_set(hi_, hi.get(), MPFR_RNDU);
  check_not_nan(*this, "division");
  return *this;
}

bool certainly_less(const Interval& a, const Interval& b) { return mpfr_less_p(a.hi(), b.lo()) != 0; }
bool certainly_less_equal(const Interval& a, const Interval& b) {
  return mpfr_lessequal_p(a.hi(), b.lo()) != 0;
}
bool certainly_positive(const Interval& a) { return mpfr_sgn(a.lo()) > 0; }
bool certainly_negative(const Interval& a) { return mpfr_sgn(a.hi()) < 0; }

Interval abs(const Interval& x) {
  if (mpfr_sgn(x.lo()) >= 0) return x;
  if (mpfr_sgn(x.hi()) <= 0) return -x;
  Interval out = with_precision(x.precision());
  mpfr_set_zero(out.lo_mut(), 1);
  Mpfr neg_lo(x.precision());
  mpfr_neg(neg_lo, x.lo(), MPFR_RNDU);
  mpfr_max(out.hi_mut(), neg_lo, x.hi(), MPFR_RNDU);
  return out;
}

Interval square(const Interval& x) {
  const Interval a = abs(x);
  return monotone(a, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_sqr(r, v, rnd); });
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.hi()) < 0) throw std::domain_error("sqrt of a negative enclosure");
  Interval clamped = x;
  if (mpfr_sgn(clamped.lo()) < 0) mpfr_set_zero(clamped.lo_mut(), 1);
  return monotone(clamped, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_sqrt(r, v, rnd); });
}

Interval exp(const Interval& x) {
  return monotone(x, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_exp(r, v, rnd); });
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.hi()) < 0) throw std::domain_error("log of a negative enclosure");
  Interval clamped = x;
  if (mpfr_sgn(clamped.lo()) < 0) mpfr_set_zero(clamped.lo_mut(), 1);
  return monotone(clamped, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_log(r, v, rnd); });
}

Interval log2(const Interval& x) {
  if (mpfr_sgn(x.hi()) < 0) throw std::domain_error("log2 of a negative enclosure");
  Interval clamped = x;
  if (mpfr_sgn(clamped.lo()) < 0) mpfr_set_zero(clamped.lo_mut(), 1);
  return monotone(clamped, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_log2(r, v, rnd); });
}

namespace {

// Lipschitz-1 enclosure for sin and cos: f(mid) widened by the radius.
template <class F>
Interval lipschitz_unit(const Interval& x, F f) {
  const mpfr_prec_t prec = x.precision();
  Interval out = with_precision(prec);
  if (!x.is_finite()) {
    mpfr_set_si(out.lo_mut(), -1, MPFR_RNDD);
    mpfr_set_si(out.hi_mut(), 1, MPFR_RNDU);
    return out;
  }
  Mpfr mid(prec + 2), rad(prec), a(prec), b(prec);
  mpfr_add(mid, x.lo(), x.hi(), MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  mpfr_sub(a, x.hi(), mid, MPFR_RNDU);
  mpfr_sub(b, mid, x.lo(), MPFR_RNDU);
  mpfr_max(rad, a, b, MPFR_RNDU);
  f(a, mid, MPFR_RNDD);
  f(b, mid, MPFR_RNDU);
  mpfr_sub(out.lo_mut(), a, rad, MPFR_RNDD);
  mpfr_add(out.hi_mut(), b, rad, MPFR_RNDU);
  if (mpfr_cmp_si(out.lo_mut(), -1) < 0) mpfr_set_si(out.lo_mut(), -1, MPFR_RNDD);
  if (mpfr_cmp_si(out.hi_mut(), 1) > 0) mpfr_set_si(out.hi_mut(), 1, MPFR_RNDU);
  return out;
}

}  // namespace

Interval sin(const Interval& x) {
  return lipschitz_unit(x, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_sin(r, v, rnd); });
}

Interval cos(const Interval& x) {
  return lipschitz_unit(x, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_cos(r, v, rnd); });
}

Interval cosh(const Interval& x) {
  const Interval a = abs(x);
  return monotone(a, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_cosh(r, v, rnd); });
}

Interval sinh(const Interval& x) {
  return monotone(x, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_sinh(r, v, rnd); });
}

Interval acosh(const Interval& x) {
  Interval clamped = x;
  if (mpfr_cmp_si(clamped.lo(), 1) < 0) mpfr_set_si(clamped.lo_mut(), 1, MPFR_RNDD);
  if (mpfr_cmp_si(clamped.hi(), 1) < 0) mpfr_set_si(clamped.hi_mut(), 1, MPFR_RNDU);
  return monotone(clamped, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_acosh(r, v, rnd); });
}

Interval asinh(const Interval& x) {
  return monotone(x, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_asinh(r, v, rnd); });
}

Interval min(const Interval& a, const Interval& b) {
  Interval out = with_precision(joint_precision(a, b));
  mpfr_min(out.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(out.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return out;
}

Interval max(const Interval& a, const Interval& b) {
  Interval out = with_precision(joint_precision(a, b));
  mpfr_max(out.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(out.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return out;
}

Interval pow(const Interval& x, const Rational& exponent) {
  if (exponent == 0) return Interval(1L, x.precision());
  if (mpfr_sgn(x.hi()) < 0) throw std::domain_error("rational power of a negative enclosure");
  mpz_class num = exponent.get_num();
  if (num < 0) num = -num;
  if (!exponent.get_den().fits_ulong_p() || !num.fits_ulong_p()) {
    throw std::domain_error("rational exponent too large");
  }
  const unsigned long p = num.get_ui();
  const unsigned long q = exponent.get_den().get_ui();

  Interval base = x;
  if (mpfr_sgn(base.lo()) < 0) mpfr_set_zero(base.lo_mut(), 1);
  Interval positive = monotone(base, [p, q](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) {
    mpfr_pow_ui(r, v, p, rnd);
    if (q != 1) mpfr_rootn_ui(r, r, q, rnd);
  });
  if (exponent > 0) return positive;
  return Interval(1L, x.precision()) / positive;
}

Interval pow(const Interval& x, const Interval& exponent) {
  if (!certainly_positive(x)) throw std::domain_error("real power requires a positive base");
  return exp(exponent * log(x));
}

}  // namespace schottky
