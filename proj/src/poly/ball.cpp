#include "loja/poly/ball.hpp"

#include <algorithm>
#include <sstream>

namespace loja {

namespace {

constexpr mpfr_prec_t kRadPrec = 64;

mpfr_prec_t max_prec(const MpReal& a, const MpReal& b) {
  return std::max(a.precision(), b.precision());
}

// rad += ulp(v) when the operation producing v was inexact
void account(MpReal& rad, const MpReal& v, int ternary) {
  if (ternary == 0 || v.is_zero()) return;
  MpReal ulp(kRadPrec);
  mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(v.get()) - v.precision(), MPFR_RNDU);
  mpfr_add(rad.get(), rad.get(), ulp.get(), MPFR_RNDU);
}

MpReal abs_up(const MpReal& v) {
  MpReal r(kRadPrec);
  mpfr_abs(r.get(), v.get(), MPFR_RNDU);
  return r;
}

// upper bound of |re| + |im|
MpReal l1_up(const MpComplex& z) {
  MpReal r = abs_up(z.re);
  MpReal i = abs_up(z.im);
  mpfr_add(r.get(), r.get(), i.get(), MPFR_RNDU);
  return r;
}

}  // namespace

std::string MpReal::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

MpComplex operator+(const MpComplex& a, const MpComplex& b) {
  MpComplex r(std::max(a.precision(), b.precision()));
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

MpComplex operator-(const MpComplex& a, const MpComplex& b) {
  MpComplex r(std::max(a.precision(), b.precision()));
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

MpComplex operator*(const MpComplex& a, const MpComplex& b) {
  MpComplex r(std::max(a.precision(), b.precision()));
  mpfr_fmms(r.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmma(r.im.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  return r;
}

MpComplex operator/(const MpComplex& a, const MpComplex& b) {
  const mpfr_prec_t p = std::max(a.precision(), b.precision()) + 16;
  MpReal den(p);
  mpfr_fmma(den.get(), b.re.get(), b.re.get(), b.im.get(), b.im.get(), MPFR_RNDN);
  MpComplex r(std::max(a.precision(), b.precision()));
  MpReal num(p);
  mpfr_fmma(num.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_div(r.re.get(), num.get(), den.get(), MPFR_RNDN);
  mpfr_fmms(num.get(), a.im.get(), b.re.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), num.get(), den.get(), MPFR_RNDN);
  return r;
}

MpReal MpComplex::abs() const {
  MpReal r(precision());
  mpfr_hypot(r.get(), re.get(), im.get(), MPFR_RNDN);
  return r;
}

ComplexBall::ComplexBall(mpfr_prec_t prec) : mid_(prec), rad_(kRadPrec) {}

ComplexBall ComplexBall::from_rational(const Rational& re, mpfr_prec_t prec) {
  ComplexBall b(prec);
  account(b.rad_, b.mid_.re, b.mid_.re.set(re));
  return b;
}

ComplexBall ComplexBall::from_rational(const Rational& re, const Rational& im, mpfr_prec_t prec) {
  ComplexBall b(prec);
  account(b.rad_, b.mid_.re, b.mid_.re.set(re));
  account(b.rad_, b.mid_.im, b.mid_.im.set(im));
  return b;
}

ComplexBall ComplexBall::from_double(std::complex<double> z, mpfr_prec_t prec) {
  ComplexBall b(prec);
  account(b.rad_, b.mid_.re, mpfr_set_d(b.mid_.re.get(), z.real(), MPFR_RNDN));
  account(b.rad_, b.mid_.im, mpfr_set_d(b.mid_.im.get(), z.imag(), MPFR_RNDN));
  return b;
}

ComplexBall ComplexBall::from_mid(const MpComplex& mid) {
  ComplexBall b(mid.precision());
  b.mid_ = mid;
  return b;
}

ComplexBall ComplexBall::from_mid_rad(const MpComplex& mid, const MpReal& rad) {
  ComplexBall b = from_mid(mid);
  mpfr_set(b.rad_.get(), rad.get(), MPFR_RNDU);
  return b;
}

double ComplexBall::radius() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }

MpReal ComplexBall::abs_upper() const {
  MpReal r(kRadPrec);
  mpfr_hypot(r.get(), mid_.re.get(), mid_.im.get(), MPFR_RNDU);
  mpfr_add(r.get(), r.get(), rad_.get(), MPFR_RNDU);
  return r;
}

MpReal ComplexBall::abs_lower() const {
  MpReal r(kRadPrec);
  mpfr_hypot(r.get(), mid_.re.get(), mid_.im.get(), MPFR_RNDD);
  mpfr_sub(r.get(), r.get(), rad_.get(), MPFR_RNDD);
  if (r.sign() < 0) mpfr_set_zero(r.get(), 1);
  return r;
}

bool ComplexBall::contains_zero() const { return abs_lower().is_zero(); }

bool ComplexBall::contains(const ComplexBall& inner) const {
  ComplexBall d = *this - inner;  // rad(d) = rad + inner.rad + rounding
  // |mid - inner.mid| + inner.rad <= rad  <=>  upper(|d.mid|) + inner.rad + err <= rad
  MpReal dist(kRadPrec);
  mpfr_hypot(dist.get(), d.mid_.re.get(), d.mid_.im.get(), MPFR_RNDU);
  MpReal slack(kRadPrec);
  mpfr_sub(slack.get(), d.rad_.get(), rad_.get(), MPFR_RNDU);  // inner.rad + rounding
  mpfr_add(dist.get(), dist.get(), slack.get(), MPFR_RNDU);
  return mpfr_lessequal_p(dist.get(), rad_.get()) != 0;
}

bool ComplexBall::overlaps(const ComplexBall& o) const { return (*this - o).contains_zero(); }

ComplexBall& ComplexBall::add_error(const MpReal& err) {
  mpfr_add(rad_.get(), rad_.get(), err.get(), MPFR_RNDU);
  return *this;
}

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  ComplexBall r(max_prec(a.mid_.re, b.mid_.re));
  int t1 = mpfr_add(r.mid_.re.get(), a.mid_.re.get(), b.mid_.re.get(), MPFR_RNDN);
  int t2 = mpfr_add(r.mid_.im.get(), a.mid_.im.get(), b.mid_.im.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  account(r.rad_, r.mid_.re, t1);
  account(r.rad_, r.mid_.im, t2);
  return r;
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
  ComplexBall r(max_prec(a.mid_.re, b.mid_.re));
  int t1 = mpfr_sub(r.mid_.re.get(), a.mid_.re.get(), b.mid_.re.get(), MPFR_RNDN);
  int t2 = mpfr_sub(r.mid_.im.get(), a.mid_.im.get(), b.mid_.im.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  account(r.rad_, r.mid_.re, t1);
  account(r.rad_, r.mid_.im, t2);
  return r;
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  ComplexBall r(max_prec(a.mid_.re, b.mid_.re));
  int t1 = mpfr_fmms(r.mid_.re.get(), a.mid_.re.get(), b.mid_.re.get(), a.mid_.im.get(),
                     b.mid_.im.get(), MPFR_RNDN);
  int t2 = mpfr_fmma(r.mid_.im.get(), a.mid_.re.get(), b.mid_.im.get(), a.mid_.im.get(),
                     b.mid_.re.get(), MPFR_RNDN);
  if (!a.rad_.is_zero() || !b.rad_.is_zero()) {
    MpReal na = l1_up(a.mid_), nb = l1_up(b.mid_);
    MpReal t(kRadPrec);
    mpfr_mul(r.rad_.get(), na.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_mul(t.get(), nb.get(), a.rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), t.get(), MPFR_RNDU);
    mpfr_mul(t.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), t.get(), MPFR_RNDU);
  }
  account(r.rad_, r.mid_.re, t1);
  account(r.rad_, r.mid_.im, t2);
  return r;
}

ComplexBall ComplexBall::operator-() const {
  ComplexBall r = *this;
  mpfr_neg(r.mid_.re.get(), r.mid_.re.get(), MPFR_RNDN);
  mpfr_neg(r.mid_.im.get(), r.mid_.im.get(), MPFR_RNDN);
  return r;
}

std::string ComplexBall::to_string(int digits) const {
  std::ostringstream out;
  out << "(" << mid_.re.to_string(digits) << " + " << mid_.im.to_string(digits) << "i) +/- "
      << rad_.to_string(3);
  return out.str();
}

namespace {

int compare_parts(const MpReal& a, const MpReal& ar, const MpReal& b, const MpReal& br) {
  const mpfr_prec_t p = max_prec(a, b) + 8;
  MpReal a_hi(p), a_lo(p), b_hi(p), b_lo(p);
  mpfr_add(a_hi.get(), a.get(), ar.get(), MPFR_RNDU);
  mpfr_sub(a_lo.get(), a.get(), ar.get(), MPFR_RNDD);
  mpfr_add(b_hi.get(), b.get(), br.get(), MPFR_RNDU);
  mpfr_sub(b_lo.get(), b.get(), br.get(), MPFR_RNDD);
  if (mpfr_less_p(a_hi.get(), b_lo.get())) return -1;
  if (mpfr_less_p(b_hi.get(), a_lo.get())) return 1;
  return 0;
}

}  // namespace

int compare_real_parts(const ComplexBall& a, const ComplexBall& b) {
  return compare_parts(a.mid().re, a.rad(), b.mid().re, b.rad());
}

int compare_imag_parts(const ComplexBall& a, const ComplexBall& b) {
  return compare_parts(a.mid().im, a.rad(), b.mid().im, b.rad());
}

}  // namespace loja
