#pragma once

#include <mpfr.h>

#include <complex>
#include <string>
#include <utility>

#include "loja/poly/rational.hpp"

namespace loja {

/// RAII handle for an MPFR number with its own precision.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec = 128) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  MpReal(double d, mpfr_prec_t prec) : MpReal(prec) { mpfr_set_d(v_, d, MPFR_RNDN); }
  MpReal(const MpReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  MpReal(MpReal&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  MpReal& operator=(const MpReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  MpReal& operator=(MpReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~MpReal() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Sets from a rational, rounding to nearest; returns the MPFR ternary
  /// value (0 iff the conversion was exact).
  int set(const Rational& q) { return mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }

  std::string to_string(int digits = 17) const;

 private:
  mpfr_t v_;
};

/// Plain (non-certified) multiprecision complex number for iterative solvers.
struct MpComplex {
  MpReal re, im;

  explicit MpComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  MpComplex(MpReal r, MpReal i) : re(std::move(r)), im(std::move(i)) {}
  MpComplex(std::complex<double> z, mpfr_prec_t prec) : re(z.real(), prec), im(z.imag(), prec) {}

  mpfr_prec_t precision() const { return re.precision(); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  friend MpComplex operator+(const MpComplex& a, const MpComplex& b);
  friend MpComplex operator-(const MpComplex& a, const MpComplex& b);
  friend MpComplex operator*(const MpComplex& a, const MpComplex& b);
  friend MpComplex operator/(const MpComplex& a, const MpComplex& b);
  /// |z| rounded to nearest.
  MpReal abs() const;
};

}  // namespace loja
