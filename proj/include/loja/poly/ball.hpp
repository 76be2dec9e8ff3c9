#pragma once

#include <complex>
#include <string>

#include "loja/poly/mp.hpp"
#include "loja/poly/rational.hpp"

namespace loja {

/// Complex disk {mid + w : |w| <= rad}. Arithmetic is outward: every result
/// contains all values obtainable from members of the operands. The radius is
/// tracked with upward rounding; rounding errors of the midpoint are added
/// only when MPFR reports an inexact operation, so exact inputs stay exact.
class ComplexBall {
 public:
  explicit ComplexBall(mpfr_prec_t prec = 128);
  static ComplexBall from_rational(const Rational& re, mpfr_prec_t prec);
  static ComplexBall from_rational(const Rational& re, const Rational& im, mpfr_prec_t prec);
  static ComplexBall from_double(std::complex<double> z, mpfr_prec_t prec);
  static ComplexBall from_mid(const MpComplex& mid);
  static ComplexBall from_mid_rad(const MpComplex& mid, const MpReal& rad);

  mpfr_prec_t precision() const { return mid_.precision(); }
  const MpComplex& mid() const { return mid_; }
  const MpReal& rad() const { return rad_; }
  double radius() const;
  std::complex<double> center() const { return mid_.to_complex(); }

  /// Upper and lower bounds on |z| over the ball.
  MpReal abs_upper() const;
  MpReal abs_lower() const;

  bool contains_zero() const;
  /// True when every point of `inner` lies in this ball.
  bool contains(const ComplexBall& inner) const;
  bool overlaps(const ComplexBall& o) const;

  ComplexBall& add_error(const MpReal& err);

  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
  ComplexBall operator-() const;
  ComplexBall& operator+=(const ComplexBall& b) { return *this = *this + b; }
  ComplexBall& operator*=(const ComplexBall& b) { return *this = *this * b; }

  /// "[re +/- r] + [im +/- r]i" style rendering for diagnostics.
  std::string to_string(int digits = 10) const;

 private:
  MpComplex mid_;
  MpReal rad_;
};

/// Certified comparison of real (resp. imaginary) parts: -1 or +1 when the
/// projections of the two balls are disjoint, 0 when they overlap.
int compare_real_parts(const ComplexBall& a, const ComplexBall& b);
int compare_imag_parts(const ComplexBall& a, const ComplexBall& b);

}  // namespace loja
