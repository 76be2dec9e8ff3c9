#pragma once

#include <string>
#include <utility>
#include <vector>

#include "loja/poly/rational.hpp"

namespace loja {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The representation never has a zero leading coefficient.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  static QPoly x_power(unsigned k, const Rational& c = 1);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Degree degree() const;
  const Rational& leading() const { return c_.back(); }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const Rational& c);
  bool operator==(const QPoly&) const = default;

  QPoly derivative() const;
  QPoly monic() const;
  Rational evaluate(const Rational& x) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd (zero only if both are zero).
QPoly gcd(const QPoly& a, const QPoly& b);
/// Monic squarefree part of a nonzero polynomial.
QPoly squarefree_part(const QPoly& p);

}  // namespace loja
