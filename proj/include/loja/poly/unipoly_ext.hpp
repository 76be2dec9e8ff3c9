#pragma once

#include <string>
#include <utility>
#include <vector>

#include "loja/poly/tower.hpp"

namespace loja {

/// Univariate polynomial whose coefficients live in one FieldTower.
/// Coefficients are stored lowest degree first; the leading coefficient is
/// nonzero unless the polynomial is zero.
class UniPolyExt {
 public:
  explicit UniPolyExt(TowerPtr tower);
  UniPolyExt(TowerPtr tower, std::vector<Coords> coeffs);
  UniPolyExt(TowerPtr tower, const std::vector<AlgebraicNumber>& coeffs);
  /// Rational polynomial, coefficients lowest degree first.
  static UniPolyExt from_rationals(TowerPtr tower, const std::vector<Rational>& coeffs);

  const TowerPtr& tower() const { return tower_; }
  const std::vector<Coords>& coords() const { return c_; }
  AlgebraicNumber coeff(std::size_t i) const;
  /// Coefficients highest degree first.
  std::vector<AlgebraicNumber> coefficients() const;
  bool is_zero() const { return c_.empty(); }
  Degree degree() const;
  AlgebraicNumber leading() const { return coeff(c_.size() - 1); }

  UniPolyExt operator-() const;
  friend UniPolyExt operator+(const UniPolyExt& a, const UniPolyExt& b);
  friend UniPolyExt operator-(const UniPolyExt& a, const UniPolyExt& b);
  friend UniPolyExt operator*(const UniPolyExt& a, const UniPolyExt& b);
  bool operator==(const UniPolyExt& o) const;

  UniPolyExt derivative() const;
  /// Divides by the leading coefficient (may throw ZeroDivisor).
  UniPolyExt monic() const;
  AlgebraicNumber evaluate(const AlgebraicNumber& z) const;
  /// The same polynomial over an extension of the tower.
  UniPolyExt lift(const TowerPtr& extended) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  TowerPtr tower_;
  std::vector<Coords> c_;
};

/// Division with remainder; inverting lc(b) may throw ZeroDivisor.
std::pair<UniPolyExt, UniPolyExt> divmod(const UniPolyExt& a, const UniPolyExt& b);
/// Monic gcd by the Euclidean algorithm (may throw ZeroDivisor).
UniPolyExt gcd(const UniPolyExt& a, const UniPolyExt& b);
/// Monic squarefree part p / gcd(p, p') of a nonzero polynomial.
UniPolyExt squarefree_part(const UniPolyExt& p);

struct Extension {
  TowerPtr tower;
  AlgebraicNumber root;
};

/// Adjoins a root of a squarefree polynomial of degree >= 1. A linear
/// polynomial yields its explicit root in the same tower. Throws
/// std::invalid_argument when the polynomial is not squarefree.
Extension tower_extend(const UniPolyExt& minpoly, std::string name,
                       LevelKind kind = LevelKind::place);

}  // namespace loja
