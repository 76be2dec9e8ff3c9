#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "loja/poly/ball.hpp"
#include "loja/poly/rational.hpp"

namespace loja {

/// Dense coordinates of a tower element in the power basis
/// a1^i1 * a2^i2 * ... with i1 varying fastest.
using Coords = std::vector<Rational>;

/// How distinct roots of a level's minimal polynomial should be read: at a
/// `place` level different roots give different objects (their count matters
/// for conjugacy bookkeeping); at a `ramification` level all roots describe the
/// same object and any one of them may be kept.
enum class LevelKind { place, ramification };

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

/// Thrown when an inversion meets a nonzero non-unit: the minimal polynomial
/// of `level` (1-based) factors as factor * cofactor over the levels below.
class ZeroDivisor : public std::runtime_error {
 public:
  ZeroDivisor(TowerPtr tower, std::size_t level, std::vector<Coords> factor);

  const TowerPtr& tower() const { return tower_; }
  std::size_t level() const { return level_; }
  /// Monic, coefficients lowest degree first, over the first level-1 levels.
  const std::vector<Coords>& factor() const { return factor_; }

 private:
  TowerPtr tower_;
  std::size_t level_;
  std::vector<Coords> factor_;
};

/// Q(a1)(a2)...(ak) as a quotient ring: each level adjoins a root of a monic
/// squarefree polynomial over the previous levels. Irreducibility is not
/// required; the ring may be a product of fields, and zero divisors surface
/// as ZeroDivisor exceptions from inverse(). Every level carries a certified
/// isolating disk selecting one complex root (the numeric embedding).
class FieldTower : public std::enable_shared_from_this<FieldTower> {
 public:
  struct Level {
    std::string name;
    std::vector<Coords> minpoly;  // monic, lowest degree first
    LevelKind kind;
    ComplexBall root;             // isolating disk at kBasePrecision
  };

  static constexpr mpfr_prec_t kBasePrecision = 128;

  static TowerPtr rationals();

  std::size_t depth() const { return levels_.size(); }
  /// Vector-space dimension over Q (product of level degrees).
  std::size_t degree() const { return degree_below(depth()); }
  /// Dimension of the subtower made of the first k levels.
  std::size_t degree_below(std::size_t k) const { return dims_[k]; }
  std::size_t level_degree(std::size_t level) const;
  const Level& level(std::size_t level) const { return *levels_.at(level - 1); }
  /// Product of the degrees of the place levels.
  std::size_t place_degree() const;

  /// True when this tower's levels are the first levels of `other`.
  bool is_prefix_of(const FieldTower& other) const;
  /// Subtower made of the first k levels.
  TowerPtr prefix(std::size_t k) const;

  // Arithmetic on full-depth coordinates.
  Coords zero() const { return Coords(degree(), 0); }
  Coords one() const;
  Coords from_rational(const Rational& q) const;
  Coords generator(std::size_t level) const;
  bool is_zero(const Coords& a) const;
  Coords add(const Coords& a, const Coords& b) const;
  Coords sub(const Coords& a, const Coords& b) const;
  Coords neg(const Coords& a) const;
  Coords mul(const Coords& a, const Coords& b) const;
  Coords scale(const Coords& a, const Rational& q) const;
  /// Throws std::domain_error for zero and ZeroDivisor for non-units.
  Coords inverse(const Coords& a) const;

  // The same operations on elements of the subtower of the first k levels.
  Coords mul_at(std::size_t k, const Coords& a, const Coords& b) const;
  Coords inverse_at(std::size_t k, const Coords& a) const;

  /// Re-expresses an element of a prefix tower in this tower.
  Coords lift(const Coords& a, const FieldTower& from) const;

  /// Adjoins a root of `minpoly` (monic, squarefree, degree >= 2, coefficients
  /// over this tower, lowest degree first). The chosen root is the
  /// lexicographically smallest by (real, imaginary) part.
  TowerPtr extend(std::string name, std::vector<Coords> minpoly, LevelKind kind) const;

  /// The tower obtained by replacing the minimal polynomial of `level` with
  /// the monic factor `factor` (levels above are reduced accordingly; a
  /// degree-one level disappears).
  TowerPtr split(std::size_t level, const std::vector<Coords>& factor) const;
  /// Image of an element under the projection onto split(level, factor).
  Coords project(const Coords& a, std::size_t level, const std::vector<Coords>& factor) const;
  /// Cofactor minpoly(level) / factor, monic.
  std::vector<Coords> cofactor(std::size_t level, const std::vector<Coords>& factor) const;

  /// Certified disks for the chosen roots of every level at `prec` bits.
  std::vector<ComplexBall> generator_enclosures(mpfr_prec_t prec) const;
  /// Ball enclosure of an element at the given working precision.
  ComplexBall enclose(const Coords& a, mpfr_prec_t prec) const;
  ComplexBall enclose(const Coords& a, const std::vector<ComplexBall>& gens) const;

  /// Human-readable element: polynomial in the generator names.
  std::string format(const Coords& a) const;

 private:
  FieldTower() = default;

  Coords mul_rec(std::size_t k, std::span<const Rational> a, std::span<const Rational> b) const;
  Coords inverse_rec(std::size_t k, std::span<const Rational> a) const;
  Coords project_rec(std::size_t k, std::span<const Rational> a, std::size_t level,
                     const std::vector<Coords>& factor) const;
  ComplexBall enclose_rec(std::size_t k, std::span<const Rational> a,
                          const std::vector<ComplexBall>& gens, mpfr_prec_t prec) const;

  std::vector<std::shared_ptr<const Level>> levels_;
  std::vector<std::size_t> dims_{1};
};

/// An element of a FieldTower.
class AlgebraicNumber {
 public:
  AlgebraicNumber(TowerPtr tower, Coords coords);
  static AlgebraicNumber from_rational(TowerPtr tower, const Rational& q);
  static AlgebraicNumber generator(TowerPtr tower, std::size_t level);

  const TowerPtr& tower() const { return tower_; }
  const Coords& coords() const { return c_; }

  /// Exact: all coordinates zero.
  bool is_zero() const;
  std::optional<Rational> as_rational() const;

  AlgebraicNumber operator-() const;
  friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
  bool operator==(const AlgebraicNumber& o) const;

  /// Throws std::domain_error for zero and ZeroDivisor for non-units.
  AlgebraicNumber inverse() const;
  /// The same number in a tower extending this one.
  AlgebraicNumber lift(const TowerPtr& extended) const;

  ComplexBall enclosure(mpfr_prec_t prec = FieldTower::kBasePrecision) const;
  /// Enclosure refined until its radius is at most max_radius.
  ComplexBall enclosure_within(double max_radius) const;

  std::string to_string() const { return tower_->format(c_); }

 private:
  TowerPtr tower_;
  Coords c_;
};

}  // namespace loja
