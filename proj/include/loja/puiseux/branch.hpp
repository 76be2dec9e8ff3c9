#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "loja/poly/multipoly.hpp"
#include "loja/poly/unipoly_ext.hpp"

namespace loja {

/// Dense bivariate polynomial over a tower: c[j][i] is the coefficient of
/// U^j T^i.
using TowerBiPoly = std::vector<std::vector<Coords>>;

struct SeriesTerm {
  int exponent;
  AlgebraicNumber coeff;
};

/// Implicit equation G(T, U) = 0 with G(0,0) = 0 and dG/dU(0,0) a unit, whose
/// unique root U(T) = sum_{k>=1} U_k T^k is the unexpanded tail of a branch.
struct BranchTail {
  TowerBiPoly g;
  Coords g01_inverse;
  int offset;  // y = (known prefix) + T^offset U(T)
};

/// A place at infinity of a plane curve: x = t^p, y = sum_e c_e t^e with
/// exponents descending. Internally y is a dense series in T = 1/t.
class Branch {
 public:
  const TowerPtr& tower() const { return tower_; }
  int ramification() const { return p_; }
  /// Nonzero terms of y(t) known exactly, exponents strictly decreasing.
  std::vector<SeriesTerm> series() const;
  /// Every term with exponent greater than this is exact.
  int truncation_exponent() const { return -(low_ + static_cast<int>(dense_.size())); }
  /// The series is a complete finite expansion.
  bool exact() const { return tail_ == nullptr; }
  const std::shared_ptr<const MultiPoly>& source_factor() const { return source_; }
  /// Number of conjugate places represented by this branch.
  std::size_t conjugacy_size() const { return tower_->place_degree(); }

  /// Coefficient of t^e (exact when e > truncation_exponent()).
  Coords coefficient(int e) const;
  /// Leading exponent of y, or nullopt when y is identically zero.
  Degree leading_exponent() const;

  /// Dense access in T = 1/t: coefficient of T^k for low_T() <= k < high_T().
  int low_T() const { return low_; }
  int high_T() const { return low_ + static_cast<int>(dense_.size()); }
  const std::vector<Coords>& dense() const { return dense_; }

  /// Numeric point (x(t), y(t)) from the truncated series.
  std::pair<std::complex<double>, std::complex<double>> evaluate(std::complex<double> t) const;

  std::string to_string() const;

 private:
  friend class BranchBuilder;
  friend Branch extend_branch(const Branch&, int);
  friend Branch split_branch(const Branch&, std::size_t, const std::vector<Coords>&);

  TowerPtr tower_;
  int p_ = 1;
  int low_ = 0;                 // T-exponent of dense_[0]
  std::vector<Coords> dense_;   // exact T-coefficients
  std::shared_ptr<const MultiPoly> source_;
  std::shared_ptr<const BranchTail> tail_;
  std::vector<std::vector<Coords>> upow_;  // upow_[j][k]: T^k coefficient of U^j
};

/// Newton polygon of h arranged for expansion in descending powers of x:
/// support points (j, i) with j the y-degree and i = deg_x h - (x-degree).
struct NewtonPolygonInf {
  struct Edge {
    Rational slope;      // valuation of y in s = 1/x along the edge
    UniPolyExt polynomial;
  };
  std::vector<std::pair<int, int>> support;
  std::vector<Edge> edges;  // ordered by decreasing valuation
};

NewtonPolygonInf newton_polygon_inf(const MultiPoly& h);

/// One branch per conjugacy class of places at infinity of {h = 0} along
/// which x -> infinity. Requires h nonzero, squarefree, with positive y-degree.
std::vector<Branch> expand_branches(const MultiPoly& h);

/// The same branch with its series exact down to target_exponent.
Branch extend_branch(const Branch& b, int target_exponent);

/// deg of the branch parametrization: max(p, leading exponent of y).
int deg_phi(const Branch& b);

/// Exact Laurent coefficients of g(x(t), y(t)): coeffs[k] multiplies
/// t^(top - k); all returned coefficients are exact.
struct ComposedSeries {
  int top;
  std::vector<Coords> coeffs;
};
ComposedSeries compose_series(const MultiPoly& g, const Branch& b, int count,
                              Branch* extended = nullptr);

/// deg_t g(Phi(t)), or nullopt (-inf) when g vanishes on the branch. Zero
/// tests that meet a zero divisor of the tower throw ZeroDivisor; callers
/// split the branch and retry.
Degree compose_deg(const MultiPoly& g, const Branch& b, int ambient_deg,
                   Branch* extended = nullptr);

/// The branch over tower()->split(level, factor).
Branch split_branch(const Branch& b, std::size_t level, const std::vector<Coords>& factor);

/// Splits b along a zero divisor: both factors for a place level, one for a
/// ramification level.
std::vector<Branch> split_branch(const Branch& b, const ZeroDivisor& z);

}  // namespace loja
