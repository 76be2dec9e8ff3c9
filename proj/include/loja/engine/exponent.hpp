#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loja/poly/mapping.hpp"
#include "loja/poly/multipoly.hpp"
#include "loja/puiseux/branch.hpp"
#include "loja/puiseux/genericize.hpp"

namespace loja {

enum class DegenerateCase { none, S_empty, all_components_zero, common_factor };

std::string to_string(DegenerateCase c);

struct BranchVerdict {
  Branch branch;
  std::vector<Degree> component_degrees;  // deg f_j(Phi(t)) per component
  Degree deg_F_compose;                   // max of component_degrees
  int deg_phi = 1;
  ExtRational lambda;
};

struct ExponentReport {
  ExtRational exponent;
  std::vector<BranchVerdict> branch_verdicts;
  std::optional<std::size_t> witness;
  bool proper = false;
  RationalMatrix transform;
  DegenerateCase degenerate_case = DegenerateCase::none;
  GenericizeReport genericize;
  /// Components in the transformed coordinates and the squarefree curve
  /// whose branches were expanded.
  std::vector<MultiPoly> transformed_components;
  std::optional<MultiPoly> curve;
  int ambient_degree = 0;
};

/// Exact exponent at infinity of a mapping C^2 -> C^m.
ExponentReport lojasiewicz_exponent(const MappingSpec& f, std::uint64_t seed = 0);

/// Verdict for one branch of the curve of the (transformed) components. May
/// throw ZeroDivisor, in which case the branch must be split and retried.
BranchVerdict per_branch_lambda(const std::vector<MultiPoly>& components, const Branch& b,
                                int ambient_deg);

struct CurveBranches {
  RationalMatrix transform;
  std::optional<MultiPoly> curve;  // squarefree, in transformed coordinates
  std::vector<Branch> branches;
};

/// Branches at infinity of the zero set of the product of the nonzero
/// components, in degree-regular coordinates. Empty when that set is empty
/// or the whole plane.
CurveBranches branches_at_infinity(const MappingSpec& f, std::uint64_t seed = 0);

/// proper <=> exponent > 0.
std::pair<bool, ExtRational> is_proper(const MappingSpec& f, std::uint64_t seed = 0);

/// log|F(Phi(t))| / log|Phi(t)| at real t along a branch of the report,
/// in the original coordinates.
double attainment_ratio(const ExponentReport& report, std::size_t branch_index, double t);

/// Numeric comparability constants (C, D) along the expanded branches.
std::pair<Rational, Rational> comparability_constants(const std::vector<Branch>& branches);

}  // namespace loja
