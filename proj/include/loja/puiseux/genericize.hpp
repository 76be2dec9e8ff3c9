#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "loja/poly/multipoly.hpp"

namespace loja {

struct GenericizeReport {
  RationalMatrix transform;  // f is replaced by f(M w)
  int attempts = 0;
  std::vector<int> regular_degrees;
  /// Numeric estimates (C, D) with |z_i| <= C |z'_i| on the curve for
  /// |z'_i| > D; filled in after branch expansion.
  std::optional<std::pair<Rational, Rational>> comparability_constants;
};

/// Total degree equals the degree in every variable.
bool is_degree_regular(const MultiPoly& f);

/// Finds an invertible integer matrix M, drawn deterministically from the
/// seed, such that f(M w) is degree-regular. Seed 0 tries the identity first.
/// Entries are drawn from [-H, H] with H = 2 doubling after every failure.
std::pair<GenericizeReport, MultiPoly> genericize(const MultiPoly& f, std::uint64_t seed);

}  // namespace loja
