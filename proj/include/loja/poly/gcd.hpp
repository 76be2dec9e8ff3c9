#pragma once

#include <span>

#include "loja/poly/multipoly.hpp"

namespace loja {

/// Greatest common divisor of two bivariate polynomials, normalized so the
/// leading grlex coefficient is 1. Requires the same two variables and not
/// both zero.
MultiPoly gcd_bivariate(const MultiPoly& a, const MultiPoly& b);

/// gcd of a list (zeros are ignored; the list must contain a nonzero entry).
MultiPoly gcd_bivariate(std::span<const MultiPoly> polys);

/// Product of the distinct irreducible factors of p, normalized as in
/// gcd_bivariate. Throws std::invalid_argument for the zero polynomial.
MultiPoly squarefree_part(const MultiPoly& p);

}  // namespace loja
