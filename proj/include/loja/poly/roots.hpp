#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "loja/poly/ball.hpp"

namespace loja {

/// All complex roots of a polynomial with complex double coefficients (lowest
/// degree first, leading coefficient nonzero) by Aberth-Ehrlich iteration
/// followed by a Newton polish.
std::vector<std::complex<double>> polynomial_roots(std::span<const std::complex<double>> coeffs);

/// Multiprecision refinement of approximate roots by simultaneous
/// Aberth-Ehrlich steps until corrections fall below 2^-prec relative.
std::vector<MpComplex> refine_roots(std::span<const MpComplex> coeffs,
                                    std::vector<MpComplex> approx, mpfr_prec_t prec);

/// Certified isolation of all roots of a squarefree polynomial whose
/// coefficients are given as balls at a requested precision. Returns pairwise
/// disjoint disks, each containing exactly one root. Precision is doubled
/// until certification succeeds; throws std::runtime_error past max_prec.
std::vector<ComplexBall> isolate_roots(
    const std::function<std::vector<ComplexBall>(mpfr_prec_t)>& coeffs_at, mpfr_prec_t prec,
    mpfr_prec_t max_prec = 8192);

/// Certified disk around one root: refines `start` by Newton iteration at the
/// given precision and returns the disk of radius n|P(z)|/|P'(z)| (which
/// always contains a root). Returns nullopt when |P'| cannot be bounded away
/// from zero.
std::optional<ComplexBall> newton_enclosure(std::span<const ComplexBall> coeffs,
                                            const MpComplex& start, mpfr_prec_t prec);

/// Ball evaluation of a univariate polynomial (Horner).
ComplexBall horner(std::span<const ComplexBall> coeffs, const ComplexBall& z);

/// Lexicographic (real part, then imaginary part) comparison of isolating
/// disks; overlapping real projections count as equal real parts.
bool lex_less(const ComplexBall& a, const ComplexBall& b);

}  // namespace loja
