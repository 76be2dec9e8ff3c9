#pragma once

#include <span>

#include "loja/poly/ball.hpp"
#include "loja/poly/multipoly.hpp"
#include "loja/poly/unipoly_ext.hpp"

namespace loja {

/// Certified enclosure of p(point) at the given working precision (>= 32).
ComplexBall eval_ball(const MultiPoly& p, std::span<const ComplexBall> point, mpfr_prec_t prec);

/// Certified enclosure of p(z); tower coefficients are enclosed at `prec`.
ComplexBall eval_ball(const UniPolyExt& p, const ComplexBall& z, mpfr_prec_t prec);

}  // namespace loja
