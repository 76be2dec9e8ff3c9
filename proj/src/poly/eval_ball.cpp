#include "loja/poly/eval_ball.hpp"

#include <stdexcept>

#include "loja/poly/roots.hpp"

namespace loja {

namespace {

void check_prec(mpfr_prec_t prec) {
  if (prec < 32) throw std::invalid_argument("eval_ball precision below 32 bits");
}

}  // namespace

ComplexBall eval_ball(const MultiPoly& p, std::span<const ComplexBall> point, mpfr_prec_t prec) {
  check_prec(prec);
  if (point.size() != p.nvars()) throw std::invalid_argument("eval_ball: point dimension");
  // powers are cached per variable; terms are few at this scale
  std::vector<std::vector<ComplexBall>> powers(p.nvars());
  for (std::size_t v = 0; v < p.nvars(); ++v) powers[v].push_back(ComplexBall::from_rational(1, prec));
  auto power = [&](std::size_t v, std::uint32_t e) -> const ComplexBall& {
    while (powers[v].size() <= e) powers[v].push_back(powers[v].back() * point[v]);
    return powers[v][e];
  };
  ComplexBall acc(prec);
  for (const auto& [e, c] : p.terms()) {
    ComplexBall t = ComplexBall::from_rational(c, prec);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] != 0) t *= power(v, e[v]);
    acc += t;
  }
  return acc;
}

ComplexBall eval_ball(const UniPolyExt& p, const ComplexBall& z, mpfr_prec_t prec) {
  check_prec(prec);
  auto gens = p.tower()->generator_enclosures(prec);
  std::vector<ComplexBall> c;
  for (const auto& x : p.coords()) c.push_back(p.tower()->enclose(x, gens));
  return horner(c, z);
}

}  // namespace loja
