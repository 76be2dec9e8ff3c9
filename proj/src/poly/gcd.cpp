#include "loja/poly/gcd.hpp"

#include <stdexcept>

#include "loja/poly/qpoly.hpp"

namespace loja {

namespace {

// Element of Q[x][y]: entry k is the coefficient of y^k, a polynomial in x.
using Dense = std::vector<QPoly>;

void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Dense to_dense(const MultiPoly& p) {
  Dense d;
  for (const auto& [e, c] : p.terms()) {
    if (d.size() <= e[1]) d.resize(e[1] + 1);
    d[e[1]] = d[e[1]] + QPoly::x_power(e[0], c);
  }
  trim(d);
  return d;
}

MultiPoly from_dense(const Dense& d, const std::vector<std::string>& vars) {
  MultiPoly p(vars);
  for (std::size_t k = 0; k < d.size(); ++k) {
    const auto& cs = d[k].coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i)
      p.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k)}, cs[i]);
  }
  return p;
}

QPoly content(const Dense& p) {
  QPoly g;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

Dense primitive_part(const Dense& p) {
  QPoly c = content(p);
  Dense r;
  r.reserve(p.size());
  for (const auto& q : p) r.push_back(divmod(q, c).first);
  return r;
}

// lc(b)^k * a mod b with the power k left implicit; only the primitive part of
// the result is used, so the scalar factor does not matter.
Dense pseudo_remainder(Dense a, const Dense& b) {
  const QPoly& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    QPoly la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c = c * lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] = a[j + shift] - la * b[j];
    trim(a);
  }
  return a;
}

}  // namespace

MultiPoly gcd_bivariate(const MultiPoly& a, const MultiPoly& b) {
  if (a.variables() != b.variables()) throw std::invalid_argument("variable list mismatch");
  if (a.nvars() != 2) throw std::invalid_argument("gcd_bivariate needs exactly two variables");
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();

  Dense A = to_dense(a), B = to_dense(b);
  QPoly c = gcd(content(A), content(B));
  A = primitive_part(A);
  B = primitive_part(B);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    if (B.size() == 1) {
      A = Dense{QPoly::constant(1)};
      break;
    }
    Dense r = pseudo_remainder(A, B);
    A = std::move(B);
    B = r.empty() ? Dense{} : primitive_part(r);
  }
  for (auto& q : A) q = q * c;
  return from_dense(A, a.variables()).monic();
}

MultiPoly gcd_bivariate(std::span<const MultiPoly> polys) {
  const MultiPoly* first = nullptr;
  for (const auto& p : polys)
    if (!p.is_zero()) {
      first = &p;
      break;
    }
  if (!first) throw std::invalid_argument("gcd of an all-zero list");
  MultiPoly g = first->monic();
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = gcd_bivariate(g, p);
    if (g.is_constant()) break;
  }
  return g;
}

MultiPoly squarefree_part(const MultiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  if (p.nvars() != 2) throw std::invalid_argument("squarefree_part needs exactly two variables");
  if (p.is_constant()) return MultiPoly::constant(p.variables(), 1);
  MultiPoly px = p.derivative(0), py = p.derivative(1);
  MultiPoly g = px.is_zero() ? py.monic() : (py.is_zero() ? px.monic() : gcd_bivariate(px, py));
  g = gcd_bivariate(p, g);
  auto q = divide_exact(p, g);
  if (!q) throw std::logic_error("squarefree_part: gcd does not divide its argument");
  return q->monic();
}

}  // namespace loja
