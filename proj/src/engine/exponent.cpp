#include "loja/engine/exponent.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "loja/poly/gcd.hpp"

namespace loja {

std::string to_string(DegenerateCase c) {
  switch (c) {
    case DegenerateCase::none: return "none";
    case DegenerateCase::S_empty: return "S_empty";
    case DegenerateCase::all_components_zero: return "all_components_zero";
    case DegenerateCase::common_factor: return "common_factor";
  }
  return "none";
}

namespace {

void check_mapping(const MappingSpec& f) {
  if (f.variables.size() != 2) throw std::invalid_argument("the exact engine needs 2 variables");
  if (f.components.empty()) throw std::invalid_argument("mapping without components");
  for (const auto& c : f.components)
    if (c.variables() != f.variables) throw std::invalid_argument("component variable mismatch");
}

// six significant digits, rounded up, as an exact rational
Rational round_up(double v) {
  if (!(v > 0.0) || !std::isfinite(v)) return 1;
  int e = static_cast<int>(std::floor(std::log10(v))) - 5;
  auto m = static_cast<long>(std::ceil(v * std::pow(10.0, -e)));
  BigInt p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(e)));
  Rational q = e >= 0 ? Rational(BigInt(m) * p10) : Rational(BigInt(m), p10);
  q.canonicalize();
  return q;
}

}  // namespace

BranchVerdict per_branch_lambda(const std::vector<MultiPoly>& components, const Branch& b,
                                int ambient_deg) {
  BranchVerdict v{b, {}, std::nullopt, deg_phi(b), std::nullopt};
  for (const auto& g : components) {
    if (g.nvars() != 2) throw std::invalid_argument("component and branch coordinates differ");
    Degree d = compose_deg(g, v.branch, ambient_deg, &v.branch);
    v.component_degrees.push_back(d);
    if (d && (!v.deg_F_compose || *d > *v.deg_F_compose)) v.deg_F_compose = d;
  }
  if (v.deg_F_compose) {
    Rational l(*v.deg_F_compose, v.deg_phi);
    l.canonicalize();
    v.lambda = l;
  }
  return v;
}

ExponentReport lojasiewicz_exponent(const MappingSpec& f, std::uint64_t seed) {
  check_mapping(f);
  ExponentReport r;
  r.transform = identity_matrix(2);

  std::vector<MultiPoly> comps;
  for (const auto& c : f.components)
    if (!c.is_zero()) comps.push_back(c);
  if (comps.empty()) {
    r.degenerate_case = DegenerateCase::all_components_zero;
    return r;
  }
  if (std::all_of(comps.begin(), comps.end(), [](const MultiPoly& c) { return c.is_constant(); })) {
    r.degenerate_case = DegenerateCase::S_empty;
    r.exponent = Rational(0);
    return r;
  }
  if (gcd_bivariate(comps).total_degree().value_or(0) > 0) {
    r.degenerate_case = DegenerateCase::common_factor;
    return r;
  }

  MultiPoly product = MultiPoly::constant(f.variables, 1);
  for (const auto& c : comps) product *= c;
  auto [gen, transformed] = genericize(product, seed);
  r.genericize = gen;
  r.transform = gen.transform;
  for (const auto& c : comps) r.transformed_components.push_back(linear_change(c, gen.transform));
  MultiPoly h = squarefree_part(transformed);
  r.ambient_degree = *h.total_degree();
  r.curve = h;

  std::deque<Branch> work;
  for (auto& b : expand_branches(h)) work.push_back(std::move(b));
  std::vector<Branch> done;
  while (!work.empty()) {
    Branch b = std::move(work.front());
    work.pop_front();
    try {
      r.branch_verdicts.push_back(per_branch_lambda(r.transformed_components, b, r.ambient_degree));
      done.push_back(r.branch_verdicts.back().branch);
    } catch (const ZeroDivisor& z) {
      auto parts = split_branch(b, z);
      for (auto it = parts.rbegin(); it != parts.rend(); ++it) work.push_front(std::move(*it));
    }
  }

  for (std::size_t i = 0; i < r.branch_verdicts.size(); ++i) {
    const ExtRational& l = r.branch_verdicts[i].lambda;
    if (!r.witness || l < r.exponent) {
      r.witness = i;
      r.exponent = l;
    }
    if (!l) break;
  }
  r.proper = r.exponent && *r.exponent > 0;
  r.genericize.comparability_constants = comparability_constants(done);
  return r;
}

CurveBranches branches_at_infinity(const MappingSpec& f, std::uint64_t seed) {
  check_mapping(f);
  CurveBranches out{identity_matrix(2), std::nullopt, {}};
  MultiPoly product = MultiPoly::constant(f.variables, 1);
  for (const auto& c : f.components)
    if (!c.is_zero()) product *= c;
  if (product.is_constant() || std::all_of(f.components.begin(), f.components.end(),
                                           [](const MultiPoly& c) { return c.is_zero(); }))
    return out;
  auto [gen, transformed] = genericize(product, seed);
  out.transform = gen.transform;
  out.curve = squarefree_part(transformed);
  out.branches = expand_branches(*out.curve);
  return out;
}

std::pair<bool, ExtRational> is_proper(const MappingSpec& f, std::uint64_t seed) {
  ExponentReport r = lojasiewicz_exponent(f, seed);
  return {r.proper, r.exponent};
}

double attainment_ratio(const ExponentReport& report, std::size_t branch_index, double t) {
  const BranchVerdict& v = report.branch_verdicts.at(branch_index);
  const Branch& b = v.branch;
  const double lt = std::log(t);
  auto gens = b.tower()->generator_enclosures(FieldTower::kBasePrecision);

  // log|F(Phi(t))| from the exact composed series, scaled by its leading power
  double log_f = -INFINITY;
  for (std::size_t j = 0; j < report.transformed_components.size(); ++j) {
    const Degree& d = v.component_degrees[j];
    if (!d) continue;
    const MultiPoly& g = report.transformed_components[j];
    const int top = g.total_degree().value_or(0) * v.deg_phi;
    const int lead = top - *d;
    ComposedSeries s = compose_series(g, b, lead + 12);
    std::complex<double> sum = 0.0;
    for (std::size_t k = static_cast<std::size_t>(lead); k < s.coeffs.size(); ++k)
      sum += b.tower()->enclose(s.coeffs[k], gens).center() * std::pow(t, -static_cast<double>(k - lead));
    log_f = std::max(log_f, *d * lt + std::log(std::abs(sum)));
  }

  // |Phi(t)| in original coordinates, scaled by t^deg_phi
  Branch e = extend_branch(b, -12);
  std::complex<double> x = std::pow(t, b.ramification() - v.deg_phi);
  std::complex<double> y = 0.0;
  for (const auto& term : e.series())
    y += term.coeff.tower()->enclose(term.coeff.coords(), gens).center() *
         std::pow(t, static_cast<double>(term.exponent - v.deg_phi));
  const auto& m = report.transform;
  std::complex<double> u = m[0][0].get_d() * x + m[0][1].get_d() * y;
  std::complex<double> w = m[1][0].get_d() * x + m[1][1].get_d() * y;
  double log_phi = v.deg_phi * lt + std::log(std::max(std::abs(u), std::abs(w)));
  return log_f / log_phi;
}

std::pair<Rational, Rational> comparability_constants(const std::vector<Branch>& branches) {
  double c = 1.0;
  double d = INFINITY;
  for (const auto& b0 : branches) {
    Branch b = extend_branch(b0, -8);
    for (double t : {1e3, 1e4, 1e5}) {
      auto [x, y] = b.evaluate(t);
      double ax = std::abs(x), ay = std::abs(y);
      if (ax == 0.0 || ay == 0.0) continue;
      c = std::max({c, ax / ay, ay / ax});
      d = std::min(d, std::min(ax, ay));
    }
  }
  if (!std::isfinite(d)) d = 1.0;
  return {round_up(c), round_up(d)};
}

}  // namespace loja
