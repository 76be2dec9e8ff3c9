#include "loja/estimator/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

#include "loja/poly/roots.hpp"

namespace loja {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::complex<double> polar_point(std::mt19937_64& rng, double modulus) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(modulus, angle(rng));
}

double unit(std::mt19937_64& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

void check_radius(double radius, int samples, std::size_t nvars) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("radius must be positive");
  if (samples < 16) throw std::invalid_argument("at least 16 samples are required");
  if (nvars < 2) throw std::invalid_argument("at least 2 variables are required");
}

// Puts the largest coordinate on the circle of the given radius.
void project_to_sphere(std::vector<std::complex<double>>& z, double radius) {
  std::size_t m = 0;
  for (std::size_t v = 1; v < z.size(); ++v)
    if (std::abs(z[v]) > std::abs(z[m])) m = v;
  double a = std::abs(z[m]);
  z[m] = a > 0.0 ? z[m] * (radius / a) : std::complex<double>(radius, 0.0);
}

MultiPoly coefficient_of_power(const MultiPoly& f, std::size_t var, std::uint32_t k) {
  MultiPoly out(f.variables());
  for (const auto& [e, c] : f.terms())
    if (e[var] == k) {
      Exponents e2 = e;
      e2[var] = 0;
      out.add_term(e2, c);
    }
  return out;
}

}  // namespace

RadiusLadder RadiusLadder::from_range(double rmin, double rmax, double ratio, int samples,
                                      std::uint64_t seed) {
  if (!(rmin > 0.0) || !(rmax > rmin) || !(ratio > 1.0))
    throw std::invalid_argument("ladder needs 0 < rmin < rmax and ratio > 1");
  RadiusLadder l;
  l.r0 = rmin;
  l.ratio = ratio;
  l.count = static_cast<int>(std::floor(std::log(rmax / rmin) / std::log(ratio) + 1e-9)) + 1;
  l.samples_per_radius = samples;
  l.seed = seed;
  l.validate();
  return l;
}

std::vector<double> RadiusLadder::radii() const {
  std::vector<double> r;
  for (int i = 0; i < count; ++i) r.push_back(r0 * std::pow(ratio, i));
  return r;
}

void RadiusLadder::validate() const {
  if (!(r0 > 0.0)) throw std::invalid_argument("ladder: R0 must be positive");
  if (!(ratio > 1.0)) throw std::invalid_argument("ladder: ratio must exceed 1");
  if (count < 4) throw std::invalid_argument("ladder: at least 4 radii are required");
  if (samples_per_radius < 16) throw std::invalid_argument("ladder: at least 16 samples are required");
  if (multistarts < 1) throw std::invalid_argument("ladder: at least 1 multistart is required");
}

CompiledMap::CompiledMap(const MappingSpec& f) : nvars_(f.variables.size()) {
  for (std::size_t j = 0; j < f.components.size(); ++j) {
    const MultiPoly& c = f.components[j];
    if (c.nvars() != nvars_) throw std::invalid_argument("component variables do not match");
    components_.emplace_back(c);
    if (c.is_zero()) {
      has_zero_ = true;
      continue;
    }
    for (std::size_t v = 0; v < nvars_; ++v) {
      Degree d = c.degree_in(v);
      if (!d || *d < 1) continue;
      Slice s{j, v, {}};
      for (int k = 0; k <= *d; ++k)
        s.coeffs.emplace_back(coefficient_of_power(c, v, static_cast<std::uint32_t>(k)));
      slices_.push_back(std::move(s));
    }
  }
}

std::vector<double> CompiledMap::norms(const PointBatch& pts) const {
  std::vector<double> out(pts.count, 0.0), re(pts.count), im(pts.count);
  for (const CompiledPoly& c : components_) {
    c.evaluate(pts, re, im);
    for (std::size_t i = 0; i < pts.count; ++i) out[i] = std::max(out[i], std::hypot(re[i], im[i]));
  }
  return out;
}

double CompiledMap::norm(std::span<const std::complex<double>> z) const {
  PointBatch b(nvars_, 1);
  b.set(0, z);
  return norms(b)[0];
}

double sample_S_min(const MappingSpec& f, double radius, int samples, std::uint64_t seed) {
  return sample_S_min(CompiledMap(f), radius, samples, seed);
}

double sample_S_min(const CompiledMap& f, double radius, int samples, std::uint64_t seed) {
  check_radius(radius, samples, f.nvars());
  // A zero component makes S the whole space.
  if (f.has_zero_) return sphere_min(f, radius, samples, seed);
  const std::size_t n = f.nvars();
  const auto count = static_cast<std::size_t>(samples);
  std::mt19937_64 rng(seed);
  double best = kInf;
  for (const auto& slice : f.slices_) {
    PointBatch pts(n, count);
    std::vector<std::complex<double>> z(n);
    for (std::size_t s = 0; s < count; ++s) {
      std::size_t circle = rng() % (n - 1);
      if (circle >= slice.variable) ++circle;
      for (std::size_t v = 0; v < n; ++v) {
        if (v == slice.variable) z[v] = 0.0;
        else if (v == circle) z[v] = polar_point(rng, radius);
        else z[v] = polar_point(rng, radius * std::sqrt(unit(rng)));
      }
      pts.set(s, z);
    }
    std::vector<std::vector<std::complex<double>>> cv;
    for (const auto& c : slice.coeffs) cv.push_back(c.evaluate(pts));
    std::vector<std::vector<std::complex<double>>> found;
    for (std::size_t s = 0; s < count; ++s) {
      std::vector<std::complex<double>> coeffs;
      for (const auto& c : cv) coeffs.push_back(c[s]);
      while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
      if (coeffs.size() < 2) continue;
      for (const auto& r : polynomial_roots(coeffs)) {
        if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) continue;
        if (std::abs(r) > radius * (1.0 + 1e-12)) continue;
        for (std::size_t v = 0; v < n; ++v) z[v] = pts.get(v, s);
        z[slice.variable] = r;
        found.push_back(z);
      }
    }
    if (found.empty()) continue;
    PointBatch roots(n, found.size());
    for (std::size_t i = 0; i < found.size(); ++i) roots.set(i, found[i]);
    for (double v : f.norms(roots)) best = std::min(best, v);
  }
  return best;
}

double sphere_min(const MappingSpec& f, double radius, int samples, std::uint64_t seed,
                  int multistarts) {
  return sphere_min(CompiledMap(f), radius, samples, seed, multistarts);
}

namespace {

constexpr int kDirections = 8;
constexpr int kMaxSweeps = 2000;

// Coordinate-wise pattern search on the sphere: each sweep tries eight
// complex perturbations of every coordinate, keeps the best improvement,
// and adapts the per-coordinate step.
double descend(const CompiledMap& f, std::vector<std::complex<double>> z, double radius) {
  const std::size_t n = z.size();
  double value = f.norm(z);
  std::vector<double> step(n);
  for (std::size_t v = 0; v < n; ++v) step[v] = 0.25 * std::max(std::abs(z[v]), 1e-3 * radius);
  std::vector<std::complex<double>> dirs;
  for (int k = 0; k < kDirections; ++k)
    dirs.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / kDirections));
  PointBatch cand(n, kDirections);
  std::vector<std::vector<std::complex<double>>> trial(kDirections);
  for (int sweep = 0; sweep < kMaxSweeps && value > 0.0; ++sweep) {
    bool moving = false;
    for (std::size_t v = 0; v < n; ++v) {
      for (int k = 0; k < kDirections; ++k) {
        trial[k] = z;
        trial[k][v] += step[v] * dirs[k];
        project_to_sphere(trial[k], radius);
        cand.set(k, trial[k]);
      }
      std::vector<double> vals = f.norms(cand);
      auto it = std::min_element(vals.begin(), vals.end());
      if (*it < value) {
        value = *it;
        z = trial[it - vals.begin()];
        step[v] *= 2.0;
      } else {
        step[v] *= 0.5;
      }
      if (step[v] > 1e-10 * std::abs(z[v]) && step[v] > 1e-300) moving = true;
    }
    if (!moving) break;
  }
  return value;
}

}  // namespace

double sphere_min(const CompiledMap& f, double radius, int samples, std::uint64_t seed,
                  int multistarts) {
  check_radius(radius, samples, f.nvars());
  if (multistarts < 1) throw std::invalid_argument("at least 1 multistart is required");
  const std::size_t n = f.nvars();
  const auto count = static_cast<std::size_t>(samples);
  std::mt19937_64 rng(seed ^ 0x5bd1e995u);
  std::vector<std::vector<std::complex<double>>> starts(count, std::vector<std::complex<double>>(n));
  PointBatch pts(n, count);
  for (std::size_t s = 0; s < count; ++s) {
    std::size_t m = rng() % n;
    for (std::size_t v = 0; v < n; ++v)
      starts[s][v] = polar_point(rng, v == m ? radius : radius * unit(rng));
    pts.set(s, starts[s]);
  }
  std::vector<double> vals = f.norms(pts);
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
  double best = vals[order[0]];
  for (std::size_t i = 0; i < std::min(count, static_cast<std::size_t>(multistarts)); ++i)
    best = std::min(best, descend(f, starts[order[i]], radius));
  return best;
}

SlopeFit fit_tail(const std::vector<std::pair<double, double>>& points) {
  SlopeFit fit;
  fit.points = points;
  std::size_t tail = (points.size() + 1) / 2;
  std::vector<std::pair<double, double>> used;
  for (std::size_t i = points.size() - tail; i < points.size(); ++i)
    if (std::isfinite(points[i].first) && std::isfinite(points[i].second)) used.push_back(points[i]);
  fit.used_tail = static_cast<int>(used.size());
  if (used.size() < 2) {
    fit.slope = fit.intercept = fit.residual = std::numeric_limits<double>::quiet_NaN();
    return fit;
  }
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : used) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(used.size());
  my /= static_cast<double>(used.size());
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : used) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (const auto& [x, y] : used) {
    double r = y - (fit.intercept + fit.slope * x);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(used.size()));
  return fit;
}

EstimateReport estimate_exponent(const MappingSpec& f, const RadiusLadder& ladder) {
  ladder.validate();
  CompiledMap map(f);
  EstimateReport report;
  std::vector<std::pair<double, double>> rs, fs;
  std::vector<double> radii = ladder.radii();
  for (std::size_t i = 0; i < radii.size(); ++i) {
    std::uint64_t seed = ladder.seed * 1000003u + i;
    double r = radii[i];
    double ms = sample_S_min(map, r, ladder.samples_per_radius, seed);
    double mf = sphere_min(map, r, ladder.samples_per_radius, seed, ladder.multistarts);
    report.rows.push_back({r, ms, mf});
    rs.emplace_back(std::log(r), std::log(ms));
    fs.emplace_back(std::log(r), std::log(mf));
  }
  report.restricted = fit_tail(rs);
  report.full = fit_tail(fs);
  report.agreement = std::abs(report.restricted.slope - report.full.slope);
  return report;
}

void write_csv(const EstimateReport& report, std::ostream& out) {
  out << "radius,min_restricted,min_full\n" << std::setprecision(6);
  for (const auto& row : report.rows)
    out << row.radius << ',' << row.min_restricted << ',' << row.min_full << '\n';
}

RootDistanceResult root_distance_check(const std::vector<QPoly>& components, int probes, std::uint64_t seed) {
  if (components.empty()) throw std::invalid_argument("no components");
  int deg_phi = 0, deg_product = 0;
  for (const QPoly& c : components) {
    if (c.is_zero()) throw std::invalid_argument("product of components is zero");
    deg_phi = std::max(deg_phi, *c.degree());
    deg_product += *c.degree();
  }
  if (deg_product == 0) throw std::invalid_argument("product of components is constant");
  if (probes < 1) throw std::invalid_argument("at least 1 probe is required");

  const std::vector<std::string> vars{"t"};
  std::vector<CompiledPoly> comp;
  std::vector<std::complex<double>> roots;
  for (const QPoly& c : components) {
    MultiPoly m(vars);
    std::vector<std::complex<double>> cd;
    for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
      m.add_term({static_cast<std::uint32_t>(k)}, c.coeffs()[k]);
      cd.emplace_back(c.coeffs()[k].get_d(), 0.0);
    }
    comp.emplace_back(m);
    if (cd.size() > 1)
      for (const auto& r : polynomial_roots(cd)) roots.push_back(r);
  }
  auto norms = [&](const std::vector<std::complex<double>>& ts) {
    PointBatch b(1, ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) b.set(i, std::span(&ts[i], 1));
    std::vector<double> out(ts.size(), 0.0), re(ts.size()), im(ts.size());
    for (const auto& c : comp) {
      c.evaluate(b, re, im);
      for (std::size_t i = 0; i < ts.size(); ++i) out[i] = std::max(out[i], std::hypot(re[i], im[i]));
    }
    return out;
  };
  std::vector<double> at_roots = norms(roots);
  double bound = std::ldexp(*std::min_element(at_roots.begin(), at_roots.end()), -deg_phi);

  std::complex<double> center = 0.0;
  for (const auto& r : roots) center += r;
  center /= static_cast<double>(roots.size());
  double spread = 1.0;
  for (const auto& r : roots) spread = std::max(spread, std::abs(r - center));
  std::mt19937_64 rng(seed);
  std::vector<std::complex<double>> ts;
  for (int i = 0; i < probes; ++i)
    ts.push_back(center + polar_point(rng, 2.0 * spread * std::sqrt(unit(rng))));
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) ts.push_back(0.5 * (roots[i] + roots[j]));

  RootDistanceResult res;
  res.worst_margin = kInf;
  res.probes = ts.size();
  std::vector<double> lhs = norms(ts);
  for (double v : lhs) {
    if (v < bound - 1e-9 * std::max(1.0, bound)) res.holds = false;
    if (bound > 0.0) res.worst_margin = std::min(res.worst_margin, v / bound);
  }
  return res;
}

}  // namespace loja
