// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "loja/engine/exponent.hpp"
#include "loja/estimator/estimator.hpp"
#include "loja/poly/eval_ball.hpp"
#include "loja/poly/gcd.hpp"
#include "loja/poly/parse.hpp"

using namespace loja;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const std::vector<std::string> kXY{"x", "y"};

MappingSpec map_of(std::initializer_list<const char*> comps) {
  MappingSpec f{kXY, {}};
  for (const char* c : comps) f.components.push_back(parse_poly(c, kXY));
  return f;
}

std::string describe(const MappingSpec& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.components.size(); ++i)
    s += (i ? ", " : "") + f.components[i].to_string();
  return s + ")";
}

struct Golden {
  const char* name;
  MappingSpec f;
  ExtRational expected;
};

std::vector<Golden> goldens() {
  return {{"identity", map_of({"x", "y"}), Rational(1)},
          {"hyperbola", map_of({"x", "x*y - 1"}), Rational(-1)},
          {"cusp", map_of({"y", "x - y^3"}), make_rational(1, 3)},
          {"common factor", map_of({"x", "x"}), std::nullopt},
          {"constant", map_of({"2", "5"}), Rational(0)}};
}

int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

// Sparse random polynomial of exact total degree `deg`.
MultiPoly random_component(std::mt19937_64& rng, int deg, int coeff_bound) {
  MultiPoly p(kXY);
  while (p.total_degree().value_or(-1) != deg) {
    p = MultiPoly(kXY);
    int terms = rand_int(rng, 2, 5);
    for (int t = 0; t < terms; ++t) {
      int d = t == 0 ? deg : rand_int(rng, 0, deg);
      int i = rand_int(rng, 0, d);
      int c = 0;
      while (c == 0) c = rand_int(rng, -coeff_bound, coeff_bound);
      p.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(d - i)}, Rational(c));
    }
  }
  return p;
}

std::vector<MappingSpec> random_maps(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<MappingSpec> out;
  for (int k = 0; k < count; ++k) {
    MappingSpec f{kXY, {}};
    for (int j = 0; j < 2; ++j) f.components.push_back(random_component(rng, rand_int(rng, 1, 4), 3));
    out.push_back(f);
  }
  return out;
}

// Independent oracle: Phi(t) from a deep truncation of the branch series in
// ball arithmetic, mapped back to the original coordinates, and F evaluated
// there; returns (log|F(Phi(t))|, log|Phi(t)|).
std::pair<double, double> ball_logs(const MappingSpec& f, const ExponentReport& r, std::size_t idx, const Rational& t) {
  constexpr mpfr_prec_t prec = 512;
  const BranchVerdict& v = r.branch_verdicts.at(idx);
  Branch b = extend_branch(v.branch, v.deg_phi - 80);
  auto gens = b.tower()->generator_enclosures(prec);
  ComplexBall tb = ComplexBall::from_rational(t, prec);
  ComplexBall inv = ComplexBall::from_rational(1 / t, prec);
  auto power = [&](int e) {
    ComplexBall acc = ComplexBall::from_rational(1, prec);
    for (int k = 0; k < std::abs(e); ++k) acc = acc * (e > 0 ? tb : inv);
    return acc;
  };
  ComplexBall x = power(b.ramification());
  ComplexBall y = ComplexBall::from_rational(0, prec);
  for (const auto& term : b.series()) y = y + b.tower()->enclose(term.coeff.coords(), gens) * power(term.exponent);
  const auto& m = r.transform;
  std::vector<ComplexBall> z{
      ComplexBall::from_rational(m[0][0], prec) * x + ComplexBall::from_rational(m[0][1], prec) * y,
      ComplexBall::from_rational(m[1][0], prec) * x + ComplexBall::from_rational(m[1][1], prec) * y};
  double phi = std::max(z[0].abs_upper().to_double(), z[1].abs_upper().to_double());
  double fv = 0.0;
  for (const auto& c : f.components) fv = std::max(fv, eval_ball(c, z, prec).abs_upper().to_double());
  return {std::log(fv), std::log(phi)};
}

// Every branch verdict, splitting on zero divisors.
template <class Fn>
void for_each_split(const Branch& b0, Fn&& fn) {
  std::vector<Branch> work{b0};
  while (!work.empty()) {
    Branch b = work.back();
    work.pop_back();
    try {
      fn(b);
    } catch (const ZeroDivisor& z) {
      for (auto& p : split_branch(b, z)) work.push_back(std::move(p));
    }
  }
}

int failures = 0;

void report(int id, bool ok, const std::string& summary) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, summary.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void note(const std::string& s) { std::printf("  %s\n", s.c_str()); }

// 1. Exact golden cases.
void criterion1() {
  bool ok = true;
  double worst = 0.0;
  for (const auto& g : goldens()) {
    auto t0 = Clock::now();
    ExponentReport r = lojasiewicz_exponent(g.f);
    double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    bool good = r.exponent == g.expected && dt < 5.0;
    if (!good) {
      note(std::string(g.name) + ": got " + to_string(r.exponent) + ", expected " + to_string(g.expected) +
           ", " + std::to_string(dt) + " s");
      ok = false;
    }
  }
  report(1, ok, "golden exponents exact; slowest " + std::to_string(worst) + " s");
}

// 2. Rationality and attainment over random maps.
void criterion2(std::vector<MappingSpec>& suite) {
  auto t0 = Clock::now();
  suite = random_maps(20240501, 50);
  int finite = 0, denom_bad = 0, attain_bad = 0;
  double worst_gap = 0.0, worst_slope_gap = 0.0, worst_engine_gap = 0.0;
  for (const auto& f : suite) {
    ExponentReport r = lojasiewicz_exponent(f);
    if (!r.exponent) continue;
    ++finite;
    if (r.degenerate_case != DegenerateCase::none) continue;
    BigInt den = r.exponent->get_den();
    bool divides = false;
    for (const auto& v : r.branch_verdicts) divides = divides || v.deg_phi % den.get_si() == 0;
    if (!divides) {
      ++denom_bad;
      note("denominator does not divide any deg Phi: " + describe(f));
    }
    auto [lf4, lp4] = ball_logs(f, r, *r.witness, Rational(10000));
    auto [lf5, lp5] = ball_logs(f, r, *r.witness, Rational(100000));
    double ratio = lf4 / lp4;
    double gap = std::abs(ratio - r.exponent->get_d());
    worst_gap = std::max(worst_gap, gap);
    // diagnostics: local log-log slope between |t| = 1e4 and 1e5, and the
    // engine's own ratio against this oracle
    worst_slope_gap = std::max(worst_slope_gap, std::abs((lf5 - lf4) / (lp5 - lp4) - r.exponent->get_d()));
    worst_engine_gap = std::max(worst_engine_gap, std::abs(attainment_ratio(r, *r.witness, 1e4) - ratio));
    if (gap > 0.05) {
      ++attain_bad;
      note("ratio " + std::to_string(ratio) + " vs exponent " + to_string(r.exponent) + " (deg_phi " +
           std::to_string(r.branch_verdicts[*r.witness].deg_phi) + ", |F|/|Phi|^exponent ~ " +
           std::to_string(std::exp(lf4 - r.exponent->get_d() * lp4)) + "): " + describe(f));
    }
  }
  double dt = seconds_since(t0);
  note("diagnostic: worst local slope gap " + std::to_string(worst_slope_gap) +
       "; worst engine/oracle ratio difference " + std::to_string(worst_engine_gap));
  bool ok = denom_bad == 0 && attain_bad == 0 && dt < 600.0;
  report(2, ok,
         std::to_string(finite) + "/50 finite; denominator failures " + std::to_string(denom_bad) +
             "; attainment failures " + std::to_string(attain_bad) + " (worst gap " +
             std::to_string(worst_gap) + "); " + std::to_string(dt) + " s");
}

// 3. Seed invariance with distinct coordinate changes.
void criterion3(std::vector<MappingSpec>& suite) {
  std::vector<MappingSpec> maps;
  for (const auto& g : goldens()) maps.push_back(g.f);
  suite = random_maps(777, 20);
  for (const auto& f : suite) maps.push_back(f);
  int disagree = 0, repeated = 0;
  for (const auto& f : maps) {
    std::set<std::string> transforms;
    std::set<std::string> exps;
    bool degenerate = false;
    for (std::uint64_t s = 0; s < 5; ++s) {
      ExponentReport r = lojasiewicz_exponent(f, s);
      exps.insert(to_string(r.exponent));
      degenerate = r.degenerate_case != DegenerateCase::none;
      std::string m;
      for (const auto& row : r.transform)
        for (const auto& q : row) m += to_string(q) + ",";
      transforms.insert(m);
    }
    if (exps.size() != 1) {
      ++disagree;
      note("exponents differ across seeds: " + describe(f));
    }
    if (!degenerate && transforms.size() != 5) {
      ++repeated;
      note("repeated coordinate change across seeds: " + describe(f));
    }
  }
  report(3, disagree == 0 && repeated == 0,
         std::to_string(maps.size()) + " maps x 5 seeds; disagreements " + std::to_string(disagree) +
             "; repeated matrices " + std::to_string(repeated));
}

// 4. Numeric slopes on S and on the sphere against the exact value.
void criterion4() {
  bool ok = true;
  std::string summary;
  RadiusLadder ladder = RadiusLadder::from_range(1e2, 1e6, std::sqrt(10.0), 64);
  for (const auto& g : goldens()) {
    ExponentReport r = lojasiewicz_exponent(g.f);
    if (!r.exponent || r.degenerate_case == DegenerateCase::S_empty) continue;
    auto t0 = Clock::now();
    EstimateReport e = estimate_exponent(g.f, ladder);
    double dt = seconds_since(t0);
    double exact = r.exponent->get_d();
    bool good = std::abs(e.restricted.slope - exact) <= 0.05 && e.agreement <= 0.05 && dt < 120.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: exact %.4f restricted %.4f full %.4f (%.1f s)", g.name, exact,
                  e.restricted.slope, e.full.slope, dt);
    if (!good) ok = false;
    summary += std::string(summary.empty() ? "" : "; ") + buf;
  }
  report(4, ok, summary);
}

// 5. Root distance inequality on random univariate mappings.
void criterion5() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(55);
  int violations = 0;
  double worst = INFINITY;
  for (int k = 0; k < 1000; ++k) {
    std::vector<QPoly> comps;
    int total = 0;
    while (total == 0) {
      comps.clear();
      int m = rand_int(rng, 1, 3);
      for (int j = 0; j < m; ++j) {
        int d = rand_int(rng, 0, 6);
        std::vector<Rational> c;
        for (int i = 0; i <= d; ++i) c.emplace_back(rand_int(rng, -10, 10));
        while (c.back() == 0) c.back() = rand_int(rng, -10, 10);
        comps.emplace_back(c);
        total += d;
      }
    }
    RootDistanceResult r = root_distance_check(comps, 64, static_cast<std::uint64_t>(k));
    if (!r.holds) ++violations;
    worst = std::min(worst, r.worst_margin);
  }
  double dt = seconds_since(t0);
  report(5, violations == 0 && dt < 60.0,
         "1000 instances; violations " + std::to_string(violations) + "; smallest margin " +
             std::to_string(worst) + "; " + std::to_string(dt) + " s");
}

// 6. Structure of branches of random regular curves.
void criterion6() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(66);
  int curves = 0, ram_bad = 0, annih_bad = 0, bound_bad = 0, finite_checks = 0;
  double worst_residual = 0.0;
  while (curves < 30) {
    int d = rand_int(rng, 2, 6);
    MultiPoly h(kXY);
    for (int total = 0; total <= d; ++total)
      for (int i = 0; i <= total; ++i)
        if (rng() % 3 == 0 || (total == d && (i == 0 || i == d)))
          h.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(total - i)},
                     Rational(rand_int(rng, 1, 3) * (rng() % 2 ? 1 : -1)));
    if (!is_degree_regular(h) || squarefree_part(h).total_degree() != h.total_degree()) continue;
    ++curves;
    std::vector<Branch> bs = expand_branches(h);
    std::size_t ram = 0;
    for (const auto& b : bs) ram += b.conjugacy_size() * static_cast<std::size_t>(b.ramification());
    if (ram != static_cast<std::size_t>(*h.degree_in(1))) {
      ++ram_bad;
      note("ramification sum " + std::to_string(ram) + " for " + h.to_string());
    }
    MultiPoly g = random_component(rng, rand_int(rng, 1, 3), 3);
    int gd = *g.total_degree();
    for (const auto& b0 : bs) {
      for_each_split(b0, [&](const Branch& b) {
        // exact: every guaranteed coefficient of h(Phi(t)) vanishes
        ComposedSeries s = compose_series(h, b, 16);
        for (const auto& c : s.coeffs)
          if (!b.tower()->is_zero(c)) {
            ++annih_bad;
            note("nonzero guaranteed coefficient for " + h.to_string());
            break;
          }
        // numeric: h at a deep truncation is tiny relative to its terms
        constexpr mpfr_prec_t prec = 256;
        Branch e = extend_branch(b, deg_phi(b) - 60);
        auto gens = e.tower()->generator_enclosures(prec);
        Rational t(1000);
        ComplexBall x = ComplexBall::from_rational(1, prec), y = ComplexBall::from_rational(0, prec);
        for (int k = 0; k < b.ramification(); ++k) x = x * ComplexBall::from_rational(t, prec);
        for (const auto& term : e.series()) {
          ComplexBall p = ComplexBall::from_rational(1, prec);
          for (int k = 0; k < std::abs(term.exponent); ++k)
            p = p * ComplexBall::from_rational(term.exponent > 0 ? t : 1 / t, prec);
          y = y + e.tower()->enclose(term.coeff.coords(), gens) * p;
        }
        std::vector<ComplexBall> z{x, y};
        double scale = std::pow(std::max(x.abs_upper().to_double(), y.abs_upper().to_double()), *h.total_degree());
        double residual = eval_ball(h, z, prec).abs_upper().to_double() / scale;
        worst_residual = std::max(worst_residual, residual);
        if (residual > 1e-30) {
          ++annih_bad;
          note("numeric residual " + std::to_string(residual) + " for " + h.to_string());
        }
        Degree cd = compose_deg(g, b, *h.total_degree());
        if (cd) {
          ++finite_checks;
          int dp = deg_phi(b);
          if (*cd < gd * (dp - *h.total_degree()) || *cd > gd * dp) {
            ++bound_bad;
            note("compose_deg " + std::to_string(*cd) + " out of bounds for " + h.to_string());
          }
        }
      });
    }
  }
  double dt = seconds_since(t0);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.1e", worst_residual);
  report(6, ram_bad == 0 && annih_bad == 0 && bound_bad == 0 && dt < 300.0,
         "30 curves; ramification failures " + std::to_string(ram_bad) + "; annihilation failures " +
             std::to_string(annih_bad) + " (worst residual " + buf + "); bound failures " +
             std::to_string(bound_bad) + " of " + std::to_string(finite_checks) + "; " + std::to_string(dt) + " s");
}

// Unbounded points on S (or on the sphere when S is empty) along which |F|
// stays bounded: minima over five decades of radii must not grow.
bool escape_witness(const MappingSpec& f, bool s_empty) {
  CompiledMap cm(f);
  std::vector<double> v;
  for (int k = 2; k <= 6; ++k) {
    double r = std::pow(10.0, k);
    v.push_back(s_empty ? sphere_min(cm, r, 64, k) : sample_S_min(cm, r, 256, k));
  }
  if (!std::isfinite(v[0])) return false;
  for (double x : v)
    if (!std::isfinite(x) || x > 2.0 * v[0]) return false;
  return true;
}

// 7. Properness verdicts and escape witnesses.
void criterion7(const std::vector<MappingSpec>& s2, const std::vector<MappingSpec>& s3) {
  std::vector<MappingSpec> maps;
  for (const auto& g : goldens()) maps.push_back(g.f);
  for (auto m : {map_of({"x^2*y - 1", "x"}), map_of({"y", "x*y + 1"}), map_of({"x*y - 1", "x*y - 1 + x"}),
                 map_of({"x^2*y^2 - 1", "x^3"}), map_of({"x*y - 1", "x^2*y - x + y"})})
    maps.push_back(m);
  maps.insert(maps.end(), s2.begin(), s2.end());
  maps.insert(maps.end(), s3.begin(), s3.end());
  int mismatch = 0, searched = 0, missed = 0;
  for (const auto& f : maps) {
    ExponentReport r = lojasiewicz_exponent(f);
    bool positive = r.exponent && *r.exponent > 0;
    if (r.proper != positive || is_proper(f).first != positive) {
      ++mismatch;
      note("verdict mismatch: " + describe(f));
    }
    if (!r.proper && r.exponent) {
      ++searched;
      if (!escape_witness(f, r.degenerate_case == DegenerateCase::S_empty)) {
        ++missed;
        note("no escape witness for " + describe(f) + " (exponent " + to_string(r.exponent) + ")");
      }
    }
  }
  report(7, mismatch == 0 && missed == 0,
         std::to_string(maps.size()) + " maps; verdict mismatches " + std::to_string(mismatch) +
             "; escape witnesses " + std::to_string(searched - missed) + "/" + std::to_string(searched));
}

}  // namespace

int main() {
  std::vector<MappingSpec> s2, s3;
  const std::vector<std::function<void()>> steps{
      criterion1, [&] { criterion2(s2); }, [&] { criterion3(s3); }, criterion4, criterion5, criterion6,
      [&] { criterion7(s2, s3); }};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      steps[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), false, std::string("exception: ") + e.what());
    }
  }
  return failures == 0 ? 0 : 1;
}
