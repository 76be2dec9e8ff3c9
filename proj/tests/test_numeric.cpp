#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "loja/estimator/estimator.hpp"
#include "loja/poly/parse.hpp"

using namespace loja;

namespace {

MappingSpec map(std::initializer_list<const char*> comps) {
  MappingSpec f{{"x", "y"}, {}};
  for (const char* c : comps) f.components.push_back(parse_poly(c, f.variables));
  return f;
}

MultiPoly random_poly(std::mt19937_64& rng, std::size_t nvars, int deg) {
  std::vector<std::string> vars;
  for (std::size_t v = 0; v < nvars; ++v) vars.push_back("z" + std::to_string(v + 1));
  MultiPoly p(vars);
  for (int t = 0; t < 12; ++t) {
    Exponents e(nvars, 0);
    int left = deg;
    for (std::size_t v = 0; v < nvars; ++v) {
      int k = static_cast<int>(rng() % static_cast<unsigned>(left + 1));
      e[v] = static_cast<std::uint32_t>(k);
      left -= k;
    }
    p.add_term(e, Rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1));
  }
  return p;
}

}  // namespace

TEST(Kernels, ScalarMatchesDirectEvaluation) {
  MultiPoly p = parse_poly("x^3*y - 2*x + 1/2", {"x", "y"});
  CompiledPoly c(p);
  std::complex<double> x(0.5, -1.25), y(2.0, 0.75);
  std::complex<double> want = x * x * x * y - 2.0 * x + 0.5;
  std::vector<std::complex<double>> z{x, y};
  EXPECT_LT(std::abs(c.evaluate(z) - want), 1e-12);
}

TEST(Kernels, AllAvailableKernelsAgreeBitwise) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (std::size_t nvars : {1u, 2u, 3u}) {
    for (int trial = 0; trial < 20; ++trial) {
      CompiledPoly c(random_poly(rng, nvars, 1 + trial % 9));
      std::size_t count = 1 + static_cast<std::size_t>(trial) * 3;
      PointBatch pts(nvars, count);
      for (auto& v : pts.re) v = u(rng);
      for (auto& v : pts.im) v = u(rng);
      std::vector<double> r0(count), i0(count);
      c.evaluate(pts, r0, i0, Kernel::scalar);
      for (Kernel k : {Kernel::avx2, Kernel::neon}) {
        if (!kernel_available(k)) continue;
        std::vector<double> r1(count), i1(count);
        c.evaluate(pts, r1, i1, k);
        for (std::size_t i = 0; i < count; ++i) {
          EXPECT_EQ(r0[i], r1[i]) << to_string(k);
          EXPECT_EQ(i0[i], i1[i]) << to_string(k);
        }
      }
    }
  }
}

TEST(Kernels, OverrideSelectsKernel) {
  set_kernel_override(Kernel::scalar);
  EXPECT_EQ(active_kernel(), Kernel::scalar);
  set_kernel_override(std::nullopt);
  if (kernel_available(Kernel::avx2)) {
    EXPECT_EQ(active_kernel(), Kernel::avx2);
  }
}

TEST(Kernels, EstimatorIsKernelIndependent) {
  MappingSpec f = map({"y", "x - y^3"});
  set_kernel_override(Kernel::scalar);
  double a = sample_S_min(f, 1e4, 32, 3), b = sphere_min(f, 1e4, 32, 3);
  set_kernel_override(std::nullopt);
  EXPECT_EQ(a, sample_S_min(f, 1e4, 32, 3));
  EXPECT_EQ(b, sphere_min(f, 1e4, 32, 3));
}

TEST(Estimator, SampleMinimaOnS) {
  EXPECT_NEAR(sample_S_min(map({"x", "y"}), 1e3, 64, 0), 1e3, 1e-6);
  EXPECT_NEAR(sample_S_min(map({"y", "x - y^3"}), 1e6, 64, 0) / 1e2, 1.0, 1e-3);
  EXPECT_NEAR(sample_S_min(map({"x", "x*y - 1"}), 1e4, 64, 0) / 1e-4, 1.0, 1e-3);
  EXPECT_TRUE(std::isinf(sample_S_min(map({"1", "2"}), 1e3, 64, 0)));
}

TEST(Estimator, SphereMinima) {
  EXPECT_NEAR(sphere_min(map({"x", "y"}), 1e3, 64, 0), 1e3, 1e-6);
  EXPECT_NEAR(sphere_min(map({"1"}), 1e3, 64, 0), 1.0, 1e-12);
  EXPECT_NEAR(sphere_min(map({"y", "x - y^3"}), 1e6, 64, 0) / 1e2, 1.0, 0.05);
}

TEST(Estimator, RestrictionInequality) {
  for (auto f : {map({"x", "y"}), map({"y", "x - y^3"}), map({"x", "x*y - 1"}),
                 map({"x^2 - y", "x*y + 1"})})
    for (double r : {1e2, 1e4}) {
      double s = sample_S_min(f, r, 64, 5), m = sphere_min(f, r, 64, 5);
      EXPECT_GE(s, m * (1.0 - 1e-6));
    }
}

TEST(Estimator, Preconditions) {
  EXPECT_THROW(sample_S_min(map({"x"}), -1.0, 64, 0), std::invalid_argument);
  EXPECT_THROW(sample_S_min(map({"x"}), 10.0, 8, 0), std::invalid_argument);
  MappingSpec one{{"t"}, {parse_poly("t", {"t"})}};
  EXPECT_THROW(sphere_min(one, 10.0, 64, 0), std::invalid_argument);
  RadiusLadder l;
  l.count = 3;
  EXPECT_THROW(l.validate(), std::invalid_argument);
  EXPECT_EQ(RadiusLadder::from_range(1e2, 1e6, std::sqrt(10.0), 64).count, 9);
}

TEST(Estimator, SlopesOnExamples) {
  RadiusLadder ladder;
  auto id = estimate_exponent(map({"x", "y"}), ladder);
  EXPECT_NEAR(id.restricted.slope, 1.0, 0.02);
  EXPECT_NEAR(id.full.slope, 1.0, 0.02);
  EXPECT_EQ(id.restricted.used_tail, 5);
  auto cusp = estimate_exponent(map({"y", "x - y^3"}), ladder);
  EXPECT_NEAR(cusp.restricted.slope, 1.0 / 3.0, 0.05);
  EXPECT_LE(cusp.agreement, 0.05);
  auto hyp = estimate_exponent(map({"x", "x*y - 1"}), ladder);
  EXPECT_NEAR(hyp.restricted.slope, -1.0, 0.1);
  EXPECT_NEAR(hyp.full.slope, -1.0, 0.1);
}

TEST(Estimator, DeterministicAndCsv) {
  RadiusLadder ladder;
  ladder.count = 4;
  auto a = estimate_exponent(map({"x^2 - y", "x*y + 1"}), ladder);
  auto b = estimate_exponent(map({"x^2 - y", "x*y + 1"}), ladder);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].min_restricted, b.rows[i].min_restricted);
    EXPECT_EQ(a.rows[i].min_full, b.rows[i].min_full);
  }
  std::ostringstream os;
  write_csv(a, os);
  EXPECT_EQ(os.str().substr(0, 31), "radius,min_restricted,min_full\n");
}

TEST(FitTail, ExactLine) {
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < 8; ++i) pts.emplace_back(i, 2.0 * i + 1.0);
  pts[0].second = 100.0;  // outside the tail
  SlopeFit f = fit_tail(pts);
  EXPECT_EQ(f.used_tail, 4);
  EXPECT_NEAR(f.slope, 2.0, 1e-12);
  EXPECT_NEAR(f.intercept, 1.0, 1e-12);
  EXPECT_NEAR(f.residual, 0.0, 1e-12);
}

TEST(RootDistance, Examples) {
  QPoly t({0, 1}), tm1({-1, 1});
  auto tight = root_distance_check({t, tm1}, 64, 0);
  EXPECT_TRUE(tight.holds);
  EXPECT_NEAR(tight.worst_margin, 1.0, 1e-9);  // the midpoint t = 1/2 attains the bound
  auto square = root_distance_check({t * t}, 64, 0);
  EXPECT_TRUE(square.holds);
  EXPECT_THROW(root_distance_check({QPoly::constant(3)}, 8, 0), std::invalid_argument);
}
