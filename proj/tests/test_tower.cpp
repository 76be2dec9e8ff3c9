#include <gtest/gtest.h>

#include <random>

#include "loja/poly/eval_ball.hpp"
#include "loja/poly/parse.hpp"
#include "loja/poly/unipoly_ext.hpp"

using namespace loja;

namespace {

UniPolyExt rational_poly(std::vector<Rational> c, TowerPtr t = FieldTower::rationals()) {
  return UniPolyExt::from_rationals(std::move(t), c);
}

// independent sqrt(n) at the given precision
MpReal mp_sqrt(unsigned long n, mpfr_prec_t prec) {
  MpReal r(prec);
  mpfr_sqrt_ui(r.get(), n, MPFR_RNDN);
  return r;
}

bool ball_contains_real(const ComplexBall& b, const MpReal& x) {
  MpReal zero(x.precision());
  return b.contains(ComplexBall::from_mid(MpComplex(x, zero)));
}

}  // namespace

TEST(TowerExtend, LinearIsExplicit) {
  Extension e = tower_extend(rational_poly({-2, 1}), "a");
  EXPECT_EQ(e.tower->depth(), 0u);
  EXPECT_EQ(e.root.as_rational(), Rational(2));
}

TEST(TowerExtend, SqrtTwoChoosesNegativeRoot) {
  Extension e = tower_extend(rational_poly({-2, 0, 1}), "a");
  EXPECT_EQ(e.tower->degree(), 2u);
  ComplexBall b = e.root.enclosure(256);
  MpReal s = mp_sqrt(2, 400);
  mpfr_neg(s.get(), s.get(), MPFR_RNDN);
  EXPECT_TRUE(ball_contains_real(b, s));
  EXPECT_LT(b.radius(), 1e-60);
  EXPECT_EQ((e.root * e.root).as_rational(), Rational(2));
}

TEST(TowerExtend, TwoLevelsMultiply) {
  Extension a = tower_extend(rational_poly({-2, 0, 1}), "a");
  Extension b = tower_extend(rational_poly({-3, 0, 1}, a.tower), "b");
  EXPECT_EQ(b.tower->degree(), 4u);
  AlgebraicNumber s = a.root.lift(b.tower) + b.root;
  // (a+b)^2 = 5 + 2ab
  AlgebraicNumber sq = s * s;
  AlgebraicNumber expect = AlgebraicNumber::from_rational(b.tower, 5) +
                           AlgebraicNumber::from_rational(b.tower, 2) * a.root * b.root;
  EXPECT_EQ(sq, expect);
  AlgebraicNumber inv = s.inverse();
  EXPECT_EQ((inv * s).as_rational(), Rational(1));
}

TEST(TowerExtend, RejectsNonSquarefree) {
  EXPECT_THROW(tower_extend(rational_poly({1, 2, 1}), "a"), std::invalid_argument);
}

TEST(TowerExtend, RootOrderingIsLexicographic) {
  // x^2 + 1: roots +-i share a real part, -i comes first
  Extension e = tower_extend(rational_poly({1, 0, 1}), "i");
  ComplexBall b = e.root.enclosure(128);
  EXPECT_LT(b.center().imag(), 0.0);
  // x^3 - 1: smallest real part is -1/2, then smaller imaginary part
  Extension w = tower_extend(rational_poly({-1, 0, 0, 1}), "w");
  auto c = w.root.enclosure(128).center();
  EXPECT_NEAR(c.real(), -0.5, 1e-12);
  EXPECT_LT(c.imag(), 0.0);
}

TEST(ZeroDivisorSplit, ReducibleLevel) {
  // t^2 - 1 is squarefree but reducible
  Extension e = tower_extend(rational_poly({-1, 0, 1}), "t");
  AlgebraicNumber a = e.root - AlgebraicNumber::from_rational(e.tower, 1);
  try {
    (void)a.inverse();
    FAIL() << "expected a zero divisor";
  } catch (const ZeroDivisor& z) {
    EXPECT_EQ(z.level(), 1u);
    ASSERT_EQ(z.factor().size(), 2u);
    // the factor shares a root with a, so it is t - 1
    EXPECT_EQ(z.factor()[0][0], Rational(-1));
    auto other = e.tower->cofactor(1, z.factor());
    EXPECT_EQ(other[0][0], Rational(1));
    TowerPtr s = e.tower->split(1, z.factor());
    EXPECT_EQ(s->depth(), 0u);
    Coords root = e.tower->project(e.root.coords(), 1, z.factor());
    EXPECT_EQ(root, Coords{1});
    TowerPtr s2 = e.tower->split(1, other);
    EXPECT_EQ(e.tower->project(e.root.coords(), 1, other), Coords{-1});
    EXPECT_EQ(s2->depth(), 0u);
  }
}

TEST(ZeroDivisorSplit, UpperLevelsAreProjected) {
  // level 1: u^2 - 1, level 2: v^2 - u (so v^4 = 1)
  Extension u = tower_extend(rational_poly({-1, 0, 1}), "u");
  UniPolyExt m2(u.tower, std::vector<AlgebraicNumber>{-u.root, AlgebraicNumber::from_rational(u.tower, 0),
                                                       AlgebraicNumber::from_rational(u.tower, 1)});
  Extension v = tower_extend(m2, "v");
  AlgebraicNumber x = u.root.lift(v.tower) + AlgebraicNumber::from_rational(v.tower, 1);
  try {
    (void)x.inverse();
    FAIL();
  } catch (const ZeroDivisor& z) {
    EXPECT_EQ(z.level(), 1u);
    // u + 1 is a zero divisor: factor u + 1
    TowerPtr s = v.tower->split(1, z.factor());
    ASSERT_EQ(s->depth(), 1u);
    // v^2 = -1 after the split
    Coords vv = s->mul(s->generator(1), s->generator(1));
    EXPECT_EQ(vv, s->from_rational(-1));
  }
}

TEST(Enclosure, ZeroTestAgreesWithRefinement) {
  Extension a = tower_extend(rational_poly({-2, 0, 1}), "a");
  Extension b = tower_extend(rational_poly({-3, 0, 1}, a.tower), "b");
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> c(-6, 6);
  for (int i = 0; i < 50; ++i) {
    Coords x(4);
    for (auto& q : x) q = c(rng);
    AlgebraicNumber n(b.tower, x);
    if (n.is_zero()) continue;
    ComplexBall e = n.enclosure_within(1e-30);
    EXPECT_FALSE(e.contains_zero()) << n.to_string();
  }
}

TEST(EvalBall, ExactRationalPoint) {
  MultiPoly p = parse_poly("x^2 + 1", {"x"});
  std::vector<ComplexBall> pt{ComplexBall::from_rational(2, 64)};
  ComplexBall r = eval_ball(p, pt, 64);
  EXPECT_EQ(r.radius(), 0.0);
  EXPECT_EQ(r.center(), std::complex<double>(5.0, 0.0));
}

TEST(EvalBall, SqrtTwoEnclosure) {
  Extension a = tower_extend(rational_poly({-2, 0, 1}), "a");
  MultiPoly p = parse_poly("x", {"x"});
  std::vector<ComplexBall> pt{a.root.enclosure(64)};
  ComplexBall r = eval_ball(p, pt, 64);
  EXPECT_LE(r.radius(), std::ldexp(1.0, -30));
  MpReal s = mp_sqrt(2, 200);
  mpfr_neg(s.get(), s.get(), MPFR_RNDN);
  EXPECT_TRUE(ball_contains_real(r, s));
}

TEST(EvalBall, WidthShrinksWithPrecision) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  MultiPoly p = parse_poly("x^3*y - 7/3*x*y^2 + y - 1/7", {"x", "y"});
  Extension a = tower_extend(rational_poly({-5, 0, 1}), "a");
  UniPolyExt q(a.tower, std::vector<AlgebraicNumber>{a.root, AlgebraicNumber::from_rational(a.tower, 1),
                                                      a.root * a.root * a.root});
  for (int i = 0; i < 30; ++i) {
    std::complex<double> z1(u(rng), u(rng)), z2(u(rng), u(rng));
    for (mpfr_prec_t k : {32, 64, 128}) {
      std::vector<ComplexBall> lo{ComplexBall::from_double(z1, k), ComplexBall::from_double(z2, k)};
      std::vector<ComplexBall> hi{ComplexBall::from_double(z1, 2 * k),
                                  ComplexBall::from_double(z2, 2 * k)};
      EXPECT_LE(eval_ball(p, hi, 2 * k).radius(), eval_ball(p, lo, k).radius());
      // a rational point perturbed by rounding: both contain the high precision value
      EXPECT_TRUE(eval_ball(p, lo, k).overlaps(eval_ball(p, hi, 2 * k)));
      EXPECT_LE(eval_ball(q, hi[0], 2 * k).radius(), eval_ball(q, lo[0], k).radius());
    }
  }
}
