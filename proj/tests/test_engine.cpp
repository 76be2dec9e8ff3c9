#include <gtest/gtest.h>

#include "loja/engine/exponent.hpp"
#include "loja/poly/parse.hpp"

using namespace loja;

namespace {

MappingSpec map(std::initializer_list<const char*> comps) {
  MappingSpec f{{"x", "y"}, {}};
  for (const char* c : comps) f.components.push_back(parse_poly(c, f.variables));
  return f;
}

}  // namespace

TEST(Exponent, Identity) {
  auto r = lojasiewicz_exponent(map({"x", "y"}));
  EXPECT_EQ(r.exponent, Rational(1));
  EXPECT_TRUE(r.proper);
  EXPECT_EQ(r.degenerate_case, DegenerateCase::none);
}

TEST(Exponent, CuspMap) {
  auto r = lojasiewicz_exponent(map({"y", "x - y^3"}));
  EXPECT_EQ(r.exponent, make_rational(1, 3));
  EXPECT_TRUE(r.proper);
}

TEST(Exponent, HyperbolaMap) {
  auto r = lojasiewicz_exponent(map({"x", "x*y - 1"}));
  EXPECT_EQ(r.exponent, Rational(-1));
  EXPECT_FALSE(r.proper);
  std::vector<Rational> lambdas;
  for (const auto& v : r.branch_verdicts) lambdas.push_back(*v.lambda);
  std::sort(lambdas.begin(), lambdas.end());
  EXPECT_EQ(lambdas, (std::vector<Rational>{-1, 0, 1}));
}

TEST(Exponent, Degenerate) {
  auto common = lojasiewicz_exponent(map({"x", "x"}));
  EXPECT_EQ(common.exponent, std::nullopt);
  EXPECT_EQ(common.degenerate_case, DegenerateCase::common_factor);
  auto empty = lojasiewicz_exponent(map({"3", "0"}));
  EXPECT_EQ(empty.exponent, Rational(0));
  EXPECT_EQ(empty.degenerate_case, DegenerateCase::S_empty);
  EXPECT_FALSE(empty.proper);
  auto zero = lojasiewicz_exponent(map({"0"}));
  EXPECT_EQ(zero.exponent, std::nullopt);
  EXPECT_EQ(zero.degenerate_case, DegenerateCase::all_components_zero);
}

TEST(Exponent, ZeroComponentsAreDropped) {
  EXPECT_EQ(lojasiewicz_exponent(map({"0", "x", "y"})).exponent, Rational(1));
}

TEST(PerBranch, CuspBranch) {
  MultiPoly h = parse_poly("y^2 - x^3", {"x", "y"});
  auto bs = expand_branches(h);
  std::vector<MultiPoly> comps{h, parse_poly("x", {"x", "y"})};
  BranchVerdict v = per_branch_lambda(comps, bs[0], 3);
  EXPECT_EQ(v.deg_F_compose, 2);
  EXPECT_EQ(v.deg_phi, 3);
  EXPECT_EQ(v.lambda, make_rational(2, 3));
  BranchVerdict z = per_branch_lambda({h}, bs[0], 3);
  EXPECT_EQ(z.lambda, std::nullopt);
}

TEST(Proper, Examples) {
  EXPECT_EQ(is_proper(map({"x", "y"})), std::make_pair(true, ExtRational(Rational(1))));
  EXPECT_EQ(is_proper(map({"x", "x*y - 1"})), std::make_pair(false, ExtRational(Rational(-1))));
  EXPECT_EQ(is_proper(map({"x + y", "x - y"})), std::make_pair(true, ExtRational(Rational(1))));
}

TEST(Exponent, SeedInvariance) {
  for (auto f : {map({"y", "x - y^3"}), map({"x", "x*y - 1"}), map({"x^2 - y^3 + x", "y^2 - x"})}) {
    ExtRational e0 = lojasiewicz_exponent(f, 0).exponent;
    for (std::uint64_t s = 1; s <= 5; ++s) EXPECT_EQ(lojasiewicz_exponent(f, s).exponent, e0);
  }
}

TEST(Exponent, ScalingCovariance) {
  MappingSpec f = map({"x^2*y - 1", "y - x^2"});
  ExtRational e = lojasiewicz_exponent(f).exponent;
  RationalMatrix scale{{make_rational(3, 2), 0}, {0, make_rational(3, 2)}};
  MappingSpec g = f;
  for (auto& c : g.components) c = linear_change(c, scale);
  EXPECT_EQ(lojasiewicz_exponent(g).exponent, e);
}

TEST(Exponent, AttainmentAlongWitness) {
  auto r = lojasiewicz_exponent(map({"y", "x - y^3"}));
  double ratio = attainment_ratio(r, *r.witness, 1e4);
  EXPECT_NEAR(ratio, 1.0 / 3.0, 0.05);
  ASSERT_TRUE(r.genericize.comparability_constants);
  EXPECT_GE(r.genericize.comparability_constants->first, 1);
}
