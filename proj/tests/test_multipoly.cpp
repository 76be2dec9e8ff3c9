#include <gtest/gtest.h>

#include <random>

#include "loja/poly/multipoly.hpp"
#include "loja/poly/parse.hpp"

using namespace loja;

namespace {

const std::vector<std::string> kXY{"x", "y"};

MultiPoly P(const std::string& s) { return parse_poly(s, kXY); }

MultiPoly random_poly(std::mt19937_64& rng, int max_deg, int terms) {
  std::uniform_int_distribution<int> e(0, max_deg), c(-5, 5);
  MultiPoly p(kXY);
  for (int i = 0; i < terms; ++i) {
    std::uint32_t a = e(rng), b = e(rng);
    if (a + b > static_cast<std::uint32_t>(max_deg)) continue;
    p.add_term({a, b}, c(rng));
  }
  return p;
}

}  // namespace

TEST(Parse, BasicExpression) {
  MultiPoly p = P("x^2*y + 3/2*y^2 - 1");
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.total_degree(), 3);
  EXPECT_EQ(p.coefficient({0, 2}), make_rational(3, 2));
  EXPECT_EQ(p.to_string(), "x^2*y + 3/2*y^2 - 1");
}

TEST(Parse, ZeroAndExpansion) {
  EXPECT_TRUE(P("0").is_zero());
  EXPECT_EQ(P("x*(x*y - 1)"), P("x^2*y - x"));
  EXPECT_EQ(P("(x+y)^3 - (x+y)*(x+y)^2").to_string(), "0");
  EXPECT_EQ(P("\xe2\x88\x92x"), -P("x"));
}

TEST(Parse, Errors) {
  auto kind = [](const std::string& s) {
    try {
      parse_poly(s, kXY);
    } catch (const ParseError& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  EXPECT_EQ(kind("x y"), static_cast<int>(ParseError::Kind::syntax));
  EXPECT_EQ(kind("2x"), static_cast<int>(ParseError::Kind::syntax));
  EXPECT_EQ(kind("x + z"), static_cast<int>(ParseError::Kind::unknown_variable));
  EXPECT_EQ(kind("1.5*x"), static_cast<int>(ParseError::Kind::non_rational_literal));
  EXPECT_EQ(kind("x^-1"), static_cast<int>(ParseError::Kind::syntax));
  EXPECT_EQ(kind("(x"), static_cast<int>(ParseError::Kind::syntax));
  try {
    parse_poly("x + w", kXY);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.token(), "w");
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Parse, RoundTripRandom) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    MultiPoly p = random_poly(rng, 6, 8) * make_rational(1, 1 + i % 5);
    EXPECT_EQ(P(p.to_string()), p) << p.to_string();
  }
}

TEST(Ring, Identities) {
  EXPECT_EQ(P("(x+y)*(x-y)"), P("x^2 - y^2"));
  MultiPoly p = P("3*x^2*y - 7/3*x + 2");
  EXPECT_TRUE((p + (-p)).is_zero());
  EXPECT_EQ(P("x*y - 1") * P("x"), P("x^2*y - x"));
}

TEST(Ring, AxiomsRandom) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    MultiPoly a = random_poly(rng, 4, 5), b = random_poly(rng, 4, 5), c = random_poly(rng, 4, 5);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Ring, VariableMismatch) {
  MultiPoly a = P("x");
  MultiPoly b = parse_poly("u", {"u", "v"});
  EXPECT_THROW(a + b, std::invalid_argument);
  EXPECT_THROW(a * b, std::invalid_argument);
}

TEST(Degrees, Examples) {
  Degrees d = P("x^2*y + y^2").degrees();
  EXPECT_EQ(d.total, 3);
  EXPECT_EQ(d.per_variable[0], 2);
  EXPECT_EQ(d.per_variable[1], 2);
  Degrees z = P("0").degrees();
  EXPECT_FALSE(z.total.has_value());
  EXPECT_FALSE(z.per_variable[0].has_value());
  EXPECT_FALSE(z.per_variable[1].has_value());
  Degrees w = P("x^2*y - x").degrees();
  EXPECT_EQ(w.total, 3);
  EXPECT_EQ(w.per_variable[0], 2);
  EXPECT_EQ(w.per_variable[1], 1);
}

TEST(LinearChange, Examples) {
  EXPECT_EQ(linear_change(P("x"), identity_matrix(2)), P("x"));
  RationalMatrix m{{1, 1}, {0, 1}};
  EXPECT_EQ(linear_change(P("x"), m), P("x + y"));
  RationalMatrix singular{{1, 2}, {2, 4}};
  EXPECT_THROW(linear_change(P("x"), singular), std::invalid_argument);
}

TEST(LinearChange, PreservesDegreeRandom) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(-3, 3);
  int checked = 0;
  while (checked < 100) {
    RationalMatrix m{{e(rng), e(rng)}, {e(rng), e(rng)}};
    if (determinant(m) == 0) continue;
    MultiPoly p = random_poly(rng, 5, 6);
    MultiPoly q = linear_change(p, m);
    EXPECT_EQ(q.total_degree(), p.total_degree());
    // inverse change recovers p
    EXPECT_EQ(linear_change(q, inverse(m)), p);
    ++checked;
  }
}

TEST(Division, Exact) {
  MultiPoly a = P("x^2 - y^2"), b = P("x - y");
  auto q = divide_exact(a, b);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, P("x + y"));
  EXPECT_FALSE(divide_exact(P("x^2 + 1"), P("x - y")));
}
