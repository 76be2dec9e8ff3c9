#include "loja/puiseux/branch.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "loja/poly/qpoly.hpp"
#include "loja/poly/roots.hpp"

namespace loja {

namespace {

// exact zero, or a proven unit; non-units throw ZeroDivisor
bool checked_nonzero(const FieldTower& t, const Coords& a) {
  if (t.is_zero(a)) return false;
  (void)t.inverse(a);
  return true;
}

void trim_rows(const FieldTower& t, TowerBiPoly& g) {
  for (auto& row : g)
    while (!row.empty() && t.is_zero(row.back())) row.pop_back();
  while (!g.empty() && g.back().empty()) g.pop_back();
}

Rational binomial(int n, int k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

struct Point {
  int j, i;
};

// lower convex hull vertices of points sorted by j
std::vector<Point> lower_hull(const std::vector<Point>& pts) {
  std::vector<Point> h;
  for (const auto& p : pts) {
    while (h.size() >= 2) {
      const Point& o = h[h.size() - 2];
      const Point& a = h.back();
      long cross = static_cast<long>(a.j - o.j) * (p.i - o.i) -
                   static_cast<long>(a.i - o.i) * (p.j - o.j);
      if (cross > 0) break;
      h.pop_back();
    }
    h.push_back(p);
  }
  return h;
}

struct EdgeData {
  Point from, to;
  int a, b;  // valuation a/b in lowest terms
};

std::vector<EdgeData> hull_edges(const std::vector<Point>& pts) {
  std::vector<Point> h = lower_hull(pts);
  std::vector<EdgeData> out;
  for (std::size_t k = 0; k + 1 < h.size(); ++k) {
    Rational mu(h[k].i - h[k + 1].i, h[k + 1].j - h[k].j);
    mu.canonicalize();
    out.push_back({h[k], h[k + 1], static_cast<int>(mu.get_num().get_si()),
                   static_cast<int>(mu.get_den().get_si())});
  }
  return out;
}

std::vector<Coords> edge_polynomial(const TowerBiPoly& g, const EdgeData& e, const FieldTower& t) {
  const int len = (e.to.j - e.from.j) / e.b;
  std::vector<Coords> phi;
  for (int k = 0; k <= len; ++k) {
    int j = e.from.j + k * e.b;
    int i = e.from.i - k * e.a;
    bool present = i >= 0 && static_cast<std::size_t>(i) < g[j].size();
    phi.push_back(present ? g[j][i] : t.zero());
  }
  return phi;
}

std::optional<std::vector<Rational>> rational_coefficients(const UniPolyExt& p) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    auto q = p.coeff(i).as_rational();
    if (!q) return std::nullopt;
    out.push_back(*q);
  }
  return out;
}

// rational roots of a squarefree rational polynomial (ascending) and the
// remaining cofactor
std::pair<std::vector<Rational>, QPoly> peel_rational_roots(QPoly p) {
  std::vector<Rational> roots;
  std::vector<std::complex<double>> c;
  for (const auto& q : p.coeffs()) c.emplace_back(q.get_d(), 0.0);
  BigInt lead_den = 1;
  for (const auto& q : p.coeffs()) lead_den = lcm(lead_den, BigInt(q.get_den()));
  Rational lead_q = p.leading() * Rational(lead_den);
  BigInt lead = lead_q.get_num();
  lead = abs(lead);
  for (const auto& z : polynomial_roots(c)) {
    if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z.real())) || !std::isfinite(z.real())) continue;
    // continued fraction convergents with denominators dividing the leading
    // coefficient of the primitive integer polynomial
    double x = z.real();
    BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double rem = x;
    for (int step = 0; step < 40; ++step) {
      double fl = std::floor(rem);
      if (std::abs(fl) > 1e15) break;
      BigInt a(static_cast<long>(fl));
      BigInt h2 = a * h1 + h0, k2 = a * k1 + k0;
      h0 = h1, h1 = h2, k0 = k1, k1 = k2;
      if (cmp(k1, lead) > 0) break;
      if (lead % k1 == 0) {
        Rational cand(h1, k1);
        cand.canonicalize();
        if (p.evaluate(cand) == 0) {
          if (std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
          break;
        }
      }
      double frac = rem - fl;
      if (frac < 1e-12) break;
      rem = 1.0 / frac;
    }
  }
  std::sort(roots.begin(), roots.end());
  for (const auto& r : roots) p = divmod(p, QPoly({-r, 1})).first;
  return {roots, p};
}

// exact real b-th root of a rational, if one exists
std::optional<Rational> rational_root(const Rational& z, int b) {
  if (z < 0 && b % 2 == 0) return std::nullopt;
  BigInt num = abs(BigInt(z.get_num())), den = BigInt(z.get_den());
  BigInt rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(b))) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(b))) return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  return z < 0 ? -r : r;
}

std::string level_name(const FieldTower& t) { return "a" + std::to_string(t.depth() + 1); }

struct Node {
  TowerPtr tower;
  TowerBiPoly g;
  std::vector<std::pair<int, Coords>> prefix;  // (T-exponent, coefficient), ascending
  int offset = 0;
  int p = 1;
  bool root = false;
};

}  // namespace

class BranchBuilder {
 public:
  explicit BranchBuilder(std::shared_ptr<const MultiPoly> source) : source_(std::move(source)) {}

  // runs a node; zero divisors in the node's own tower split it and rerun
  std::vector<Branch> expand(Node start) {
    std::vector<Branch> out;
    std::deque<Node> work{std::move(start)};
    while (!work.empty()) {
      Node n = std::move(work.front());
      work.pop_front();
      try {
        auto got = run(n);
        out.insert(out.end(), got.begin(), got.end());
      } catch (const ZeroDivisor& z) {
        if (z.level() > n.tower->depth()) throw;
        std::vector<std::vector<Coords>> factors{z.factor()};
        if (n.tower->level(z.level()).kind == LevelKind::place)
          factors.push_back(n.tower->cofactor(z.level(), z.factor()));
        for (auto it = factors.rbegin(); it != factors.rend(); ++it)
          work.push_front(project(n, z.level(), *it));
      }
    }
    return out;
  }

  static Branch make(const Node& n, std::shared_ptr<const MultiPoly> source,
                     std::shared_ptr<const BranchTail> tail) {
    Branch b;
    b.tower_ = n.tower;
    b.p_ = n.p;
    b.source_ = std::move(source);
    if (!n.prefix.empty()) {
      b.low_ = n.prefix.front().first;
      b.dense_.assign(static_cast<std::size_t>(n.offset - b.low_ + 1), n.tower->zero());
      for (const auto& [e, c] : n.prefix) b.dense_[static_cast<std::size_t>(e - b.low_)] = c;
    } else {
      b.low_ = n.offset;
    }
    if (tail) {
      std::size_t d = tail->g.size() - 1;
      b.upow_.assign(d + 1, {n.tower->zero()});
      b.upow_[0][0] = n.tower->one();
      b.tail_ = std::move(tail);
    }
    return b;
  }

  // appends T-coefficients until high_T() >= high
  static void advance(Branch& b, int high) {
    const FieldTower& t = *b.tower_;
    if (!b.tail_) {
      while (b.high_T() < high) b.dense_.push_back(t.zero());
      return;
    }
    const BranchTail& tail = *b.tail_;
    const std::size_t d = tail.g.size() - 1;
    auto& up = b.upow_;
    while (b.high_T() < high) {
      const std::size_t k = up[1].size();  // next coefficient index
      up[0].push_back(t.zero());
      for (std::size_t j = 2; j <= d; ++j) {
        Coords s = t.zero();
        for (std::size_t l = 1; l < k; ++l) {
          if (t.is_zero(up[1][l]) || t.is_zero(up[j - 1][k - l])) continue;
          s = t.add(s, t.mul(up[1][l], up[j - 1][k - l]));
        }
        up[j].push_back(std::move(s));
      }
      Coords r = t.zero();
      for (std::size_t j = 0; j <= d; ++j) {
        const auto& row = tail.g[j];
        for (std::size_t i = 0; i <= k && i < row.size(); ++i) {
          if (j == 1 && i == 0) continue;
          if (t.is_zero(row[i]) || t.is_zero(up[j][k - i])) continue;
          r = t.add(r, t.mul(row[i], up[j][k - i]));
        }
      }
      Coords w = t.neg(t.mul(tail.g01_inverse, r));
      up[1].push_back(w);
      b.dense_.push_back(std::move(w));
    }
  }

  static Branch split(const Branch& b, std::size_t level, const std::vector<Coords>& factor) {
    Branch r = b;
    r.tower_ = b.tower_->split(level, factor);
    auto proj = [&](const Coords& c) { return b.tower_->project(c, level, factor); };
    for (auto& c : r.dense_) c = proj(c);
    for (auto& row : r.upow_)
      for (auto& c : row) c = proj(c);
    if (b.tail_) {
      auto tail = std::make_shared<BranchTail>(*b.tail_);
      for (auto& row : tail->g)
        for (auto& c : row) c = proj(c);
      tail->g01_inverse = proj(tail->g01_inverse);
      r.tail_ = std::move(tail);
    }
    return r;
  }

 private:
  static Node project(const Node& n, std::size_t level, const std::vector<Coords>& factor) {
    Node r = n;
    r.tower = n.tower->split(level, factor);
    for (auto& row : r.g)
      for (auto& c : row) c = n.tower->project(c, level, factor);
    for (auto& pc : r.prefix) pc.second = n.tower->project(pc.second, level, factor);
    trim_rows(*r.tower, r.g);
    return r;
  }

  std::vector<Branch> run(const Node& n) {
    const FieldTower& t = *n.tower;
    const int d = static_cast<int>(n.g.size()) - 1;
    std::vector<int> ord(static_cast<std::size_t>(d + 1), -1);
    for (int j = 0; j <= d; ++j)
      for (std::size_t i = 0; i < n.g[j].size(); ++i)
        if (checked_nonzero(t, n.g[j][i])) {
          ord[j] = static_cast<int>(i);
          break;
        }

    std::vector<Branch> out;
    int jlo = 0, jhi = d;
    if (n.root) {
      while (jlo <= d && ord[jlo] < 0) ++jlo;
      if (jlo > 0) out.push_back(make(n, source_, nullptr));
    } else {
      int r = 0;
      while (r <= d && ord[r] != 0) ++r;
      if (r > d || r == 0) throw std::logic_error("Newton-Puiseux node without a small root");
      if (ord[0] < 0) {
        // U = 0 is an exact root
        out.push_back(make(n, source_, nullptr));
        if (r == 1) return out;
        jlo = 1;
        while (ord[jlo] < 0) ++jlo;
      } else if (r == 1) {
        auto tail = std::make_shared<BranchTail>(
            BranchTail{n.g, t.inverse(n.g[1][0]), n.offset});
        out.push_back(make(n, source_, std::move(tail)));
        return out;
      }
      jhi = r;
    }

    std::vector<Point> pts;
    for (int j = jlo; j <= jhi; ++j)
      if (ord[j] >= 0) pts.push_back({j, ord[j]});
    for (const auto& e : hull_edges(pts)) {
      auto got = descend(n, e);
      out.insert(out.end(), got.begin(), got.end());
    }
    return out;
  }

  std::vector<Branch> descend(const Node& n, const EdgeData& e) {
    UniPolyExt phi(n.tower, edge_polynomial(n.g, e, *n.tower));
    UniPolyExt sf = squarefree_part(phi);

    // candidate values of zeta = c^b, each with the tower it lives in
    std::vector<std::pair<TowerPtr, Coords>> zetas;
    auto adjoin = [&](const UniPolyExt& m) {
      if (m.degree() == 1) {
        Coords z = n.tower->neg(n.tower->mul(m.coords()[0], n.tower->inverse(m.coords()[1])));
        zetas.emplace_back(n.tower, std::move(z));
      } else {
        TowerPtr ext = n.tower->extend(level_name(*n.tower), m.monic().coords(), LevelKind::place);
        zetas.emplace_back(ext, ext->generator(ext->depth()));
      }
    };
    if (auto rc = rational_coefficients(sf)) {
      auto [roots, rest] = peel_rational_roots(QPoly(*rc));
      for (const auto& r : roots) zetas.emplace_back(n.tower, n.tower->from_rational(r));
      if (rest.degree().value_or(0) >= 1) adjoin(UniPolyExt::from_rationals(n.tower, rest.coeffs()));
    } else {
      adjoin(sf);
    }

    std::vector<Branch> out;
    for (auto& [tz, zeta] : zetas) {
      TowerPtr tc = tz;
      Coords c = zeta;
      if (e.b > 1) {
        std::optional<Rational> rr;
        if (auto zq = AlgebraicNumber(tz, zeta).as_rational()) rr = rational_root(*zq, e.b);
        if (rr) {
          c = tz->from_rational(*rr);
        } else {
          std::vector<Coords> m(static_cast<std::size_t>(e.b + 1), tz->zero());
          m[0] = tz->neg(zeta);
          m.back() = tz->one();
          tc = tz->extend(level_name(*tz), std::move(m), LevelKind::ramification);
          c = tc->generator(tc->depth());
        }
      }
      auto got = expand(child(n, e, tc, c));
      out.insert(out.end(), got.begin(), got.end());
    }
    return out;
  }

  // G1(T1, U1) = G(T1^b, T1^a (c + U1)) / T1^m
  static Node child(const Node& n, const EdgeData& e, const TowerPtr& tc, const Coords& c) {
    const FieldTower& t = *tc;
    const int d = static_cast<int>(n.g.size()) - 1;
    const int m = e.b * e.from.i + e.a * e.from.j;
    std::vector<Coords> cpow{t.one()};
    for (int k = 1; k <= d; ++k) cpow.push_back(t.mul(cpow.back(), c));

    TowerBiPoly g(static_cast<std::size_t>(d + 1));
    for (int j = 0; j <= d; ++j) {
      for (std::size_t i = 0; i < n.g[j].size(); ++i) {
        if (n.tower->is_zero(n.g[j][i])) continue;
        int ex = e.b * static_cast<int>(i) + e.a * j - m;
        if (ex < 0) throw std::logic_error("support below the Newton polygon");
        Coords coef = t.lift(n.g[j][i], *n.tower);
        for (int l = 0; l <= j; ++l) {
          auto& row = g[l];
          if (row.size() <= static_cast<std::size_t>(ex)) row.resize(ex + 1, t.zero());
          Coords term = t.scale(t.mul(coef, cpow[j - l]), binomial(j, l));
          row[ex] = t.add(row[ex], term);
        }
      }
    }
    trim_rows(t, g);

    Node r;
    r.tower = tc;
    r.g = std::move(g);
    for (const auto& [ex, co] : n.prefix) r.prefix.emplace_back(ex * e.b, t.lift(co, *n.tower));
    r.offset = e.b * n.offset + e.a;
    r.prefix.emplace_back(r.offset, c);
    r.p = n.p * e.b;
    return r;
  }

  std::shared_ptr<const MultiPoly> source_;
};

namespace {

Node root_node(const MultiPoly& h) {
  const int dx = h.degree_in(0).value_or(0);
  const int dy = h.degree_in(1).value_or(0);
  TowerPtr q = FieldTower::rationals();
  TowerBiPoly g(static_cast<std::size_t>(dy + 1));
  for (const auto& [ex, c] : h.terms()) {
    auto& row = g[ex[1]];
    std::size_t i = static_cast<std::size_t>(dx) - ex[0];
    if (row.size() <= i) row.resize(i + 1, q->zero());
    row[i] = q->from_rational(c);
  }
  trim_rows(*q, g);
  Node n;
  n.tower = q;
  n.g = std::move(g);
  n.root = true;
  return n;
}

}  // namespace

NewtonPolygonInf newton_polygon_inf(const MultiPoly& h) {
  if (h.nvars() != 2 || h.is_zero()) throw std::invalid_argument("newton_polygon_inf: bad input");
  Node n = root_node(h);
  NewtonPolygonInf out;
  std::vector<Point> pts;
  for (std::size_t j = 0; j < n.g.size(); ++j)
    for (std::size_t i = 0; i < n.g[j].size(); ++i)
      if (!n.tower->is_zero(n.g[j][i])) {
        out.support.emplace_back(static_cast<int>(j), static_cast<int>(i));
        if (pts.empty() || pts.back().j != static_cast<int>(j))
          pts.push_back({static_cast<int>(j), static_cast<int>(i)});
      }
  for (const auto& e : hull_edges(pts)) {
    Rational mu(e.a, e.b);
    out.edges.push_back({mu, UniPolyExt(n.tower, edge_polynomial(n.g, e, *n.tower))});
  }
  return out;
}

std::vector<Branch> expand_branches(const MultiPoly& h) {
  if (h.nvars() != 2) throw std::invalid_argument("expand_branches expects 2 variables");
  if (h.is_zero()) throw std::invalid_argument("expand_branches: zero polynomial");
  if (h.degree_in(1).value_or(0) == 0) return {};
  auto source = std::make_shared<const MultiPoly>(h);
  BranchBuilder builder(source);
  return builder.expand(root_node(h));
}

std::vector<SeriesTerm> Branch::series() const {
  std::vector<SeriesTerm> out;
  for (std::size_t k = 0; k < dense_.size(); ++k)
    if (!tower_->is_zero(dense_[k]))
      out.push_back({-(low_ + static_cast<int>(k)), AlgebraicNumber(tower_, dense_[k])});
  return out;
}

Coords Branch::coefficient(int e) const {
  int k = -e - low_;
  if (k < 0 || k >= static_cast<int>(dense_.size())) return tower_->zero();
  return dense_[static_cast<std::size_t>(k)];
}

Degree Branch::leading_exponent() const {
  for (std::size_t k = 0; k < dense_.size(); ++k)
    if (!tower_->is_zero(dense_[k])) return -(low_ + static_cast<int>(k));
  return std::nullopt;
}

std::pair<std::complex<double>, std::complex<double>> Branch::evaluate(std::complex<double> t) const {
  auto gens = tower_->generator_enclosures(FieldTower::kBasePrecision);
  std::complex<double> y = 0.0;
  std::complex<double> inv = 1.0 / t;
  for (std::size_t k = dense_.size(); k-- > 0;) {
    if (tower_->is_zero(dense_[k])) continue;
    int ex = low_ + static_cast<int>(k);
    y += tower_->enclose(dense_[k], gens).center() * std::pow(inv, ex);
  }
  return {std::pow(t, p_), y};
}

std::string Branch::to_string() const {
  std::ostringstream out;
  out << "x = t";
  if (p_ != 1) out << "^" << p_;
  out << ", y = ";
  bool first = true;
  for (const auto& term : series()) {
    std::string c = term.coeff.to_string();
    bool negative = c[0] == '-';
    bool simple = c.find_first_of("+- ", 1) == std::string::npos;
    if (negative && simple) c.erase(0, 1);
    if (!first) out << (negative && simple ? " - " : " + ");
    else if (negative && simple) out << "-";
    first = false;
    if (!simple) c = "(" + c + ")";
    std::string power = term.exponent == 1 ? "t" : "t^" + std::to_string(term.exponent);
    if (term.exponent == 0) out << c;
    else if (c == "1") out << power;
    else out << c << "*" << power;
  }
  if (first) out << "0";
  if (!exact()) out << " + O(t^" << truncation_exponent() << ")";
  return out.str();
}

Branch extend_branch(const Branch& b, int target_exponent) {
  Branch r = b;
  BranchBuilder::advance(r, -target_exponent + 1);
  return r;
}

int deg_phi(const Branch& b) {
  Degree e = b.leading_exponent();
  return std::max(b.ramification(), e.value_or(b.ramification()));
}

ComposedSeries compose_series(const MultiPoly& g, const Branch& b, int count, Branch* extended) {
  if (g.nvars() != 2) throw std::invalid_argument("compose_series expects 2 variables");
  const FieldTower& t = *b.tower();
  const int n = g.total_degree().value_or(0);
  const int dphi = deg_phi(b);
  const int p = b.ramification();
  ComposedSeries out{n * dphi, std::vector<Coords>(static_cast<std::size_t>(std::max(count, 0)), t.zero())};
  if (count <= 0 || g.is_zero()) return out;

  // ytil = T^dphi * y is a power series, exact modulo T^(dphi + high_T)
  Branch work = b;
  BranchBuilder::advance(work, count - dphi);
  std::vector<Coords> ytil(static_cast<std::size_t>(count), t.zero());
  for (int k = 0; k < count; ++k) {
    int ex = k - dphi;
    if (ex >= work.low_T() && ex < work.high_T()) ytil[k] = work.dense()[ex - work.low_T()];
  }
  auto mul = [&](const std::vector<Coords>& a, const std::vector<Coords>& c) {
    std::vector<Coords> r(static_cast<std::size_t>(count), t.zero());
    for (int i = 0; i < count; ++i) {
      if (t.is_zero(a[i])) continue;
      for (int j = 0; i + j < count; ++j)
        if (!t.is_zero(c[j])) r[i + j] = t.add(r[i + j], t.mul(a[i], c[j]));
    }
    return r;
  };
  std::vector<std::vector<Coords>> ypow{std::vector<Coords>(static_cast<std::size_t>(count), t.zero())};
  ypow[0][0] = t.one();
  const int dy = g.degree_in(1).value_or(0);
  for (int j = 1; j <= dy; ++j) ypow.push_back(mul(ypow.back(), ytil));

  for (const auto& [ex, a] : g.terms()) {
    const int i = static_cast<int>(ex[0]), j = static_cast<int>(ex[1]);
    const int shift = dphi * (n - i - j) + (dphi - p) * i;
    for (int k = 0; k + shift < count; ++k)
      if (!t.is_zero(ypow[j][k]))
        out.coeffs[k + shift] = t.add(out.coeffs[k + shift], t.scale(ypow[j][k], a));
  }
  if (extended) *extended = std::move(work);
  return out;
}

Degree compose_deg(const MultiPoly& g, const Branch& b, int ambient_deg, Branch* extended) {
  if (g.is_zero()) return std::nullopt;
  const int n = g.total_degree().value_or(0);
  if (n == 0) return 0;
  // a nonzero composition has degree >= n (deg Phi - ambient); coefficients
  // are checked one exponent deeper than that bound
  const int needed = n * ambient_deg + 2;
  Branch cur = b;
  for (int count = std::min(needed, 8);; count = std::min(needed, 2 * count)) {
    ComposedSeries s = compose_series(g, cur, count, &cur);
    for (int k = 0; k < count; ++k)
      if (checked_nonzero(*cur.tower(), s.coeffs[k])) {
        if (extended) *extended = std::move(cur);
        return s.top - k;
      }
    if (count >= needed) break;
  }
  if (extended) *extended = std::move(cur);
  return std::nullopt;
}

Branch split_branch(const Branch& b, std::size_t level, const std::vector<Coords>& factor) {
  return BranchBuilder::split(b, level, factor);
}

std::vector<Branch> split_branch(const Branch& b, const ZeroDivisor& z) {
  std::vector<Branch> out{split_branch(b, z.level(), z.factor())};
  if (b.tower()->level(z.level()).kind == LevelKind::place)
    out.push_back(split_branch(b, z.level(), b.tower()->cofactor(z.level(), z.factor())));
  return out;
}

}  // namespace loja
