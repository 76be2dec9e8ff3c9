#include "loja/poly/tower.hpp"

#include <algorithm>
#include <sstream>

#include "loja/poly/roots.hpp"

namespace loja {

namespace {

using Chunks = std::vector<Coords>;

bool all_zero(std::span<const Rational> a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& q) { return q == 0; });
}

Chunks split_chunks(std::span<const Rational> a, std::size_t count, std::size_t size) {
  Chunks out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i].assign(a.begin() + static_cast<std::ptrdiff_t>(i * size),
                  a.begin() + static_cast<std::ptrdiff_t>((i + 1) * size));
  return out;
}

Coords concat(const Chunks& chunks) {
  Coords out;
  for (const auto& c : chunks) out.insert(out.end(), c.begin(), c.end());
  return out;
}

void add_into(Coords& acc, const Coords& t) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += t[i];
}

void sub_into(Coords& acc, const Coords& t) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] -= t[i];
}

void trim(Chunks& p) {
  while (!p.empty() && all_zero(p.back())) p.pop_back();
}

}  // namespace

ZeroDivisor::ZeroDivisor(TowerPtr tower, std::size_t level, std::vector<Coords> factor)
    : std::runtime_error("zero divisor: minimal polynomial of level " + std::to_string(level) +
                         " splits"),
      tower_(std::move(tower)),
      level_(level),
      factor_(std::move(factor)) {}

TowerPtr FieldTower::rationals() {
  static const TowerPtr q(new FieldTower());
  return q;
}

std::size_t FieldTower::level_degree(std::size_t level) const {
  return levels_.at(level - 1)->minpoly.size() - 1;
}

std::size_t FieldTower::place_degree() const {
  std::size_t d = 1;
  for (const auto& l : levels_)
    if (l->kind == LevelKind::place) d *= l->minpoly.size() - 1;
  return d;
}

bool FieldTower::is_prefix_of(const FieldTower& other) const {
  if (depth() > other.depth()) return false;
  for (std::size_t i = 0; i < depth(); ++i)
    if (levels_[i] != other.levels_[i]) return false;
  return true;
}

TowerPtr FieldTower::prefix(std::size_t k) const {
  if (k == depth()) return shared_from_this();
  if (k == 0) return rationals();
  std::shared_ptr<FieldTower> t(new FieldTower());
  t->levels_.assign(levels_.begin(), levels_.begin() + static_cast<std::ptrdiff_t>(k));
  t->dims_.assign(dims_.begin(), dims_.begin() + static_cast<std::ptrdiff_t>(k + 1));
  return t;
}

Coords FieldTower::one() const { return from_rational(1); }

Coords FieldTower::from_rational(const Rational& q) const {
  Coords c = zero();
  c[0] = q;
  return c;
}

Coords FieldTower::generator(std::size_t level) const {
  if (level == 0 || level > depth()) throw std::out_of_range("tower level");
  Coords c = zero();
  c[dims_[level - 1]] = 1;
  return c;
}

bool FieldTower::is_zero(const Coords& a) const { return all_zero(a); }

Coords FieldTower::add(const Coords& a, const Coords& b) const {
  Coords r = a;
  add_into(r, b);
  return r;
}

Coords FieldTower::sub(const Coords& a, const Coords& b) const {
  Coords r = a;
  sub_into(r, b);
  return r;
}

Coords FieldTower::neg(const Coords& a) const {
  Coords r = a;
  for (auto& q : r) q = -q;
  return r;
}

Coords FieldTower::scale(const Coords& a, const Rational& q) const {
  Coords r = a;
  for (auto& x : r) x *= q;
  return r;
}

Coords FieldTower::mul(const Coords& a, const Coords& b) const { return mul_rec(depth(), a, b); }

Coords FieldTower::mul_at(std::size_t k, const Coords& a, const Coords& b) const {
  return mul_rec(k, a, b);
}

Coords FieldTower::mul_rec(std::size_t k, std::span<const Rational> a,
                           std::span<const Rational> b) const {
  if (k == 0) return {a[0] * b[0]};
  const std::size_t D = dims_[k - 1];
  const std::size_t d = dims_[k] / D;
  const auto& m = levels_[k - 1]->minpoly;

  Chunks prod(2 * d - 1, Coords(D, 0));
  std::vector<bool> bz(d);
  for (std::size_t j = 0; j < d; ++j) bz[j] = all_zero(b.subspan(j * D, D));
  for (std::size_t i = 0; i < d; ++i) {
    auto ai = a.subspan(i * D, D);
    if (all_zero(ai)) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (bz[j]) continue;
      add_into(prod[i + j], mul_rec(k - 1, ai, b.subspan(j * D, D)));
    }
  }
  // x^d = -(m_0 + ... + m_{d-1} x^{d-1})
  for (std::size_t i = 2 * d - 2; i >= d; --i) {
    if (all_zero(prod[i])) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (all_zero(m[j])) continue;
      sub_into(prod[i - d + j], mul_rec(k - 1, prod[i], m[j]));
    }
  }
  prod.resize(d);
  return concat(prod);
}

Coords FieldTower::inverse(const Coords& a) const { return inverse_rec(depth(), a); }

Coords FieldTower::inverse_at(std::size_t k, const Coords& a) const { return inverse_rec(k, a); }

Coords FieldTower::inverse_rec(std::size_t k, std::span<const Rational> a) const {
  if (all_zero(a)) throw std::domain_error("inverse of zero");
  if (k == 0) return {1 / a[0]};
  const std::size_t D = dims_[k - 1];
  const std::size_t d = dims_[k] / D;

  auto mul = [&](const Coords& x, const Coords& y) { return mul_rec(k - 1, x, y); };
  auto poly_mul = [&](const Chunks& x, const Chunks& y) {
    if (x.empty() || y.empty()) return Chunks{};
    Chunks r(x.size() + y.size() - 1, Coords(D, 0));
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (all_zero(x[i])) continue;
      for (std::size_t j = 0; j < y.size(); ++j)
        if (!all_zero(y[j])) add_into(r[i + j], mul(x[i], y[j]));
    }
    trim(r);
    return r;
  };
  auto poly_sub = [&](Chunks x, const Chunks& y) {
    if (x.size() < y.size()) x.resize(y.size(), Coords(D, 0));
    for (std::size_t i = 0; i < y.size(); ++i) sub_into(x[i], y[i]);
    trim(x);
    return x;
  };
  // quotient and remainder; inverting lc(y) may itself throw
  auto divmod = [&](Chunks x, const Chunks& y) {
    Coords inv_lc = inverse_rec(k - 1, y.back());
    Chunks q;
    if (x.size() >= y.size()) q.assign(x.size() - y.size() + 1, Coords(D, 0));
    while (!x.empty() && x.size() >= y.size()) {
      std::size_t shift = x.size() - y.size();
      Coords f = mul(x.back(), inv_lc);
      q[shift] = f;
      for (std::size_t j = 0; j < y.size(); ++j) sub_into(x[shift + j], mul(f, y[j]));
      x.pop_back();
      trim(x);
    }
    trim(q);
    return std::pair{q, x};
  };

  Chunks r0 = levels_[k - 1]->minpoly;
  Chunks r1 = split_chunks(a, d, D);
  trim(r1);
  Chunks s0, s1{Coords(dims_[k - 1], 0)};
  s1[0][0] = 1;
  while (true) {
    if (r1.size() == 1) {
      Coords cinv = inverse_rec(k - 1, r1[0]);
      Chunks out = s1;
      for (auto& c : out) c = mul(c, cinv);
      out.resize(d, Coords(D, 0));
      return concat(out);
    }
    auto [q, r] = divmod(r0, r1);
    Chunks s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) {
      // a shares the factor r0 with the minimal polynomial
      Coords inv_lc = inverse_rec(k - 1, r0.back());
      for (auto& c : r0) c = mul(c, inv_lc);
      throw ZeroDivisor(shared_from_this(), k, r0);
    }
  }
}

Coords FieldTower::lift(const Coords& a, const FieldTower& from) const {
  if (!from.is_prefix_of(*this)) throw std::invalid_argument("lift: tower is not an extension");
  Coords r = zero();
  std::copy(a.begin(), a.end(), r.begin());
  return r;
}

TowerPtr FieldTower::extend(std::string name, std::vector<Coords> minpoly, LevelKind kind) const {
  if (minpoly.size() < 3) throw std::invalid_argument("extension degree must be at least 2");
  for (const auto& c : minpoly)
    if (c.size() != degree()) throw std::invalid_argument("minimal polynomial coefficient size");
  Coords lead = minpoly.back();
  if (lead != one()) throw std::invalid_argument("minimal polynomial must be monic");

  auto coeffs_at = [&](mpfr_prec_t prec) {
    auto gens = generator_enclosures(prec);
    std::vector<ComplexBall> c;
    for (const auto& m : minpoly) c.push_back(enclose(m, gens));
    return c;
  };
  std::vector<ComplexBall> disks = isolate_roots(coeffs_at, kBasePrecision);
  auto best = std::min_element(disks.begin(), disks.end(), lex_less);
  // when real parts are not separated at base precision, redo the choice with
  // sharper disks
  bool ambiguous = false;
  for (auto it = disks.begin(); it != disks.end(); ++it)
    if (it != best && compare_real_parts(*it, *best) == 0) ambiguous = true;
  if (ambiguous) {
    std::vector<ComplexBall> sharp = isolate_roots(coeffs_at, 4 * kBasePrecision);
    auto sb = std::min_element(sharp.begin(), sharp.end(), lex_less);
    best = std::find_if(disks.begin(), disks.end(),
                        [&](const ComplexBall& d) { return d.contains(*sb); });
    if (best == disks.end()) best = std::min_element(disks.begin(), disks.end(), lex_less);
  }

  std::shared_ptr<FieldTower> t(new FieldTower(*this));
  const std::size_t d = minpoly.size() - 1;
  t->levels_.push_back(std::make_shared<const Level>(
      Level{std::move(name), std::move(minpoly), kind, *best}));
  t->dims_.push_back(dims_.back() * d);
  return t;
}

Coords FieldTower::project_rec(std::size_t k, std::span<const Rational> a, std::size_t level,
                               const std::vector<Coords>& factor) const {
  if (k < level) return Coords(a.begin(), a.end());
  const std::size_t D = dims_[k - 1];
  const std::size_t d = dims_[k] / D;
  Chunks chunks = split_chunks(a, d, D);
  if (k > level) {
    Coords out;
    for (const auto& c : chunks) {
      Coords p = project_rec(k - 1, c, level, factor);
      out.insert(out.end(), p.begin(), p.end());
    }
    return out;
  }
  // reduce modulo the monic factor
  const std::size_t e = factor.size() - 1;
  for (std::size_t i = d; i-- > e;) {
    if (all_zero(chunks[i])) continue;
    Coords c = chunks[i];
    for (std::size_t j = 0; j <= e; ++j) sub_into(chunks[i - e + j], mul_rec(k - 1, c, factor[j]));
  }
  chunks.resize(e);
  return concat(chunks);
}

Coords FieldTower::project(const Coords& a, std::size_t level,
                           const std::vector<Coords>& factor) const {
  return project_rec(depth(), a, level, factor);
}

std::vector<Coords> FieldTower::cofactor(std::size_t level,
                                         const std::vector<Coords>& factor) const {
  const std::size_t D = dims_[level - 1];
  Chunks x = levels_.at(level - 1)->minpoly;
  const std::size_t e = factor.size() - 1;
  Chunks q(x.size() - e, Coords(D, 0));
  while (x.size() > e) {
    std::size_t shift = x.size() - 1 - e;
    Coords f = x.back();
    q[shift] = f;
    for (std::size_t j = 0; j <= e; ++j) sub_into(x[shift + j], mul_rec(level - 1, f, factor[j]));
    x.pop_back();
  }
  if (!std::all_of(x.begin(), x.end(), [](const Coords& c) { return all_zero(c); }))
    throw std::logic_error("cofactor: factor does not divide the minimal polynomial");
  return q;
}

TowerPtr FieldTower::split(std::size_t level, const std::vector<Coords>& factor) const {
  if (level == 0 || level > depth()) throw std::out_of_range("split level");
  TowerPtr t = prefix(level - 1);
  const Level& target = *levels_[level - 1];
  if (factor.size() - 1 >= 2) t = t->extend(target.name, factor, target.kind);
  for (std::size_t l = level + 1; l <= depth(); ++l) {
    const Level& lv = *levels_[l - 1];
    std::vector<Coords> mp;
    for (const auto& c : lv.minpoly) mp.push_back(project_rec(l - 1, c, level, factor));
    t = t->extend(lv.name, std::move(mp), lv.kind);
  }
  return t;
}

std::vector<ComplexBall> FieldTower::generator_enclosures(mpfr_prec_t prec) const {
  std::vector<ComplexBall> gens;
  gens.reserve(depth());
  for (std::size_t l = 1; l <= depth(); ++l) {
    const Level& lv = *levels_[l - 1];
    if (prec <= kBasePrecision) {
      gens.push_back(lv.root);
      continue;
    }
    std::vector<ComplexBall> coeffs;
    for (const auto& c : lv.minpoly) coeffs.push_back(enclose_rec(l - 1, c, gens, prec));
    auto disk = newton_enclosure(coeffs, lv.root.mid(), prec);
    if (disk && lv.root.contains(*disk))
      gens.push_back(*disk);
    else
      gens.push_back(lv.root);
  }
  return gens;
}

ComplexBall FieldTower::enclose_rec(std::size_t k, std::span<const Rational> a,
                                    const std::vector<ComplexBall>& gens, mpfr_prec_t prec) const {
  if (k == 0) return ComplexBall::from_rational(a[0], prec);
  const std::size_t D = dims_[k - 1];
  const std::size_t d = dims_[k] / D;
  ComplexBall acc = enclose_rec(k - 1, a.subspan((d - 1) * D, D), gens, prec);
  for (std::size_t i = d - 1; i-- > 0;)
    acc = acc * gens[k - 1] + enclose_rec(k - 1, a.subspan(i * D, D), gens, prec);
  return acc;
}

ComplexBall FieldTower::enclose(const Coords& a, mpfr_prec_t prec) const {
  return enclose_rec(depth(), a, generator_enclosures(prec), prec);
}

ComplexBall FieldTower::enclose(const Coords& a, const std::vector<ComplexBall>& gens) const {
  mpfr_prec_t prec = gens.empty() ? kBasePrecision : gens.front().precision();
  std::size_t k = 0;
  while (k < depth() && dims_[k] != a.size()) ++k;
  if (dims_[k] != a.size()) throw std::invalid_argument("enclose: coordinate size");
  return enclose_rec(k, a, gens, prec);
}

std::string FieldTower::format(const Coords& a) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t idx = 0; idx < a.size(); ++idx) {
    if (a[idx] == 0) continue;
    std::string mono;
    std::size_t rem = idx;
    for (std::size_t l = 1; l <= depth(); ++l) {
      std::size_t d = level_degree(l);
      std::size_t e = rem % d;
      rem /= d;
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += levels_[l - 1]->name;
      if (e > 1) mono += "^" + std::to_string(e);
    }
    Rational c = a[idx];
    bool negative = c < 0;
    if (negative) c = -c;
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (mono.empty())
      out << c.get_str();
    else if (c == 1)
      out << mono;
    else
      out << c.get_str() << "*" << mono;
  }
  return first ? "0" : out.str();
}

AlgebraicNumber::AlgebraicNumber(TowerPtr tower, Coords coords)
    : tower_(std::move(tower)), c_(std::move(coords)) {
  if (c_.size() != tower_->degree()) throw std::invalid_argument("coordinate count");
}

AlgebraicNumber AlgebraicNumber::from_rational(TowerPtr tower, const Rational& q) {
  Coords c = tower->from_rational(q);
  return {std::move(tower), std::move(c)};
}

AlgebraicNumber AlgebraicNumber::generator(TowerPtr tower, std::size_t level) {
  Coords c = tower->generator(level);
  return {std::move(tower), std::move(c)};
}

bool AlgebraicNumber::is_zero() const { return tower_->is_zero(c_); }

std::optional<Rational> AlgebraicNumber::as_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_[0];
}

namespace {

// brings two operands into a common tower (the deeper one)
std::pair<AlgebraicNumber, AlgebraicNumber> unify(const AlgebraicNumber& a,
                                                  const AlgebraicNumber& b) {
  if (a.tower() == b.tower()) return {a, b};
  if (a.tower()->is_prefix_of(*b.tower())) return {a.lift(b.tower()), b};
  if (b.tower()->is_prefix_of(*a.tower())) return {a, b.lift(a.tower())};
  throw std::invalid_argument("algebraic numbers live in unrelated towers");
}

}  // namespace

AlgebraicNumber AlgebraicNumber::operator-() const { return {tower_, tower_->neg(c_)}; }

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  auto [x, y] = unify(a, b);
  return {x.tower_, x.tower_->add(x.c_, y.c_)};
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  auto [x, y] = unify(a, b);
  return {x.tower_, x.tower_->sub(x.c_, y.c_)};
}

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  auto [x, y] = unify(a, b);
  return {x.tower_, x.tower_->mul(x.c_, y.c_)};
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return a * b.inverse();
}

bool AlgebraicNumber::operator==(const AlgebraicNumber& o) const {
  auto [x, y] = unify(*this, o);
  return x.c_ == y.c_;
}

AlgebraicNumber AlgebraicNumber::inverse() const { return {tower_, tower_->inverse(c_)}; }

AlgebraicNumber AlgebraicNumber::lift(const TowerPtr& extended) const {
  return {extended, extended->lift(c_, *tower_)};
}

ComplexBall AlgebraicNumber::enclosure(mpfr_prec_t prec) const {
  return tower_->enclose(c_, prec);
}

ComplexBall AlgebraicNumber::enclosure_within(double max_radius) const {
  for (mpfr_prec_t prec = FieldTower::kBasePrecision;; prec *= 2) {
    ComplexBall b = enclosure(prec);
    if (b.radius() <= max_radius || prec >= 65536) return b;
  }
}

}  // namespace loja
