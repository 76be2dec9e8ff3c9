#include "loja/poly/unipoly_ext.hpp"

#include <sstream>
#include <stdexcept>

namespace loja {

UniPolyExt::UniPolyExt(TowerPtr tower) : tower_(std::move(tower)) {}

UniPolyExt::UniPolyExt(TowerPtr tower, std::vector<Coords> coeffs)
    : tower_(std::move(tower)), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.size() != tower_->degree()) throw std::invalid_argument("coefficient size");
  trim();
}

UniPolyExt::UniPolyExt(TowerPtr tower, const std::vector<AlgebraicNumber>& coeffs)
    : tower_(std::move(tower)) {
  for (const auto& a : coeffs) c_.push_back(a.tower() == tower_ ? a.coords() : a.lift(tower_).coords());
  trim();
}

UniPolyExt UniPolyExt::from_rationals(TowerPtr tower, const std::vector<Rational>& coeffs) {
  std::vector<Coords> c;
  for (const auto& q : coeffs) c.push_back(tower->from_rational(q));
  return {std::move(tower), std::move(c)};
}

void UniPolyExt::trim() {
  while (!c_.empty() && tower_->is_zero(c_.back())) c_.pop_back();
}

AlgebraicNumber UniPolyExt::coeff(std::size_t i) const {
  return {tower_, i < c_.size() ? c_[i] : tower_->zero()};
}

std::vector<AlgebraicNumber> UniPolyExt::coefficients() const {
  std::vector<AlgebraicNumber> out;
  for (std::size_t i = c_.size(); i-- > 0;) out.emplace_back(tower_, c_[i]);
  return out;
}

Degree UniPolyExt::degree() const {
  if (c_.empty()) return std::nullopt;
  return static_cast<int>(c_.size()) - 1;
}

UniPolyExt UniPolyExt::operator-() const {
  UniPolyExt r = *this;
  for (auto& c : r.c_) c = tower_->neg(c);
  return r;
}

namespace {

void check_same(const UniPolyExt& a, const UniPolyExt& b) {
  if (a.tower() != b.tower() && !(a.tower()->is_prefix_of(*b.tower()) &&
                                  b.tower()->is_prefix_of(*a.tower())))
    throw std::invalid_argument("polynomials over different towers");
}

}  // namespace

UniPolyExt operator+(const UniPolyExt& a, const UniPolyExt& b) {
  check_same(a, b);
  UniPolyExt r = a.c_.size() >= b.c_.size() ? a : b;
  const UniPolyExt& s = a.c_.size() >= b.c_.size() ? b : a;
  for (std::size_t i = 0; i < s.c_.size(); ++i) r.c_[i] = r.tower_->add(r.c_[i], s.c_[i]);
  r.trim();
  return r;
}

UniPolyExt operator-(const UniPolyExt& a, const UniPolyExt& b) { return a + (-b); }

UniPolyExt operator*(const UniPolyExt& a, const UniPolyExt& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return UniPolyExt(a.tower_);
  const auto& t = *a.tower_;
  std::vector<Coords> r(a.c_.size() + b.c_.size() - 1, t.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (t.is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!t.is_zero(b.c_[j])) r[i + j] = t.add(r[i + j], t.mul(a.c_[i], b.c_[j]));
  }
  return {a.tower_, std::move(r)};
}

bool UniPolyExt::operator==(const UniPolyExt& o) const {
  check_same(*this, o);
  return c_ == o.c_;
}

UniPolyExt UniPolyExt::derivative() const {
  std::vector<Coords> r;
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.push_back(tower_->scale(c_[i], Rational(static_cast<unsigned long>(i))));
  return {tower_, std::move(r)};
}

UniPolyExt UniPolyExt::monic() const {
  if (is_zero()) return *this;
  Coords inv = tower_->inverse(c_.back());
  UniPolyExt r = *this;
  for (auto& c : r.c_) c = tower_->mul(c, inv);
  return r;
}

AlgebraicNumber UniPolyExt::evaluate(const AlgebraicNumber& z) const {
  AlgebraicNumber zz = z.tower() == tower_ ? z : z.lift(tower_);
  Coords acc = tower_->zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = tower_->add(tower_->mul(acc, zz.coords()), c_[i]);
  return {tower_, acc};
}

UniPolyExt UniPolyExt::lift(const TowerPtr& extended) const {
  std::vector<Coords> r;
  for (const auto& c : c_) r.push_back(extended->lift(c, *tower_));
  return {extended, std::move(r)};
}

std::string UniPolyExt::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (tower_->is_zero(c_[i])) continue;
    if (!first) out << " + ";
    first = false;
    std::string c = tower_->format(c_[i]);
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != "1") out << "(" << c << ")*";
    out << var;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

std::pair<UniPolyExt, UniPolyExt> divmod(const UniPolyExt& a, const UniPolyExt& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& t = *a.tower();
  Coords inv = t.inverse(b.coords().back());
  std::vector<Coords> r = a.coords();
  const auto& bc = b.coords();
  std::vector<Coords> q;
  if (r.size() >= bc.size()) q.assign(r.size() - bc.size() + 1, t.zero());
  while (!r.empty() && r.size() >= bc.size()) {
    std::size_t shift = r.size() - bc.size();
    Coords f = t.mul(r.back(), inv);
    q[shift] = f;
    for (std::size_t j = 0; j < bc.size(); ++j) r[shift + j] = t.sub(r[shift + j], t.mul(f, bc[j]));
    r.pop_back();
    while (!r.empty() && t.is_zero(r.back())) r.pop_back();
  }
  return {UniPolyExt(a.tower(), std::move(q)), UniPolyExt(a.tower(), std::move(r))};
}

UniPolyExt gcd(const UniPolyExt& a, const UniPolyExt& b) {
  UniPolyExt x = a, y = b;
  while (!y.is_zero()) {
    UniPolyExt r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPolyExt squarefree_part(const UniPolyExt& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of zero");
  UniPolyExt g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

Extension tower_extend(const UniPolyExt& minpoly, std::string name, LevelKind kind) {
  Degree d = minpoly.degree();
  if (!d || *d < 1) throw std::invalid_argument("extension by a constant polynomial");
  const TowerPtr& t = minpoly.tower();
  if (*d == 1) {
    Coords root = t->neg(t->mul(minpoly.coords()[0], t->inverse(minpoly.coords()[1])));
    return {t, AlgebraicNumber(t, std::move(root))};
  }
  if (gcd(minpoly, minpoly.derivative()).degree() != 0)
    throw std::invalid_argument("minimal polynomial is not squarefree");
  UniPolyExt m = minpoly.monic();
  TowerPtr ext = t->extend(std::move(name), m.coords(), kind);
  return {ext, AlgebraicNumber::generator(ext, ext->depth())};
}

}  // namespace loja
