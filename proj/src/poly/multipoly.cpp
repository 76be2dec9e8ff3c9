#include "loja/poly/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace loja {

namespace {

std::uint64_t total_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

}  // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  auto ta = total_of(a), tb = total_of(b);
  if (ta != tb) return ta > tb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.nvars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::size_t index) {
  MultiPoly p(std::move(variables));
  if (index >= p.nvars()) throw std::out_of_range("variable index");
  Exponents e(p.nvars(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Exponents exps,
                              const Rational& c) {
  MultiPoly p(std::move(variables));
  if (exps.size() != p.nvars()) throw std::invalid_argument("exponent vector length");
  p.add_term(exps, c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_of(terms_.begin()->first) == 0;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Degrees MultiPoly::degrees() const {
  Degrees d{std::nullopt, std::vector<Degree>(nvars(), std::nullopt)};
  for (const auto& [e, c] : terms_) {
    d.total = std::max(d.total, Degree(static_cast<int>(total_of(e))));
    for (std::size_t i = 0; i < e.size(); ++i)
      d.per_variable[i] = std::max(d.per_variable[i], Degree(static_cast<int>(e[i])));
  }
  return d;
}

Degree MultiPoly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return static_cast<int>(total_of(terms_.begin()->first));
}

Degree MultiPoly::degree_in(std::size_t var) const {
  Degree d;
  for (const auto& [e, c] : terms_) d = std::max(d, Degree(static_cast<int>(e[var])));
  return d;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("variable list mismatch");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.vars_);
  Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(vars_, 1);
  MultiPoly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * e[var]);
  }
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / terms_.begin()->second;
  return *this * inv;
}

MultiPoly MultiPoly::homogeneous_part(int degree) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_)
    if (static_cast<int>(total_of(e)) == degree) r.add_term(e, c);
  return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw std::invalid_argument("point dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out << mag.get_str();
    else if (mag == 1)
      out << mono;
    else
      out << mag.get_str() << "*" << mono;
  }
  return out.str();
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (a.variables() != b.variables()) throw std::invalid_argument("variable list mismatch");
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  MultiPoly q(a.variables());
  MultiPoly r = a;
  const auto& [lb, cb] = b.leading_term();
  while (!r.is_zero()) {
    const auto& [lr, cr] = r.leading_term();
    Exponents e(lr.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (lr[i] < lb[i]) return std::nullopt;
      e[i] = lr[i] - lb[i];
    }
    Rational c = cr / cb;
    MultiPoly t = MultiPoly::monomial(a.variables(), e, c);
    q += t;
    r -= t * b;
  }
  return q;
}

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Rational determinant(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    if (a[col].size() != n) throw std::invalid_argument("matrix is not square");
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] /= p;
      inv[col][k] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

MultiPoly linear_change(const MultiPoly& p, const RationalMatrix& m) {
  const std::size_t n = p.nvars();
  if (m.size() != n) throw std::invalid_argument("matrix dimension does not match variables");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  if (determinant(m) == 0) throw std::invalid_argument("singular matrix");

  const auto& vars = p.variables();
  std::vector<MultiPoly> forms;
  forms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly f(vars);
    for (std::size_t j = 0; j < n; ++j) {
      Exponents e(n, 0);
      e[j] = 1;
      f.add_term(e, m[i][j]);
    }
    forms.push_back(std::move(f));
  }

  // powers[i][k] = forms[i]^k, filled lazily
  std::vector<std::vector<MultiPoly>> powers(n);
  auto power = [&](std::size_t i, std::uint32_t k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(vars, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * forms[i]);
    return cache[k];
  };

  MultiPoly result(vars);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(vars, c);
    for (std::size_t i = 0; i < n; ++i)
      if (e[i]) t *= power(i, e[i]);
    result += t;
  }
  return result;
}

}  // namespace loja
