#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loja/poly/rational.hpp"

namespace loja {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order, descending: higher total degree first, ties
/// broken lexicographically in declared variable order (x > y > ...).
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

struct Degrees {
  Degree total;
  std::vector<Degree> per_variable;
};

/// Sparse multivariate polynomial with rational coefficients. Terms are kept
/// in descending grlex order and zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  static MultiPoly variable(std::vector<std::string> variables, std::size_t index);
  static MultiPoly monomial(std::vector<std::string> variables, Exponents exps, const Rational& c);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the monomial; zero when absent.
  Rational coefficient(const Exponents& e) const;
  /// Leading term under grlex. Undefined for the zero polynomial.
  const std::pair<const Exponents, Rational>& leading_term() const { return *terms_.begin(); }

  /// Adds c * monomial in place, pruning a resulting zero.
  void add_term(const Exponents& e, const Rational& c);

  Degrees degrees() const;
  Degree total_degree() const;
  Degree degree_in(std::size_t var) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  bool operator==(const MultiPoly& o) const = default;

  MultiPoly pow(unsigned k) const;
  MultiPoly derivative(std::size_t var) const;
  /// Scales so that the leading grlex coefficient is 1 (zero stays zero).
  MultiPoly monic() const;
  /// Homogeneous component of the given total degree.
  MultiPoly homogeneous_part(int degree) const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Canonical text form, e.g. "x^2*y + 3/2*y^2 - 1".
  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

using RationalMatrix = std::vector<std::vector<Rational>>;

Rational determinant(const RationalMatrix& m);
RationalMatrix identity_matrix(std::size_t n);
RationalMatrix inverse(const RationalMatrix& m);

/// p composed with the linear map z = M w (variable i is replaced by
/// sum_j M[i][j] * var_j). Throws std::invalid_argument when M is singular.
MultiPoly linear_change(const MultiPoly& p, const RationalMatrix& m);

}  // namespace loja
