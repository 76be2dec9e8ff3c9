#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace loja {

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonicalizes after every arithmetic operation).
using Rational = mpq_class;
using BigInt = mpz_class;

/// A rational number or -inf. The empty optional is -inf, which makes the
/// standard optional ordering (nullopt < everything) the right one.
using ExtRational = std::optional<Rational>;

/// A polynomial or series degree; nullopt is the degree of zero (-inf).
using Degree = std::optional<int>;

std::string to_string(const Rational& q);
std::string to_string(const ExtRational& q);
std::string to_string(const Degree& d);

/// Parses "p" or "p/q" (optional sign); throws std::invalid_argument.
Rational parse_rational(std::string_view text);
ExtRational parse_ext_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace loja
