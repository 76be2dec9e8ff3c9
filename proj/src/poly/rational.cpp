#include "loja/poly/rational.hpp"

#include <stdexcept>

namespace loja {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const ExtRational& q) { return q ? q->get_str() : "-inf"; }

std::string to_string(const Degree& d) { return d ? std::to_string(*d) : "-inf"; }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string_view num = std::string_view(s).substr(0, slash);
  std::string_view den = slash == std::string::npos ? std::string_view("1")
                                                   : std::string_view(s).substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("not a rational literal: '" + s + "'");
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  BigInt d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  Rational q(BigInt(n), d);
  q.canonicalize();
  return q;
}

ExtRational parse_ext_rational(std::string_view text) {
  if (text == "-inf") return std::nullopt;
  return parse_rational(text);
}

}  // namespace loja
