#include "loja/puiseux/genericize.hpp"

#include <random>
#include <stdexcept>

namespace loja {

bool is_degree_regular(const MultiPoly& f) {
  Degrees d = f.degrees();
  if (!d.total) return false;
  for (const auto& v : d.per_variable)
    if (v != d.total) return false;
  return true;
}

std::pair<GenericizeReport, MultiPoly> genericize(const MultiPoly& f, std::uint64_t seed) {
  if (f.nvars() != 2) throw std::invalid_argument("genericize expects 2 variables");
  if (f.is_zero() || f.is_constant())
    throw std::invalid_argument("genericize expects a nonconstant polynomial");

  std::mt19937_64 rng(seed);
  long h = 2;
  auto draw = [&]() {
    auto span = static_cast<std::uint64_t>(2 * h + 1);
    return static_cast<long>(rng() % span) - h;
  };

  GenericizeReport report;
  for (int attempt = 1;; ++attempt) {
    RationalMatrix m;
    if (seed == 0 && attempt == 1) {
      m = identity_matrix(2);
    } else {
      m = {{draw(), draw()}, {draw(), draw()}};
    }
    if (determinant(m) != 0) {
      MultiPoly g = linear_change(f, m);
      if (is_degree_regular(g)) {
        report.transform = m;
        report.attempts = attempt;
        for (const auto& d : g.degrees().per_variable) report.regular_degrees.push_back(*d);
        return {report, g};
      }
    }
    if (!(seed == 0 && attempt == 1)) h *= 2;
    if (h > (1L << 40)) throw std::runtime_error("genericize did not find a regular transform");
  }
}

}  // namespace loja
