#include "loja/poly/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace loja {

namespace {

using cd = std::complex<double>;

template <class C>
void eval_with_derivative(std::span<const C> c, const C& z, C& p, C& dp) {
  p = c.back();
  dp = C(0.0);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
}

void eval_mp(std::span<const MpComplex> c, const MpComplex& z, MpComplex& p, MpComplex& dp) {
  p = c.back();
  dp = MpComplex(z.precision());
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
}

std::vector<cd> initial_guesses(std::span<const cd> monic) {
  const std::size_t n = monic.size() - 1;
  // Fujiwara bound on the root moduli
  double bound = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double term = std::pow(std::abs(monic[k]), 1.0 / static_cast<double>(n - k));
    if (k == 0) term *= std::pow(0.5, 1.0 / static_cast<double>(n));
    bound = std::max(bound, 2.0 * term);
  }
  if (!(bound > 0.0) || !std::isfinite(bound)) bound = 1.0;
  std::vector<cd> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(0.5 * bound, angle);
  }
  return z;
}

}  // namespace

std::vector<cd> polynomial_roots(std::span<const cd> coeffs) {
  std::size_t lo = 0, hi = coeffs.size();
  while (hi > 0 && coeffs[hi - 1] == cd(0.0)) --hi;
  if (hi == 0) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<cd> roots;
  while (lo < hi - 1 && coeffs[lo] == cd(0.0)) {
    roots.emplace_back(0.0);
    ++lo;
  }
  std::vector<cd> c(coeffs.begin() + static_cast<std::ptrdiff_t>(lo),
                    coeffs.begin() + static_cast<std::ptrdiff_t>(hi));
  const std::size_t n = c.size() - 1;
  if (n == 0) return roots;
  const cd lead = c.back();
  for (auto& x : c) x /= lead;
  if (n == 1) {
    roots.push_back(-c[0]);
    return roots;
  }

  std::vector<cd> z = initial_guesses(c);
  for (int iter = 0; iter < 1000; ++iter) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cd p, dp;
      eval_with_derivative<cd>(c, z[i], p, dp);
      if (p == cd(0.0)) continue;
      cd ratio = p / dp;
      cd s(0.0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      cd w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[i])));
    }
    if (worst < 1e-15) break;
  }
  for (auto& r : z) {
    for (int k = 0; k < 3; ++k) {
      cd p, dp;
      eval_with_derivative<cd>(c, r, p, dp);
      if (dp == cd(0.0)) break;
      cd step = p / dp;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      cd next = r - step;
      cd pn, dpn;
      eval_with_derivative<cd>(c, next, pn, dpn);
      if (std::abs(pn) >= std::abs(p)) break;
      r = next;
    }
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

std::vector<MpComplex> refine_roots(std::span<const MpComplex> coeffs,
                                    std::vector<MpComplex> z, mpfr_prec_t prec) {
  const std::size_t n = coeffs.size() - 1;
  std::vector<MpComplex> c;
  c.reserve(coeffs.size());
  for (const auto& x : coeffs) {
    MpComplex y(prec);
    mpfr_set(y.re.get(), x.re.get(), MPFR_RNDN);
    mpfr_set(y.im.get(), x.im.get(), MPFR_RNDN);
    c.push_back(std::move(y));
  }
  for (auto& r : z) {
    MpComplex y(prec);
    mpfr_set(y.re.get(), r.re.get(), MPFR_RNDN);
    mpfr_set(y.im.get(), r.im.get(), MPFR_RNDN);
    r = std::move(y);
  }
  MpReal one(1.0, prec);
  MpComplex unit(one, MpReal(prec));
  MpReal tol(prec), mag(prec);
  for (int iter = 0; iter < 200; ++iter) {
    bool done = true;
    for (std::size_t i = 0; i < n; ++i) {
      MpComplex p(prec), dp(prec);
      eval_mp(c, z[i], p, dp);
      if (p.re.is_zero() && p.im.is_zero()) continue;
      MpComplex ratio = p / dp;
      MpComplex s(prec);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) s = s + unit / (z[i] - z[j]);
      MpComplex w = ratio / (unit - ratio * s);
      if (!mpfr_number_p(w.re.get()) || !mpfr_number_p(w.im.get())) w = ratio;
      z[i] = z[i] - w;
      // |w| <= 2^(8-prec) * max(1, |z|)
      mag = z[i].abs();
      if (mpfr_cmp_ui(mag.get(), 1) < 0) mpfr_set_ui(mag.get(), 1, MPFR_RNDN);
      mpfr_mul_2si(tol.get(), mag.get(), 8 - static_cast<long>(prec), MPFR_RNDN);
      MpReal wa = w.abs();
      if (mpfr_greater_p(wa.get(), tol.get())) done = false;
    }
    if (done) break;
  }
  return z;
}

ComplexBall horner(std::span<const ComplexBall> coeffs, const ComplexBall& z) {
  if (coeffs.empty()) return ComplexBall(z.precision());
  ComplexBall acc = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * z + coeffs[k];
  return acc;
}

namespace {

std::vector<ComplexBall> derivative(std::span<const ComplexBall> c, mpfr_prec_t prec) {
  std::vector<ComplexBall> d;
  for (std::size_t k = 1; k < c.size(); ++k)
    d.push_back(c[k] * ComplexBall::from_rational(Rational(static_cast<unsigned long>(k)), prec));
  return d;
}

std::optional<ComplexBall> certify(std::span<const ComplexBall> c, std::span<const ComplexBall> dc,
                                   const MpComplex& z) {
  const std::size_t n = c.size() - 1;
  ComplexBall zb = ComplexBall::from_mid(z);
  ComplexBall p = horner(c, zb);
  ComplexBall dp = horner(dc, zb);
  MpReal num = p.abs_upper();
  MpReal den = dp.abs_lower();
  if (den.is_zero()) return std::nullopt;
  MpReal r(64);
  mpfr_div(r.get(), num.get(), den.get(), MPFR_RNDU);
  mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(n), MPFR_RNDU);
  return ComplexBall::from_mid_rad(z, r);
}

}  // namespace

std::optional<ComplexBall> newton_enclosure(std::span<const ComplexBall> coeffs,
                                            const MpComplex& start, mpfr_prec_t prec) {
  std::vector<MpComplex> mids;
  for (const auto& b : coeffs) mids.push_back(b.mid());
  MpComplex z(prec);
  mpfr_set(z.re.get(), start.re.get(), MPFR_RNDN);
  mpfr_set(z.im.get(), start.im.get(), MPFR_RNDN);
  MpReal tol(prec), mag(prec);
  for (int iter = 0; iter < 200; ++iter) {
    MpComplex p(prec), dp(prec);
    eval_mp(mids, z, p, dp);
    if (p.re.is_zero() && p.im.is_zero()) break;
    if (dp.re.is_zero() && dp.im.is_zero()) return std::nullopt;
    MpComplex step = p / dp;
    z = z - step;
    mag = z.abs();
    if (mpfr_cmp_ui(mag.get(), 1) < 0) mpfr_set_ui(mag.get(), 1, MPFR_RNDN);
    mpfr_mul_2si(tol.get(), mag.get(), 4 - static_cast<long>(prec), MPFR_RNDN);
    MpReal sa = step.abs();
    if (mpfr_lessequal_p(sa.get(), tol.get())) break;
  }
  auto dc = derivative(coeffs, prec);
  return certify(coeffs, dc, z);
}

std::vector<ComplexBall> isolate_roots(
    const std::function<std::vector<ComplexBall>(mpfr_prec_t)>& coeffs_at, mpfr_prec_t prec,
    mpfr_prec_t max_prec) {
  std::vector<MpComplex> approx;
  for (; prec <= max_prec; prec *= 2) {
    std::vector<ComplexBall> c = coeffs_at(prec);
    if (c.empty() || c.back().contains_zero()) continue;
    const std::size_t n = c.size() - 1;
    if (n == 0) return {};

    std::vector<MpComplex> mids;
    for (const auto& b : c) mids.push_back(b.mid());
    if (approx.size() != n) {
      std::vector<cd> dc;
      for (const auto& m : mids) dc.push_back(m.to_complex());
      approx.clear();
      for (const auto& r : polynomial_roots(dc)) approx.emplace_back(r, prec);
    }
    approx = refine_roots(mids, std::move(approx), prec);

    auto dcoef = derivative(c, prec);
    std::vector<ComplexBall> disks;
    bool ok = true;
    for (const auto& z : approx) {
      auto d = certify(c, dcoef, z);
      if (!d || !mpfr_number_p(d->rad().get())) {
        ok = false;
        break;
      }
      disks.push_back(*d);
    }
    for (std::size_t i = 0; ok && i < disks.size(); ++i)
      for (std::size_t j = i + 1; ok && j < disks.size(); ++j)
        if (disks[i].overlaps(disks[j])) ok = false;
    if (ok) return disks;
  }
  throw std::runtime_error("root isolation failed to certify at maximum precision");
}

bool lex_less(const ComplexBall& a, const ComplexBall& b) {
  int c = compare_real_parts(a, b);
  if (c != 0) return c < 0;
  c = compare_imag_parts(a, b);
  if (c != 0) return c < 0;
  return mpfr_less_p(a.mid().re.get(), b.mid().re.get()) ||
         (mpfr_equal_p(a.mid().re.get(), b.mid().re.get()) &&
          mpfr_less_p(a.mid().im.get(), b.mid().im.get()));
}

}  // namespace loja
