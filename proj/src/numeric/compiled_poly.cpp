#include "loja/numeric/compiled_poly.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace loja {

PointBatch::PointBatch(std::size_t nvars_in, std::size_t count_in)
    : nvars(nvars_in), count(count_in), re(nvars_in * count_in), im(nvars_in * count_in) {}

void PointBatch::set(std::size_t i, std::span<const std::complex<double>> z) {
  for (std::size_t v = 0; v < nvars; ++v) {
    re[v * count + i] = z[v].real();
    im[v * count + i] = z[v].imag();
  }
}

std::complex<double> PointBatch::get(std::size_t v, std::size_t i) const {
  return {re[v * count + i], im[v * count + i]};
}

std::string to_string(Kernel k) {
  switch (k) {
    case Kernel::scalar: return "scalar";
    case Kernel::avx2: return "avx2";
    case Kernel::neon: return "neon";
  }
  return "scalar";
}

bool kernel_available(Kernel k) {
  switch (k) {
    case Kernel::scalar: return true;
    case Kernel::avx2:
#if defined(LOJA_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Kernel::neon:
#if defined(LOJA_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

namespace {

std::atomic<int> g_override{-1};

Kernel detect() {
  if (kernel_available(Kernel::avx2)) return Kernel::avx2;
  if (kernel_available(Kernel::neon)) return Kernel::neon;
  return Kernel::scalar;
}

}  // namespace

Kernel active_kernel() {
  int o = g_override.load();
  if (o >= 0) return static_cast<Kernel>(o);
  static const Kernel best = detect();
  return best;
}

void set_kernel_override(std::optional<Kernel> k) {
  if (k && !kernel_available(*k)) throw std::invalid_argument("kernel not available: " + to_string(*k));
  g_override.store(k ? static_cast<int>(*k) : -1);
}

CompiledPoly::CompiledPoly(const MultiPoly& p) : nvars_(p.nvars()), max_deg_(p.nvars(), 0) {
  for (const auto& [e, c] : p.terms()) {
    coeffs_.push_back(c.get_d());
    for (std::size_t v = 0; v < nvars_; ++v) {
      exps_.push_back(static_cast<int>(e[v]));
      max_deg_[v] = std::max(max_deg_[v], static_cast<int>(e[v]));
    }
  }
}

void CompiledPoly::evaluate(const PointBatch& pts, std::span<double> out_re,
                            std::span<double> out_im) const {
  evaluate(pts, out_re, out_im, active_kernel());
}

void CompiledPoly::evaluate(const PointBatch& pts, std::span<double> out_re,
                            std::span<double> out_im, Kernel k) const {
  if (pts.nvars != nvars_) throw std::invalid_argument("point dimension mismatch");
  if (out_re.size() < pts.count || out_im.size() < pts.count)
    throw std::invalid_argument("output buffer too small");
  kernels::EvalArgs a{nvars_,        max_deg_.data(), coeffs_.size(), coeffs_.data(),
                      exps_.data(),  pts.count,       pts.re.data(),  pts.im.data(),
                      out_re.data(), out_im.data()};
  switch (k) {
    case Kernel::avx2: kernels::eval_avx2(a); break;
    case Kernel::neon: kernels::eval_neon(a); break;
    default: kernels::eval_scalar(a); break;
  }
}

std::vector<std::complex<double>> CompiledPoly::evaluate(const PointBatch& pts) const {
  std::vector<double> re(pts.count), im(pts.count);
  evaluate(pts, re, im);
  std::vector<std::complex<double>> out(pts.count);
  for (std::size_t i = 0; i < pts.count; ++i) out[i] = {re[i], im[i]};
  return out;
}

std::complex<double> CompiledPoly::evaluate(std::span<const std::complex<double>> z) const {
  PointBatch b(nvars_, 1);
  b.set(0, z);
  double re = 0.0, im = 0.0;
  evaluate(b, std::span<double>(&re, 1), std::span<double>(&im, 1));
  return {re, im};
}

}  // namespace loja
