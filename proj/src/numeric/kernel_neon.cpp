#include "loja/numeric/compiled_poly.hpp"

#if defined(LOJA_HAVE_NEON)

#include <arm_neon.h>

#include <vector>

namespace loja::kernels {

// Two lanes per register, same operation sequence as the scalar kernel.
void eval_neon(const EvalArgs& a) {
  constexpr std::size_t L = 2;
  std::vector<std::size_t> base(a.nvars + 1, 0);
  for (std::size_t v = 0; v < a.nvars; ++v) base[v + 1] = base[v] + a.max_deg[v] + 1;
  std::vector<double> pr(base[a.nvars] * L), pi(base[a.nvars] * L);
  const float64x2_t one = vdupq_n_f64(1.0), zero = vdupq_n_f64(0.0);
  for (std::size_t i0 = 0; i0 < a.count; i0 += L) {
    for (std::size_t v = 0; v < a.nvars; ++v) {
      double br[L] = {0.0, 0.0}, bi[L] = {0.0, 0.0};
      for (std::size_t l = 0; l < L && i0 + l < a.count; ++l) {
        br[l] = a.re[v * a.count + i0 + l];
        bi[l] = a.im[v * a.count + i0 + l];
      }
      float64x2_t zr = vld1q_f64(br), zi = vld1q_f64(bi);
      double* r = &pr[base[v] * L];
      double* m = &pi[base[v] * L];
      float64x2_t cr = one, ci = zero;
      vst1q_f64(r, cr);
      vst1q_f64(m, ci);
      for (int k = 1; k <= a.max_deg[v]; ++k) {
        float64x2_t nr = vsubq_f64(vmulq_f64(cr, zr), vmulq_f64(ci, zi));
        ci = vaddq_f64(vmulq_f64(cr, zi), vmulq_f64(ci, zr));
        cr = nr;
        vst1q_f64(r + k * L, cr);
        vst1q_f64(m + k * L, ci);
      }
    }
    float64x2_t sr = zero, si = zero;
    for (std::size_t t = 0; t < a.nterms; ++t) {
      const int* e = a.exps + t * a.nvars;
      float64x2_t tr = one, ti = zero;
      for (std::size_t v = 0; v < a.nvars; ++v) {
        float64x2_t r = vld1q_f64(&pr[(base[v] + e[v]) * L]);
        float64x2_t m = vld1q_f64(&pi[(base[v] + e[v]) * L]);
        float64x2_t nr = vsubq_f64(vmulq_f64(tr, r), vmulq_f64(ti, m));
        ti = vaddq_f64(vmulq_f64(tr, m), vmulq_f64(ti, r));
        tr = nr;
      }
      float64x2_t c = vdupq_n_f64(a.coeffs[t]);
      sr = vaddq_f64(sr, vmulq_f64(tr, c));
      si = vaddq_f64(si, vmulq_f64(ti, c));
    }
    double orr[L], oi[L];
    vst1q_f64(orr, sr);
    vst1q_f64(oi, si);
    for (std::size_t l = 0; l < L && i0 + l < a.count; ++l) {
      a.out_re[i0 + l] = orr[l];
      a.out_im[i0 + l] = oi[l];
    }
  }
}

}  // namespace loja::kernels

#else

namespace loja::kernels {

void eval_neon(const EvalArgs& a) { eval_scalar(a); }

}  // namespace loja::kernels

#endif
