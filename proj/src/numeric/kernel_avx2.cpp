#include "loja/numeric/compiled_poly.hpp"

#if defined(LOJA_HAVE_AVX2)

#include <immintrin.h>

#include <vector>

namespace loja::kernels {

void eval_avx2(const EvalArgs& a) {
  constexpr std::size_t L = 4;
  std::vector<std::size_t> base(a.nvars + 1, 0);
  for (std::size_t v = 0; v < a.nvars; ++v) base[v + 1] = base[v] + a.max_deg[v] + 1;
  std::vector<double> pr(base[a.nvars] * L), pi(base[a.nvars] * L);
  const __m256d one = _mm256_set1_pd(1.0), zero = _mm256_setzero_pd();
  for (std::size_t i0 = 0; i0 < a.count; i0 += L) {
    for (std::size_t v = 0; v < a.nvars; ++v) {
      alignas(32) double br[L] = {0.0, 0.0, 0.0, 0.0}, bi[L] = {0.0, 0.0, 0.0, 0.0};
      for (std::size_t l = 0; l < L && i0 + l < a.count; ++l) {
        br[l] = a.re[v * a.count + i0 + l];
        bi[l] = a.im[v * a.count + i0 + l];
      }
      __m256d zr = _mm256_load_pd(br), zi = _mm256_load_pd(bi);
      double* r = &pr[base[v] * L];
      double* m = &pi[base[v] * L];
      __m256d cr = one, ci = zero;
      _mm256_storeu_pd(r, cr);
      _mm256_storeu_pd(m, ci);
      for (int k = 1; k <= a.max_deg[v]; ++k) {
        __m256d nr = _mm256_sub_pd(_mm256_mul_pd(cr, zr), _mm256_mul_pd(ci, zi));
        ci = _mm256_add_pd(_mm256_mul_pd(cr, zi), _mm256_mul_pd(ci, zr));
        cr = nr;
        _mm256_storeu_pd(r + k * L, cr);
        _mm256_storeu_pd(m + k * L, ci);
      }
    }
    __m256d sr = zero, si = zero;
    for (std::size_t t = 0; t < a.nterms; ++t) {
      const int* e = a.exps + t * a.nvars;
      __m256d tr = one, ti = zero;
      for (std::size_t v = 0; v < a.nvars; ++v) {
        __m256d r = _mm256_loadu_pd(&pr[(base[v] + e[v]) * L]);
        __m256d m = _mm256_loadu_pd(&pi[(base[v] + e[v]) * L]);
        __m256d nr = _mm256_sub_pd(_mm256_mul_pd(tr, r), _mm256_mul_pd(ti, m));
        ti = _mm256_add_pd(_mm256_mul_pd(tr, m), _mm256_mul_pd(ti, r));
        tr = nr;
      }
      __m256d c = _mm256_set1_pd(a.coeffs[t]);
      sr = _mm256_add_pd(sr, _mm256_mul_pd(tr, c));
      si = _mm256_add_pd(si, _mm256_mul_pd(ti, c));
    }
    alignas(32) double orr[L], oi[L];
    _mm256_store_pd(orr, sr);
    _mm256_store_pd(oi, si);
    for (std::size_t l = 0; l < L && i0 + l < a.count; ++l) {
      a.out_re[i0 + l] = orr[l];
      a.out_im[i0 + l] = oi[l];
    }
  }
}

}  // namespace loja::kernels

#else

namespace loja::kernels {

void eval_avx2(const EvalArgs& a) { eval_scalar(a); }

}  // namespace loja::kernels

#endif
