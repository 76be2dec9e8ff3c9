#include <vector>

#include "loja/numeric/compiled_poly.hpp"

namespace loja::kernels {

// Reference kernel. Lanes of four points are processed exactly as the vector
// kernels do: powers by repeated complex multiplication, then one product
// per term in variable order, scaled by the coefficient and summed in term
// order.
void eval_scalar(const EvalArgs& a) {
  constexpr std::size_t L = 4;
  std::vector<std::size_t> base(a.nvars + 1, 0);
  for (std::size_t v = 0; v < a.nvars; ++v) base[v + 1] = base[v] + a.max_deg[v] + 1;
  std::vector<double> pr(base[a.nvars] * L), pi(base[a.nvars] * L);
  for (std::size_t i0 = 0; i0 < a.count; i0 += L) {
    double zr[L], zi[L];
    for (std::size_t v = 0; v < a.nvars; ++v) {
      for (std::size_t l = 0; l < L; ++l) {
        std::size_t i = i0 + l;
        zr[l] = i < a.count ? a.re[v * a.count + i] : 0.0;
        zi[l] = i < a.count ? a.im[v * a.count + i] : 0.0;
      }
      double* r = &pr[base[v] * L];
      double* m = &pi[base[v] * L];
      for (std::size_t l = 0; l < L; ++l) {
        r[l] = 1.0;
        m[l] = 0.0;
      }
      for (int k = 1; k <= a.max_deg[v]; ++k)
        for (std::size_t l = 0; l < L; ++l) {
          double ar = r[(k - 1) * L + l], ai = m[(k - 1) * L + l];
          r[k * L + l] = ar * zr[l] - ai * zi[l];
          m[k * L + l] = ar * zi[l] + ai * zr[l];
        }
    }
    double sr[L] = {0.0, 0.0, 0.0, 0.0}, si[L] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t t = 0; t < a.nterms; ++t) {
      const int* e = a.exps + t * a.nvars;
      double tr[L], ti[L];
      for (std::size_t l = 0; l < L; ++l) {
        tr[l] = 1.0;
        ti[l] = 0.0;
      }
      for (std::size_t v = 0; v < a.nvars; ++v) {
        const double* r = &pr[(base[v] + e[v]) * L];
        const double* m = &pi[(base[v] + e[v]) * L];
        for (std::size_t l = 0; l < L; ++l) {
          double ar = tr[l], ai = ti[l];
          tr[l] = ar * r[l] - ai * m[l];
          ti[l] = ar * m[l] + ai * r[l];
        }
      }
      for (std::size_t l = 0; l < L; ++l) {
        sr[l] = sr[l] + tr[l] * a.coeffs[t];
        si[l] = si[l] + ti[l] * a.coeffs[t];
      }
    }
    for (std::size_t l = 0; l < L && i0 + l < a.count; ++l) {
      a.out_re[i0 + l] = sr[l];
      a.out_im[i0 + l] = si[l];
    }
  }
}

}  // namespace loja::kernels
