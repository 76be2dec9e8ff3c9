#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loja/poly/multipoly.hpp"

namespace loja {

/// Points in structure-of-arrays layout: coordinate v of point i is
/// (re[v * count + i], im[v * count + i]).
struct PointBatch {
  std::size_t nvars = 0;
  std::size_t count = 0;
  std::vector<double> re;
  std::vector<double> im;

  PointBatch() = default;
  PointBatch(std::size_t nvars, std::size_t count);
  void set(std::size_t i, std::span<const std::complex<double>> z);
  std::complex<double> get(std::size_t v, std::size_t i) const;
};

enum class Kernel { scalar, avx2, neon };

std::string to_string(Kernel k);
bool kernel_available(Kernel k);
/// The kernel used by batch evaluation: the override if set, otherwise the
/// best one the CPU supports.
Kernel active_kernel();
/// Forces a kernel (for equivalence tests); nullopt restores detection.
void set_kernel_override(std::optional<Kernel> k);

/// A polynomial with rational coefficients rounded to doubles, laid out for
/// batch evaluation at complex points. All kernels perform the same
/// operations in the same order, so their results agree bit for bit.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const MultiPoly& p);

  std::size_t nvars() const { return nvars_; }
  std::size_t terms() const { return coeffs_.size(); }

  void evaluate(const PointBatch& pts, std::span<double> out_re, std::span<double> out_im) const;
  void evaluate(const PointBatch& pts, std::span<double> out_re, std::span<double> out_im,
                Kernel k) const;
  std::vector<std::complex<double>> evaluate(const PointBatch& pts) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> z) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<int> max_deg_;
  std::vector<double> coeffs_;
  std::vector<int> exps_;  // exps_[t * nvars_ + v]
};

namespace kernels {

struct EvalArgs {
  std::size_t nvars;
  const int* max_deg;
  std::size_t nterms;
  const double* coeffs;
  const int* exps;
  std::size_t count;
  const double* re;
  const double* im;
  double* out_re;
  double* out_im;
};

void eval_scalar(const EvalArgs& a);
void eval_avx2(const EvalArgs& a);
void eval_neon(const EvalArgs& a);

}  // namespace kernels

}  // namespace loja
