#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "loja/numeric/compiled_poly.hpp"
#include "loja/poly/mapping.hpp"
#include "loja/poly/qpoly.hpp"

namespace loja {

/// Geometric ladder of radii r0 * ratio^i, i < count.
struct RadiusLadder {
  double r0 = 1e2;
  double ratio = 3.1622776601683795;
  int count = 9;
  int samples_per_radius = 64;
  int multistarts = 8;
  std::uint64_t seed = 0;

  /// Ladder covering [rmin, rmax] (rmax included up to rounding).
  static RadiusLadder from_range(double rmin, double rmax, double ratio, int samples,
                                 std::uint64_t seed = 0);
  std::vector<double> radii() const;
  /// Throws std::invalid_argument unless r0 > 0, ratio > 1, count >= 4.
  void validate() const;
};

struct SlopeFit {
  std::vector<std::pair<double, double>> points;  // (log R, log min|F|)
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // RMS in log space over the fitted points
  int used_tail = 0;
};

struct LadderRow {
  double radius;
  double min_restricted;
  double min_full;
};

struct EstimateReport {
  SlopeFit restricted;
  SlopeFit full;
  double agreement = 0.0;
  std::vector<LadderRow> rows;
};

/// F rounded to doubles, with each component also split by powers of every
/// variable for univariate root solving.
class CompiledMap {
 public:
  explicit CompiledMap(const MappingSpec& f);

  std::size_t nvars() const { return nvars_; }
  /// |F| at each point of the batch (max of moduli).
  std::vector<double> norms(const PointBatch& pts) const;
  double norm(std::span<const std::complex<double>> z) const;

 private:
  friend double sample_S_min(const CompiledMap&, double, int, std::uint64_t);

  struct Slice {
    std::size_t component;
    std::size_t variable;
    std::vector<CompiledPoly> coeffs;  // coefficient of z_variable^k, k low first
  };

  std::size_t nvars_;
  bool has_zero_ = false;
  std::vector<CompiledPoly> components_;
  std::vector<Slice> slices_;
};

/// Approximate min of |F| over S ∩ {|z| = R}, S the zero set of the product
/// of the components. Returns +infinity when no sample lands on S.
double sample_S_min(const MappingSpec& f, double radius, int samples, std::uint64_t seed);
double sample_S_min(const CompiledMap& f, double radius, int samples, std::uint64_t seed);

/// Approximate min of |F| over {|z| = R}: the best `multistarts` of
/// `samples` random boundary points are refined by local descent.
double sphere_min(const MappingSpec& f, double radius, int samples, std::uint64_t seed,
                  int multistarts = 8);
double sphere_min(const CompiledMap& f, double radius, int samples, std::uint64_t seed,
                  int multistarts = 8);

/// Least squares line through the last ceil(n/2) finite points.
SlopeFit fit_tail(const std::vector<std::pair<double, double>>& points);

EstimateReport estimate_exponent(const MappingSpec& f, const RadiusLadder& ladder);

/// Rows (R, min_S, min_full) as CSV with a header line.
void write_csv(const EstimateReport& report, std::ostream& out);

struct RootDistanceResult {
  bool holds = true;
  double worst_margin = 0.0;  // smallest observed |Phi(t)| / bound
  std::size_t probes = 0;
};

/// Checks |Phi(t)| >= 2^-deg(Phi) * min over roots tau of the product of
/// |Phi(tau)| at random probes and at midpoints between roots.
RootDistanceResult root_distance_check(const std::vector<QPoly>& components, int probes, std::uint64_t seed);

}  // namespace loja
