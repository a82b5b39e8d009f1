#pragma once

#include <optional>
#include <vector>

#include "heatcoef/catalog.hpp"
#include "heatcoef/heat.hpp"
#include "heatcoef/pi_scaled.hpp"
#include "heatcoef/real.hpp"
#include "heatcoef/zeta.hpp"

namespace heatcoef {

/// Numerical settings for the quadrature oracle.
struct QuadratureConfig {
  int decimal_digits = 60;
  double tail_epsilon = 1e-70;
  std::vector<double> t_grid;  // strictly decreasing, inside (0, 1)
  int richardson_depth = 10;

  /// t_grid = t0 * ratio^i for i = 0..depth, tail_epsilon = 10^-(digits+10).
  static QuadratureConfig geometric(int decimal_digits, double t0, double ratio, int depth);
  /// Defaults for a space: t0 = 0.1 / max(1, rho0), ratio 1/2, depth 10.
  static QuadratureConfig defaults_for(const SpaceDescriptor& desc, int decimal_digits);

  /// Throws InvalidArgument on digits < 30, a non-decreasing or out-of-range
  /// grid, depth < 1, or fewer than depth + 1 grid points.
  void validate() const;
  mpfr_prec_t bits() const { return bits_for_digits(decimal_digits); }
};

/// Plancherel density |c(r)|^-2. Even in r and non-negative; the cotangent
/// case takes its finite limit 2 C_G P(0) at r = 0.
Real density_eval(const SpaceDescriptor& desc, const Real& r, double tail_epsilon = 0.0);
double density_eval(const SpaceDescriptor& desc, double r);

/// chi(1) Vol h_t(1), with h_t(1) = (1/4pi) e^(-rho0^2 t) int_R e^(-r^2 t) |c(r)|^-2 dr.
Real heat_identity_numeric(const SpaceDescriptor& desc, const SpectralParams& params, const Real& t,
                           const QuadratureConfig& config);
Real heat_identity_numeric(const SpaceDescriptor& desc, const SpectralParams& params, double t,
                           const QuadratureConfig& config);

struct ExtractedCoefficient {
  int k;
  Real value;           // scaled by chi(1) Vol
  Real error_estimate;  // last Richardson correction
};

/// Peels A_0..A_{k_max} off (4 pi t)^(d/2) chi(1) Vol h_t(1) on the t grid,
/// extrapolating each stage to t = 0. Throws PrecisionExhausted when a stage's
/// Richardson correction stops being small.
std::vector<ExtractedCoefficient> extract_coeffs_numeric(const SpaceDescriptor& desc,
                                                         const SpectralParams& params, int k_max,
                                                         const QuadratureConfig& config);

/// |(4 pi t)^(d/2) chi Vol h_t(1) - sum_{k<=N} A_k t^k| / t^(N+1) with A_k exact.
Real expansion_remainder_ratio(const CoefficientTable& table, const SpectralParams& params, double t, int N,
                               const QuadratureConfig& config);

struct VerificationRow {
  int k;
  std::optional<PiScaledRational> exact;  // scaled by chi(1) Vol; absent in the cotangent case
  Real extracted;
  Real error_estimate;
  std::optional<Real> rel_error;
  std::optional<bool> pass;
};

struct VerificationReport {
  SpaceDescriptor desc;
  SpectralParams params;
  QuadratureConfig config;
  double tolerance;
  std::vector<VerificationRow> rows;
  std::optional<bool> pass;  // absent when there is no exact side
};

/// Compares coefficient_table against extract_coeffs_numeric. rel_error is
/// relative to |exact|, or absolute when the exact value is zero.
VerificationReport verify(const SpaceDescriptor& desc, const SpectralParams& params, int k_max, double tolerance,
                          const QuadratureConfig& config);

}  // namespace heatcoef
