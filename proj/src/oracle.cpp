#include "heatcoef/oracle.hpp"

#include <cmath>
#include <numbers>

#include "heatcoef/error.hpp"

namespace heatcoef {

QuadratureConfig QuadratureConfig::geometric(int decimal_digits, double t0, double ratio, int depth) {
  QuadratureConfig c;
  c.decimal_digits = decimal_digits;
  c.tail_epsilon = std::pow(10.0, -(decimal_digits + 10));
  c.richardson_depth = depth;
  double t = t0;
  for (int i = 0; i <= depth; ++i, t *= ratio) c.t_grid.push_back(t);
  return c;
}

QuadratureConfig QuadratureConfig::defaults_for(const SpaceDescriptor& desc, int decimal_digits) {
  const double rho = desc.rho0.to_double();
  return geometric(decimal_digits, 0.1 / std::max(1.0, rho), 0.5, 10);
}

void QuadratureConfig::validate() const {
  if (decimal_digits < 30) throw InvalidArgument("decimal_digits must be >= 30");
  if (!(tail_epsilon > 0.0 && tail_epsilon < 1.0)) throw InvalidArgument("tail_epsilon must lie in (0, 1)");
  if (richardson_depth < 1) throw InvalidArgument("richardson_depth must be >= 1");
  if (static_cast<int>(t_grid.size()) < richardson_depth + 1) {
    throw InvalidArgument("t_grid needs at least richardson_depth + 1 points");
  }
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0 && t_grid[i] < 1.0)) throw InvalidArgument("t_grid values must lie in (0, 1)");
    if (i > 0 && !(t_grid[i] < t_grid[i - 1])) throw InvalidArgument("t_grid must be strictly decreasing");
  }
}

namespace {

// tanh(x) for x >= 0; exactly 1 once e^(-2x) drops below tail_epsilon.
Real tanh_nonneg(const Real& x, const Real& tail_epsilon) {
  const Real e = exp(x * -2);
  if (e < tail_epsilon) return Real(1.0, x.precision());
  return -expm1(x * -2) / (e + Real(1.0, x.precision()));
}

// |r| coth(pi |r| / 2), with limit 2/pi at r = 0.
Real r_coth_half(const Real& r_abs, const Real& pi) {
  if (r_abs.is_zero()) return Real(2.0, r_abs.precision()) / pi;
  const Real x = pi * r_abs;
  const Real e = exp(-x);
  return r_abs * (e + Real(1.0, r_abs.precision())) / -expm1(-x);
}

Real factored_polynomial(const SpaceDescriptor& desc, const Real& r) {
  const Real r2 = r * r;
  Real p(1.0, r.precision());
  for (const auto& f : desc.factors) {
    p *= r2 * Real(f.r2_coeff, r.precision()) + Real(f.constant, r.precision());
  }
  return p;
}

// Imaginary distance of the nearest singularity of the density.
double strip_half_width(DensityKind kind) {
  switch (kind) {
    case DensityKind::TanhFull: return 0.5;
    case DensityKind::TanhHalf: return 1.0;
    case DensityKind::CothHalf: return 2.0;
    case DensityKind::Polynomial: return 1.0;
  }
  return 0.5;
}

// Neville extrapolation of samples f(t_i) to t = 0. Returns the estimate and
// its distance from the estimate that drops the smallest t.
std::pair<Real, Real> richardson(const std::vector<Real>& values, const std::vector<Real>& ts, int depth) {
  const int n = static_cast<int>(values.size());
  std::vector<std::vector<Real>> table(n);
  for (int i = 0; i < n; ++i) {
    table[i].push_back(values[i]);
    for (int j = 1; j <= std::min(i, depth); ++j) {
      const Real& t_far = ts[i - j];
      const Real& t_near = ts[i];
      table[i].push_back((t_far * table[i][j - 1] - t_near * table[i - 1][j - 1]) / (t_far - t_near));
    }
  }
  const auto& last = table[n - 1];
  Real estimate = last.back();
  Real correction = abs(last.back() - table[n - 2].back());
  return {estimate, correction};
}

}  // namespace

Real density_eval(const SpaceDescriptor& desc, const Real& r, double tail_epsilon) {
  const mpfr_prec_t bits = r.precision();
  const Real pi = Real::pi(bits);
  const Real scale = desc.c_g.to_real(bits) * pi;
  const Real r_abs = abs(r);
  const Real p = factored_polynomial(desc, r_abs);
  const Real eps(tail_epsilon, bits);
  switch (desc.density_kind) {
    case DensityKind::TanhFull: return scale * r_abs * p * tanh_nonneg(pi * r_abs, eps);
    case DensityKind::TanhHalf: return scale * r_abs * p * tanh_nonneg(pi * r_abs / 2, eps);
    case DensityKind::CothHalf: return scale * p * r_coth_half(r_abs, pi);
    case DensityKind::Polynomial: return scale * p;
  }
  return Real(bits);
}

double density_eval(const SpaceDescriptor& desc, double r) {
  constexpr double pi = std::numbers::pi;
  const double a = std::fabs(r);
  double p = 1.0;
  for (const auto& f : desc.factors) p *= a * a * f.r2_coeff.to_double() + f.constant.to_double();
  const double scale = desc.c_g.to_real(64).to_double() * pi;
  switch (desc.density_kind) {
    case DensityKind::TanhFull: return scale * a * p * std::tanh(pi * a);
    case DensityKind::TanhHalf: return scale * a * p * std::tanh(pi * a / 2);
    case DensityKind::CothHalf: return scale * p * (a == 0.0 ? 2.0 / pi : -a * (std::exp(-pi * a) + 1.0) / std::expm1(-pi * a));
    case DensityKind::Polynomial: return scale * p;
  }
  return 0.0;
}

Real heat_identity_numeric(const SpaceDescriptor& desc, const SpectralParams& params, const Real& t,
                           const QuadratureConfig& config) {
  if (t.sign() <= 0) throw InvalidArgument("heat_identity_numeric: t must be > 0");
  params.validate();
  const mpfr_prec_t bits = config.bits();
  const Real time = Real(bits) + t;
  const Real pi = Real::pi(bits);

  // Cutoff R: e^(-R^2 t) R^(d+2)-style tail below tail_epsilon.
  const double td = t.to_double();
  const double cutoff = std::sqrt((std::log(1.0 / config.tail_epsilon) + (desc.d + 2) * std::log1p(1.0 / td)) / td);
  const double target_digits = config.decimal_digits - 10;
  const double accept = std::pow(10.0, -(target_digits / 2.0 + 3.0));

  auto integrand = [&](const Real& r) { return exp(-(r * r) * time) * density_eval(desc, r, config.tail_epsilon); };

  // Even integrand: int_R f = h [f(0) + 2 sum_{k>=1} f(kh)], refined by halving h.
  const double delta = 0.8 * strip_half_width(desc.density_kind);
  double h = std::min(0.5, 2.0 * std::numbers::pi * delta / (target_digits * std::log(10.0)) * 4.0);
  Real sum = integrand(Real(bits)) / 2;
  const Real step(h, bits);
  for (long k = 1; k * h <= cutoff; ++k) sum += integrand(step * k);
  Real estimate = sum * Real(2.0 * h, bits);
  for (int level = 0;; ++level) {
    if (level > 24) throw PrecisionExhausted(0, "trapezoidal refinement did not converge");
    const double half = h / 2.0;
    const Real half_step(half, bits);
    for (long k = 1; (2 * k - 1) * half <= cutoff; ++k) {
      sum += integrand(half_step * (2 * k - 1));
    }
    h = half;
    Real refined = sum * Real(2.0 * h, bits);
    const Real diff = abs(refined - estimate);
    estimate = refined;
    if (diff <= abs(estimate) * Real(accept, bits)) break;
  }

  const Real rho2(desc.rho0 * desc.rho0, bits);
  return Real(params.scale(), bits) * exp(-(rho2 * time)) * estimate / (pi * 4);
}

Real heat_identity_numeric(const SpaceDescriptor& desc, const SpectralParams& params, double t,
                           const QuadratureConfig& config) {
  return heat_identity_numeric(desc, params, Real(t, config.bits()), config);
}

namespace {

Real scaled_heat(const SpaceDescriptor& desc, const SpectralParams& params, double t, const QuadratureConfig& config) {
  const mpfr_prec_t bits = config.bits();
  const Real time(t, bits);
  const Real four_pi_t = Real::pi(bits) * time * 4;
  return pow(sqrt(four_pi_t), desc.d) * heat_identity_numeric(desc, params, time, config);
}

}  // namespace

std::vector<ExtractedCoefficient> extract_coeffs_numeric(const SpaceDescriptor& desc, const SpectralParams& params,
                                                         int k_max, const QuadratureConfig& config) {
  if (k_max < 0) throw InvalidArgument("k_max must be >= 0");
  config.validate();
  const mpfr_prec_t bits = config.bits();
  std::vector<Real> ts;
  std::vector<Real> stage;
  for (double t : config.t_grid) {
    ts.emplace_back(t, bits);
    stage.push_back(scaled_heat(desc, params, t, config));
  }
  Real magnitude(bits);
  for (const auto& v : stage) magnitude = max(magnitude, abs(v));
  const Real noise_floor = magnitude * Real(std::pow(10.0, -config.decimal_digits / 2.0), bits);

  // An error e in A_i sits in stage k as -e / t^(k-i); its extrapolated size
  // is e times the extrapolation of t^-(k-i), which grows like (1/t_min)^(k-i).
  std::vector<Real> amplification;
  for (int m = 1; m <= k_max; ++m) {
    std::vector<Real> samples;
    for (const auto& t : ts) samples.push_back(pow(t, -m));
    amplification.push_back(abs(richardson(samples, ts, config.richardson_depth).first));
  }

  std::vector<ExtractedCoefficient> out;
  for (int k = 0; k <= k_max; ++k) {
    auto [value, correction] = richardson(stage, ts, config.richardson_depth);
    for (int i = 0; i < k; ++i) correction += out[i].error_estimate * amplification[k - i - 1];
    if (correction > abs(value) * Real(1e-3, bits) && correction > noise_floor) {
      throw PrecisionExhausted(k, "Richardson correction " + correction.str(3) + " vs estimate " + value.str(6));
    }
    for (std::size_t i = 0; i < stage.size(); ++i) stage[i] = (stage[i] - value) / ts[i];
    out.push_back({k, std::move(value), std::move(correction)});
  }
  return out;
}

Real expansion_remainder_ratio(const CoefficientTable& table, const SpectralParams& params, double t, int N,
                               const QuadratureConfig& config) {
  if (N < 0 || N > table.k_max) throw InvalidArgument("N out of range");
  const mpfr_prec_t bits = config.bits();
  const Real time(t, bits);
  Real remainder = scaled_heat(table.desc, params, t, config);
  const Real scale(params.scale(), bits);
  Real t_power(1.0, bits);
  for (int k = 0; k <= N; ++k) {
    remainder -= scale * table.entries[k].value.to_real(bits) * t_power;
    t_power *= time;
  }
  return abs(remainder) / t_power;
}

VerificationReport verify(const SpaceDescriptor& desc, const SpectralParams& params, int k_max, double tolerance,
                          const QuadratureConfig& config) {
  if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be > 0");
  VerificationReport report{desc, params, config, tolerance, {}, std::nullopt};
  std::optional<CoefficientTable> table;
  if (!desc.is_cotangent()) table = coefficient_table(desc, k_max, params);

  const mpfr_prec_t bits = config.bits();
  auto extracted = extract_coeffs_numeric(desc, params, k_max, config);
  bool all_pass = true;
  for (auto& e : extracted) {
    VerificationRow row{e.k, std::nullopt, std::move(e.value), std::move(e.error_estimate), std::nullopt, std::nullopt};
    if (table) {
      PiScaledRational exact = table->entries[e.k].value * PiScaledRational(params.scale());
      const Real exact_real = exact.to_real(bits);
      Real err = abs(row.extracted - exact_real);
      if (!exact.is_zero()) err /= abs(exact_real);
      const bool ok = err <= Real(tolerance, bits);
      all_pass = all_pass && ok;
      row.exact = std::move(exact);
      row.rel_error = std::move(err);
      row.pass = ok;
    }
    report.rows.push_back(std::move(row));
  }
  if (table) report.pass = all_pass;
  return report;
}

}  // namespace heatcoef
