#include "heatcoef/heat.hpp"

#include <cassert>
#include <stdexcept>

#include "heatcoef/error.hpp"
#include "heatcoef/special.hpp"

namespace heatcoef {

namespace {

Rational sign_power(int e) { return Rational(e % 2 == 0 ? 1 : -1); }

void require_covered(const SpaceDescriptor& desc, int k) {
  if (desc.is_cotangent()) {
    throw NotCovered(desc.name() + ": cotangent case not covered by closed forms");
  }
  if (k < 0) throw InvalidArgument("coefficient index k must be >= 0");
}

// Even d, k = d/2 + n.
PiScaledRational closed_above_half(const SpaceDescriptor& desc, int n) {
  const int half = desc.d / 2;
  const Rational& rho = desc.rho0;
  Rational bracket;
  for (int j = 0; j <= half - 1; ++j) {
    bracket += sign_power(j + 1) * pow(rho, 2 * (n + 1 + j)) * factorial(j) * desc.polynomial.a(j) /
               factorial(n + 1 + j);
  }
  for (int j = 0; j <= half - 1; ++j) {
    for (int l = 0; l <= n; ++l) {
      bracket += Rational(2) * sign_power(l) * pow(rho, 2 * (n - l)) / factorial(n - l) *
                 b_coefficient(l + 1, j, desc) * desc.polynomial.a(j);
    }
  }
  return PiScaledRational(sign_power(n) * bracket) * PiScaledRational::four_pi_power(desc.d - 2) * desc.c_g *
         PiScaledRational::pi_power(2);
}

// Even d, k <= d/2 - 1.
PiScaledRational closed_below_half(const SpaceDescriptor& desc, int k) {
  const int half = desc.d / 2;
  const Rational minus_rho2 = -(desc.rho0 * desc.rho0);
  Rational sum;
  for (int l = 0; l <= k; ++l) {
    assert(l <= half - 1);
    sum += pow(minus_rho2, k - l) / factorial(k - l) * factorial(half - (l + 1)) *
           desc.polynomial.a(half - (l + 1));
  }
  return PiScaledRational(sum) * PiScaledRational::four_pi_power(desc.d - 2) * desc.c_g *
         PiScaledRational::pi_power(2);
}

// SO_1(2n+1,1) with Gamma(n - l + 1/2) kept as a pi-scaled value.
PiScaledRational closed_odd(const SpaceDescriptor& desc, int k) {
  const int n = (desc.d - 1) / 2;
  const Rational minus_rho2 = -(desc.rho0 * desc.rho0);
  PiScaledRational sum;
  for (int l = 0; l <= std::min(k, n); ++l) {
    sum += PiScaledRational(pow(minus_rho2, k - l) * desc.polynomial.a(n - l) / factorial(k - l)) *
           half_gamma(n - l);
  }
  return PiScaledRational::pi_power(2) * PiScaledRational::four_pi_power(2 * n - 1) * desc.c_g * sum;
}

}  // namespace

Branch branch_for(const SpaceDescriptor& desc, int k) {
  if (desc.is_odd_dimensional()) return Branch::OddSO;
  const int half = desc.d / 2;
  if (k < half) return Branch::BelowHalf;
  return k == half ? Branch::AtHalf : Branch::AboveHalf;
}

PiScaledRational coeff_closed(const SpaceDescriptor& desc, int k) {
  require_covered(desc, k);
  if (desc.is_odd_dimensional()) return closed_odd(desc, k);
  const int half = desc.d / 2;
  return k < half ? closed_below_half(desc, k) : closed_above_half(desc, k - half);
}

PiScaledRational coeff_closed_factorial_form(const SpaceDescriptor& desc, int k) {
  if (!desc.is_odd_dimensional()) {
    throw InvalidArgument("factorial form applies to SO(2n+1,1) only; got " + desc.name());
  }
  if (k < 0) throw InvalidArgument("coefficient index k must be >= 0");
  const int n = (desc.d - 1) / 2;
  const Rational minus_rho2 = -(desc.rho0 * desc.rho0);
  Rational sum;
  for (int l = 0; l <= std::min(k, n); ++l) {
    sum += pow(minus_rho2, k - l) * factorial(2 * (n - l)) * desc.polynomial.a(n - l) /
           (factorial(k - l) * factorial(n - l) * pow(Rational(2), 2 * (n - l)));
  }
  return PiScaledRational::pi_power(3) * PiScaledRational::four_pi_power(2 * n - 1) * desc.c_g *
         PiScaledRational(sum);
}

PiScaledRational coeff_via_zeta(const SpaceDescriptor& desc, int k, const SpectralParams& params) {
  require_covered(desc, k);
  params.validate();
  const PiScaledRational four_pi_half_d = PiScaledRational::four_pi_power(desc.d);
  if (desc.is_odd_dimensional()) {
    // A_k = (4 pi)^(d/2) Gamma(d/2 - k) Res_{s = d/2 - k}
    const int n = (desc.d - 1) / 2;
    return four_pi_half_d * half_integer_gamma(n - k) * residue_at_half(desc, k);
  }
  const int half = desc.d / 2;
  if (k < half) {
    const int m = half - k;
    return four_pi_half_d * PiScaledRational(factorial(m - 1)) * residue_at(desc, m);
  }
  const int n = k - half;
  const ZetaResult zeta = special_value(desc, n, params);
  if (n == 0) {
    // A_{d/2} = (4 pi)^(d/2) [n0 + zeta(0)]; the absolute n0 parts cancel.
    if (params.n0 + zeta.n0_term != 0) throw std::logic_error("n0 terms failed to cancel");
    return four_pi_half_d * zeta.value;
  }
  return PiScaledRational(sign_power(n) / factorial(n)) * four_pi_half_d * zeta.value;
}

CoefficientTable coefficient_table(const SpaceDescriptor& desc, int k_max, const SpectralParams& params) {
  if (k_max < 0) throw InvalidArgument("k_max must be >= 0");
  CoefficientTable table{desc, k_max, {}};
  table.entries.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    PiScaledRational closed = coeff_closed(desc, k);
    const PiScaledRational via_zeta = coeff_via_zeta(desc, k, params);
    if (!(closed == via_zeta)) {
      throw std::logic_error(desc.name() + ": A_" + std::to_string(k) + " closed form " + closed.str() +
                             " disagrees with zeta route " + via_zeta.str());
    }
    table.entries.push_back({k, std::move(closed), branch_for(desc, k)});
  }
  return table;
}

Real evaluate_expansion(const CoefficientTable& table, const SpectralParams& params, const Real& t, int N) {
  if (N < 0 || N > table.k_max) {
    throw InvalidArgument("N must lie in [0, " + std::to_string(table.k_max) + "]");
  }
  if (t.sign() <= 0) throw InvalidArgument("t must be > 0");
  const mpfr_prec_t bits = t.precision();
  Real sum(bits);
  Real t_power(1.0, bits);
  for (int k = 0; k <= N; ++k) {
    sum += table.entries[k].value.to_real(bits) * t_power;
    t_power *= t;
  }
  const Real four_pi_t = Real::pi(bits) * t * 4;
  Real prefactor = table.desc.d % 2 == 0 ? pow(four_pi_t, -static_cast<long>(table.desc.d / 2))
                                         : Real(1.0, bits) / pow(sqrt(four_pi_t), table.desc.d);
  return Real(params.scale(), bits) * prefactor * sum;
}

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::BelowHalf: return "BELOW_D2";
    case Branch::AtHalf: return "AT_D2";
    case Branch::AboveHalf: return "ABOVE_D2";
    case Branch::OddSO: return "ODD_SO";
  }
  return "?";
}

}  // namespace heatcoef
