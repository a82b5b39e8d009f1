#include "heatcoef/zeta.hpp"

#include "heatcoef/error.hpp"
#include "heatcoef/special.hpp"

namespace heatcoef {

void SpectralParams::validate() const {
  if (chi_dim < 1) throw InvalidArgument("chi_dim must be >= 1");
  if (volume.sign() <= 0) throw InvalidArgument("volume must be > 0");
  if (n0 < 0) throw InvalidArgument("n0 must be >= 0");
}

namespace {

void require_not_cotangent(const SpaceDescriptor& desc) {
  if (desc.is_cotangent()) {
    throw NotCovered(desc.name() + ": cotangent case not covered by closed forms");
  }
}

Rational sign_power(int e) { return Rational(e % 2 == 0 ? 1 : -1); }

}  // namespace

Rational b_coefficient(int p, int j, const SpaceDescriptor& desc) {
  if (p < 1 || j < 0) throw InvalidArgument("b_coefficient: need p >= 1, j >= 0");
  if (!desc.a_g_kind) throw InvalidArgument("b_coefficient: a(G) undefined for " + desc.name());
  const int m = p + j;
  const Rational ratio = *desc.a_g_kind == AGKind::Pi ? Rational(1) : Rational(2);
  return (pow(Rational(2), 1 - 2 * m) - Rational(1)) * pow(ratio, 2 * m) * sign_power(j) *
         bernoulli(2 * m) / (Rational(2 * m) * factorial(p - 1));
}

PiScaledRational residue_at(const SpaceDescriptor& desc, int m) {
  require_not_cotangent(desc);
  if (desc.is_odd_dimensional()) {
    throw InvalidArgument("residue_at: " + desc.name() + " has half-integer poles; use residue_at_half");
  }
  const int half = desc.d / 2;
  if (m < 1 || m > half) {
    throw InvalidArgument("residue_at: m must lie in [1, " + std::to_string(half) + "], got " + std::to_string(m));
  }
  const Rational rho2 = desc.rho0 * desc.rho0;
  Rational sum;
  for (int j = 0; j <= half - m; ++j) {
    sum += sign_power(j) * binomial(m + j - 1, j) * pow(rho2, j) * desc.polynomial.a(m + j - 1);
  }
  return PiScaledRational(Rational(1, 4) * sum) * desc.c_g;
}

PiScaledRational residue_at_half(const SpaceDescriptor& desc, int k) {
  if (!desc.is_odd_dimensional()) {
    throw InvalidArgument("residue_at_half: only SO(2n+1,1) has poles at d/2 - k; got " + desc.name());
  }
  if (k < 0) throw InvalidArgument("residue_at_half: k must be >= 0");
  const int n = (desc.d - 1) / 2;
  const PiScaledRational rho2(desc.rho0 * desc.rho0);
  const PiScaledRational gamma_pole = half_integer_gamma(n - k);
  PiScaledRational sum;
  if (k >= n) {
    for (int j = 0; j <= n; ++j) {
      const PiScaledRational term = PiScaledRational(sign_power(j + n + k) * pow(rho2.coeff(), j + k - n) *
                                                     desc.polynomial.a(j) / factorial(j - n + k)) *
                                    half_gamma(j) / gamma_pole;
      sum += term;
    }
  } else {
    for (int j = 0; j <= k; ++j) {
      const PiScaledRational term =
          PiScaledRational(sign_power(j) * pow(rho2.coeff(), j) * desc.polynomial.a(n - k + j) / factorial(j)) *
          half_gamma(n - k + j) / gamma_pole;
      sum += term;
    }
  }
  return PiScaledRational(Rational(1, 4)) * desc.c_g * sum;
}

ZetaResult special_value(const SpaceDescriptor& desc, int n, const SpectralParams& params) {
  require_not_cotangent(desc);
  if (n < 0) throw InvalidArgument("special_value: n must be >= 0");
  params.validate();
  ZetaResult result{ZetaKind::SpecialValue, Rational(-n), PiScaledRational(), n == 0 ? -params.n0 : 0};
  if (desc.is_odd_dimensional()) return result;

  const int half = desc.d / 2;
  const Rational& rho = desc.rho0;
  Rational first;
  for (int j = 0; j <= half - 1; ++j) {
    Rational denominator(1);  // (n+1)(n+2)...(n+j+1)
    for (int i = 1; i <= j + 1; ++i) denominator *= Rational(n + i);
    first += sign_power(j + 1) * factorial(j) * pow(rho, 2 * (j + n + 1)) * desc.polynomial.a(j) / denominator;
  }
  Rational second;
  for (int j = 0; j <= half - 1; ++j) {
    for (int k = 0; k <= n; ++k) {
      second += sign_power(k) * factorial(n) / factorial(n - k) * pow(rho, 2 * (n - k)) *
                b_coefficient(k + 1, j, desc) * desc.polynomial.a(j);
    }
  }
  result.value = PiScaledRational(Rational(1, 4) * (first + Rational(2) * second)) * desc.c_g;
  return result;
}

}  // namespace heatcoef
