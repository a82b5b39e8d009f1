#include "heatcoef/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "heatcoef/error.hpp"
#include "heatcoef/special.hpp"

namespace heatcoef {

int EvenPolynomial::degree() const {
  for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j) {
    if (!coeffs[j].is_zero()) return 2 * j;
  }
  return 0;
}

Rational EvenPolynomial::a(int j) const {
  if (j < 0 || j >= static_cast<int>(coeffs.size())) return Rational(0);
  return coeffs[j];
}

Rational EvenPolynomial::evaluate(const Rational& r) const {
  const Rational r2 = r * r;
  Rational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r2 + *it;
  return acc;
}

Real EvenPolynomial::evaluate(const Real& r) const {
  const Real r2 = r * r;
  Real acc(r.precision());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * r2 + Real(*it, r.precision());
  }
  return acc;
}

std::string SpaceDescriptor::name() const {
  switch (family) {
    case Family::RealHyperbolic: return "SO(" + std::to_string(*n) + ",1)";
    case Family::ComplexHyperbolic: return "SU(" + std::to_string(*n) + ",1)";
    case Family::QuaternionicHyperbolic: return "SP(" + std::to_string(*n) + ",1)";
    case Family::OctonionicHyperbolic: return "F4(-20)";
  }
  return {};
}

namespace {

QuadraticFactor quarter_factor(const Rational& constant) { return {Rational(1, 4), constant}; }

// Table row SO_1(n,1): C_G = [2^(2n-4) Gamma(n/2)^2]^-1.
void fill_real(SpaceDescriptor& s, int n) {
  s.d = n;
  s.rho0 = Rational(n - 1, 2);
  const PiScaledRational gamma_half_n =
      n % 2 == 0 ? PiScaledRational(factorial(n / 2 - 1)) : half_gamma((n - 1) / 2);
  s.c_g = PiScaledRational(Rational(1)) /
          (PiScaledRational(pow(Rational(2), 2 * n - 4)) * gamma_half_n * gamma_half_n);
  if (n % 2 == 0) {
    const int m = n / 2;
    s.density_kind = DensityKind::TanhFull;
    s.a_g_kind = AGKind::Pi;
    for (int j = 0; j <= m - 2; ++j) s.factors.push_back({Rational(1), Rational((2 * j + 1) * (2 * j + 1), 4)});
  } else {
    const int m = (n - 1) / 2;
    s.density_kind = DensityKind::Polynomial;
    for (int j = 0; j <= m - 1; ++j) s.factors.push_back({Rational(1), Rational(j * j)});
  }
}

// Table row SU(n,1): C_G = [2^(2n-1) Gamma(n)^2]^-1.
void fill_complex(SpaceDescriptor& s, int n) {
  s.d = 2 * n;
  s.rho0 = Rational(n);
  s.c_g = PiScaledRational(Rational(1) / (pow(Rational(2), 2 * n - 1) * pow(factorial(n - 1), 2)));
  if (n % 2 == 1) {
    s.density_kind = DensityKind::TanhHalf;
    s.a_g_kind = AGKind::PiHalf;
  } else {
    s.density_kind = DensityKind::CothHalf;
  }
  for (int j = 1; j <= n - 1; ++j) s.factors.push_back(quarter_factor(Rational((n - 2 * j) * (n - 2 * j), 4)));
}

// Table row SP(n,1): C_G = [2^(4n+1) Gamma(2n)^2]^-1.
void fill_quaternionic(SpaceDescriptor& s, int n) {
  s.d = 4 * n;
  s.rho0 = Rational(2 * n + 1);
  s.c_g = PiScaledRational(Rational(1) / (pow(Rational(2), 4 * n + 1) * pow(factorial(2 * n - 1), 2)));
  s.density_kind = DensityKind::TanhHalf;
  s.a_g_kind = AGKind::PiHalf;
  s.factors.push_back(quarter_factor(Rational(1, 4)));
  for (int j = 3; j <= n + 1; ++j) {
    // (n - j + 3/2)^2 and (n - j + 5/2)^2
    const int lo = 2 * (n - j) + 3;
    const int hi = 2 * (n - j) + 5;
    s.factors.push_back(quarter_factor(Rational(lo * lo, 4)));
    s.factors.push_back(quarter_factor(Rational(hi * hi, 4)));
  }
}

// Table row F_4(-20): C_G = [2^21 Gamma(8)^2]^-1.
void fill_octonionic(SpaceDescriptor& s) {
  s.d = 16;
  s.rho0 = Rational(11);
  s.c_g = PiScaledRational(Rational(1) / (pow(Rational(2), 21) * pow(factorial(7), 2)));
  s.density_kind = DensityKind::TanhHalf;
  s.a_g_kind = AGKind::PiHalf;
  s.factors.push_back(quarter_factor(Rational(1, 4)));
  s.factors.push_back(quarter_factor(Rational(9, 4)));
  for (int j = 0; j <= 4; ++j) s.factors.push_back(quarter_factor(Rational((2 * j + 1) * (2 * j + 1), 4)));
}

}  // namespace

SpaceDescriptor describe(Family family, std::optional<int> n) {
  SpaceDescriptor s{family, n, 0, Rational(0), {}, std::nullopt, DensityKind::Polynomial, {}, {}};
  if (family == Family::OctonionicHyperbolic) {
    if (n) throw InvalidArgument("F4(-20) takes no parameter n");
    fill_octonionic(s);
  } else {
    if (!n) throw InvalidArgument(std::string(to_string(family)) + " requires a parameter n");
    if (*n < 2) throw InvalidArgument(std::string(to_string(family)) + ": need n >= 2, got " + std::to_string(*n));
    switch (family) {
      case Family::RealHyperbolic: fill_real(s, *n); break;
      case Family::ComplexHyperbolic: fill_complex(s, *n); break;
      case Family::QuaternionicHyperbolic: fill_quaternionic(s, *n); break;
      case Family::OctonionicHyperbolic: break;
    }
  }
  s.polynomial = plancherel_polynomial(s);
  return s;
}

EvenPolynomial plancherel_polynomial(const SpaceDescriptor& desc) {
  std::vector<Rational> coeffs{Rational(1)};
  for (const auto& f : desc.factors) {
    std::vector<Rational> next(coeffs.size() + 1);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j] += coeffs[j] * f.constant;
      next[j + 1] += coeffs[j] * f.r2_coeff;
    }
    coeffs = std::move(next);
  }
  return {std::move(coeffs)};
}

bool degree_check(const SpaceDescriptor& desc) {
  const int expected = desc.is_odd_dimensional() ? desc.d - 1 : desc.d - 2;
  return plancherel_polynomial(desc).degree() == expected;
}

std::vector<SpaceDescriptor> admissible_spaces(int max_dimension) {
  std::vector<SpaceDescriptor> out;
  for (int n = 2; n <= max_dimension; ++n) out.push_back(describe(Family::RealHyperbolic, n));
  for (int n = 2; 2 * n <= max_dimension; ++n) out.push_back(describe(Family::ComplexHyperbolic, n));
  for (int n = 2; 4 * n <= max_dimension; ++n) out.push_back(describe(Family::QuaternionicHyperbolic, n));
  if (16 <= max_dimension) out.push_back(describe(Family::OctonionicHyperbolic, std::nullopt));
  return out;
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::RealHyperbolic: return "so";
    case Family::ComplexHyperbolic: return "su";
    case Family::QuaternionicHyperbolic: return "sp";
    case Family::OctonionicHyperbolic: return "f4";
  }
  return "?";
}

std::string_view to_string(AGKind kind) { return kind == AGKind::Pi ? "pi" : "pi/2"; }

std::string_view to_string(DensityKind kind) {
  switch (kind) {
    case DensityKind::TanhFull: return "tanh_full";
    case DensityKind::TanhHalf: return "tanh_half";
    case DensityKind::CothHalf: return "coth_half";
    case DensityKind::Polynomial: return "polynomial";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "so") return Family::RealHyperbolic;
  if (lower == "su") return Family::ComplexHyperbolic;
  if (lower == "sp") return Family::QuaternionicHyperbolic;
  if (lower == "f4") return Family::OctonionicHyperbolic;
  throw InvalidArgument("unknown family '" + std::string(text) + "' (expected so|su|sp|f4)");
}

}  // namespace heatcoef
