#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heatcoef/pi_scaled.hpp"
#include "heatcoef/rational.hpp"
#include "heatcoef/real.hpp"

namespace heatcoef {

/// The four rank-1 families G/K.
enum class Family {
  RealHyperbolic,           // SO_1(n,1)/SO(n)
  ComplexHyperbolic,        // SU(n,1)/U(n)
  QuaternionicHyperbolic,   // SP(n,1)/(SP(n) x SP(1))
  OctonionicHyperbolic,     // F_4(-20)/Spin(9), no parameter
};

/// a(G): pi for SO_1(even,1), pi/2 for SU(odd,1), SP(n,1), F_4(-20).
enum class AGKind { Pi, PiHalf };

/// Shape of the Plancherel density |c(r)|^-2.
enum class DensityKind {
  TanhFull,    // C_G pi r P(r) tanh(pi r)
  TanhHalf,    // C_G pi r P(r) tanh(pi r / 2)
  CothHalf,    // C_G pi r P(r) coth(pi r / 2)
  Polynomial,  // C_G pi P(r)
};

/// Factor r^2 * r2_coeff + constant of the tabulated product P(r).
struct QuadraticFactor {
  Rational r2_coeff;
  Rational constant;
};

/// Even polynomial sum_j coeffs[j] r^(2j); coeffs[j] is a_{2j}.
struct EvenPolynomial {
  std::vector<Rational> coeffs;

  /// Degree in r (twice the highest non-zero index); 0 for constants and zero.
  int degree() const;
  /// a_{2j}, or zero past the stored range.
  Rational a(int j) const;
  Rational evaluate(const Rational& r) const;
  Real evaluate(const Real& r) const;
};

struct SpaceDescriptor {
  Family family;
  std::optional<int> n;  // absent for F_4(-20)
  int d;
  Rational rho0;
  PiScaledRational c_g;
  std::optional<AGKind> a_g_kind;  // absent for SO_1(odd,1) and SU(even,1)
  DensityKind density_kind;
  std::vector<QuadraticFactor> factors;
  EvenPolynomial polynomial;

  /// "SO(4,1)", "SU(3,1)", "SP(2,1)", "F4(-20)".
  std::string name() const;
  bool is_odd_dimensional() const { return density_kind == DensityKind::Polynomial; }
  bool is_cotangent() const { return density_kind == DensityKind::CothHalf; }
};

/// Descriptor for (family, n). Throws InvalidArgument when n < 2 for the
/// parametrized families, or when n is given for F_4(-20).
SpaceDescriptor describe(Family family, std::optional<int> n);

/// Expanded product of `desc.factors`; the empty product is 1.
EvenPolynomial plancherel_polynomial(const SpaceDescriptor& desc);

/// True iff P(r) has degree d-2 (d-1 for SO_1(odd,1)).
bool degree_check(const SpaceDescriptor& desc);

/// Every admissible space of real dimension <= max_dimension, ordered by family then n.
std::vector<SpaceDescriptor> admissible_spaces(int max_dimension);

std::string_view to_string(Family family);
std::string_view to_string(AGKind kind);
std::string_view to_string(DensityKind kind);
/// Accepts "so", "su", "sp", "f4" (case-insensitive).
Family parse_family(std::string_view text);

}  // namespace heatcoef
