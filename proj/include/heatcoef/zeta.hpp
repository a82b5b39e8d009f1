#pragma once

#include "heatcoef/catalog.hpp"
#include "heatcoef/pi_scaled.hpp"
#include "heatcoef/rational.hpp"

namespace heatcoef {

/// Data of the quotient that the closed forms see only as multipliers:
/// chi(1), Vol(Gamma\G) (Haar normalization as in the Plancherel constant),
/// and the multiplicity n0 of the zero eigenvalue.
struct SpectralParams {
  int chi_dim = 1;
  Rational volume{1};
  int n0 = 0;

  /// Throws InvalidArgument unless chi_dim >= 1, volume > 0, n0 >= 0.
  void validate() const;
  /// chi(1) * Vol(Gamma\G).
  Rational scale() const { return Rational(chi_dim) * volume; }
};

enum class ZetaKind { Residue, SpecialValue };

/// A residue or special value of the spectral zeta function. `value` is per
/// unit chi(1) Vol(Gamma\G); `n0_term` is the absolute contribution (only
/// non-zero at s = 0, where it is -n0).
struct ZetaResult {
  ZetaKind kind;
  Rational location;
  PiScaledRational value;
  long n0_term = 0;
};

/// b_p(j) = [2^(1-2(p+j)) - 1] [pi/a(G)]^(2(p+j)) (-1)^j B_{2(p+j)} / (2(p+j) (p-1)!).
/// Requires desc.a_g_kind.
Rational b_coefficient(int p, int j, const SpaceDescriptor& desc);

/// Residue at s = m, 1 <= m <= d/2, for the even-dimensional tanh cases.
PiScaledRational residue_at(const SpaceDescriptor& desc, int m);

/// Residue at s = d/2 - k for SO_1(2n+1,1).
PiScaledRational residue_at_half(const SpaceDescriptor& desc, int k);

/// zeta(-n). At n = 0 the -n0 correction is carried in n0_term.
ZetaResult special_value(const SpaceDescriptor& desc, int n, const SpectralParams& params);

}  // namespace heatcoef
