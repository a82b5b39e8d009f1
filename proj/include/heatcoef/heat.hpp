#pragma once

#include <vector>

#include "heatcoef/catalog.hpp"
#include "heatcoef/pi_scaled.hpp"
#include "heatcoef/real.hpp"
#include "heatcoef/zeta.hpp"

namespace heatcoef {

/// Which closed form produced a coefficient.
enum class Branch {
  BelowHalf,  // k < d/2
  AtHalf,     // k = d/2
  AboveHalf,  // k > d/2
  OddSO,      // SO_1(2n+1,1), any k
};

struct CoefficientEntry {
  int k;
  PiScaledRational value;  // per unit chi(1) Vol(Gamma\G)
  Branch branch;
};

/// Dense A_0..A_{k_max}, each entry already cross-checked between the closed
/// forms and the zeta route.
struct CoefficientTable {
  SpaceDescriptor desc;
  int k_max;
  std::vector<CoefficientEntry> entries;
};

Branch branch_for(const SpaceDescriptor& desc, int k);

/// A_k from the closed-form coefficient formulas (per unit chi(1) Vol).
/// Throws NotCovered for the cotangent case.
PiScaledRational coeff_closed(const SpaceDescriptor& desc, int k);

/// A_k for SO_1(2n+1,1) in the factorial form, with Gamma(m + 1/2) expanded
/// as sqrt(pi) (2m)! / (4^m m!). Must agree with coeff_closed.
PiScaledRational coeff_closed_factorial_form(const SpaceDescriptor& desc, int k);

/// A_k from residues and special values of the spectral zeta function.
/// The n0 contributions at k = d/2 cancel, so the result is n0-independent.
PiScaledRational coeff_via_zeta(const SpaceDescriptor& desc, int k, const SpectralParams& params);

/// Builds A_0..A_{k_max}; throws std::logic_error if the two routes disagree.
CoefficientTable coefficient_table(const SpaceDescriptor& desc, int k_max, const SpectralParams& params);

/// chi(1) Vol (4 pi t)^(-d/2) sum_{k<=N} A_k t^k at the precision of `t`.
Real evaluate_expansion(const CoefficientTable& table, const SpectralParams& params, const Real& t, int N);

std::string_view to_string(Branch branch);

}  // namespace heatcoef
