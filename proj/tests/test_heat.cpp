#include <gtest/gtest.h>

#include <cmath>

#include "heatcoef/error.hpp"
#include "heatcoef/heat.hpp"

using namespace heatcoef;

namespace {

PiScaledRational pi_scaled(long num, long den, int half_exp) { return {Rational(num, den), half_exp}; }

const SpaceDescriptor so2 = describe(Family::RealHyperbolic, 2);
const SpaceDescriptor so3 = describe(Family::RealHyperbolic, 3);
const SpaceDescriptor so4 = describe(Family::RealHyperbolic, 4);
const SpaceDescriptor su2 = describe(Family::ComplexHyperbolic, 2);

std::vector<SpaceDescriptor> covered_spaces(int max_d) {
  std::vector<SpaceDescriptor> out;
  for (const auto& s : admissible_spaces(max_d)) {
    if (!s.is_cotangent()) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(CoeffClosed, Examples) {
  EXPECT_EQ(coeff_closed(so2, 0), pi_scaled(1, 1, 2));
  EXPECT_EQ(coeff_closed(so2, 1), pi_scaled(-1, 3, 2));
  EXPECT_EQ(coeff_closed(so3, 0), pi_scaled(1, 1, 2));
  EXPECT_EQ(coeff_closed(so4, 1), pi_scaled(-1, 2, 4));
  EXPECT_THROW(coeff_closed(su2, 0), NotCovered);
  EXPECT_THROW(coeff_closed(so2, -1), InvalidArgument);
}

TEST(CoeffViaZeta, Examples) {
  EXPECT_EQ(coeff_via_zeta(so4, 0, SpectralParams{}), pi_scaled(1, 4, 4));
  EXPECT_EQ(coeff_via_zeta(so3, 1, SpectralParams{}), pi_scaled(-1, 1, 2));
  for (int n0 : {0, 1, 7}) {
    EXPECT_EQ(coeff_via_zeta(so2, 1, SpectralParams{1, Rational(1), n0}), pi_scaled(-1, 3, 2));
  }
  EXPECT_THROW(coeff_via_zeta(su2, 1, SpectralParams{}), NotCovered);
}

// Values below were derived by expanding the identity term through
// Gaussian and Fermi-Dirac moments (tests/oracles/derive_heat_coefficients.py).
TEST(CoefficientTable, FrozenIndependentValues) {
  struct Case {
    Family family;
    std::optional<int> n;
    std::vector<PiScaledRational> expected;
  };
  const std::vector<Case> cases = {
      {Family::RealHyperbolic, 2, {pi_scaled(1, 1, 2), pi_scaled(-1, 3, 2), pi_scaled(1, 15, 2), pi_scaled(-4, 315, 2)}},
      {Family::RealHyperbolic, 3, {pi_scaled(1, 1, 2), pi_scaled(-1, 1, 2), pi_scaled(1, 2, 2)}},
      {Family::RealHyperbolic, 4, {pi_scaled(1, 4, 4), pi_scaled(-1, 2, 4), pi_scaled(29, 60, 4), pi_scaled(-37, 126, 4)}},
      {Family::RealHyperbolic, 5, {pi_scaled(1, 6, 4), pi_scaled(-5, 9, 4), pi_scaled(8, 9, 4), pi_scaled(-8, 9, 4)}},
      {Family::RealHyperbolic, 6, {pi_scaled(1, 32, 6), pi_scaled(-5, 32, 6), pi_scaled(3, 8, 6)}},
      {Family::RealHyperbolic, 7, {pi_scaled(1, 60, 6), pi_scaled(-7, 60, 6), pi_scaled(707, 1800, 6)}},
      {Family::RealHyperbolic, 8, {pi_scaled(1, 384, 8), pi_scaled(-7, 288, 8), pi_scaled(7, 64, 8)}},
      {Family::ComplexHyperbolic,
       3,
       {pi_scaled(1, 64, 6), pi_scaled(-1, 8, 6), pi_scaled(1, 2, 6), pi_scaled(-424, 315, 6), pi_scaled(884, 315, 6)}},
      {Family::QuaternionicHyperbolic,
       2,
       {pi_scaled(1, 3072, 8), pi_scaled(-1, 144, 8), pi_scaled(7, 96, 8), pi_scaled(-1, 2, 8)}},
      {Family::QuaternionicHyperbolic, 3, {pi_scaled(1, 983040, 12), pi_scaled(-1, 24576, 12)}},
      {Family::OctonionicHyperbolic,
       std::nullopt,
       {pi_scaled(1, 10569646080, 16), pi_scaled(-1, 110100480, 16), pi_scaled(71, 165150720, 16)}},
  };
  for (const auto& c : cases) {
    const auto desc = describe(c.family, c.n);
    const auto table = coefficient_table(desc, static_cast<int>(c.expected.size()) - 1, SpectralParams{});
    for (std::size_t k = 0; k < c.expected.size(); ++k) {
      EXPECT_EQ(table.entries[k].value, c.expected[k]) << desc.name() << " k=" << k;
    }
  }
}

TEST(CoefficientTable, DenseWithBranches) {
  const auto table = coefficient_table(so4, 5, SpectralParams{});
  ASSERT_EQ(table.entries.size(), 6u);
  const Branch expected[] = {Branch::BelowHalf, Branch::BelowHalf, Branch::AtHalf,
                             Branch::AboveHalf, Branch::AboveHalf, Branch::AboveHalf};
  for (int k = 0; k <= 5; ++k) {
    EXPECT_EQ(table.entries[k].k, k);
    EXPECT_EQ(table.entries[k].branch, expected[k]);
  }
  EXPECT_EQ(coefficient_table(so3, 2, SpectralParams{}).entries[2].branch, Branch::OddSO);
  EXPECT_THROW(coefficient_table(su2, 0, SpectralParams{}), NotCovered);
  EXPECT_THROW(coefficient_table(so2, -1, SpectralParams{}), InvalidArgument);
}

TEST(DualPath, ClosedFormsEqualZetaRoute) {
  for (const auto& s : covered_spaces(16)) {
    const int kmax = (s.d + 1) / 2 + 4;
    for (int k = 0; k <= kmax; ++k) {
      EXPECT_EQ(coeff_closed(s, k), coeff_via_zeta(s, k, SpectralParams{})) << s.name() << " k=" << k;
    }
  }
}

TEST(DualPath, MiddleCoefficientIndependentOfN0) {
  for (const auto& s : covered_spaces(16)) {
    if (s.is_odd_dimensional()) continue;
    const int half = s.d / 2;
    const auto base = coeff_via_zeta(s, half, SpectralParams{1, Rational(1), 0});
    for (int n0 : {1, 5}) EXPECT_EQ(coeff_via_zeta(s, half, SpectralParams{1, Rational(1), n0}), base) << s.name();
  }
}

TEST(OddForms, GammaAndFactorialFormsAgree) {
  for (int n = 1; n <= 7; ++n) {
    const auto s = describe(Family::RealHyperbolic, 2 * n + 1);
    for (int k = 0; k <= 10; ++k) {
      EXPECT_EQ(coeff_closed(s, k), coeff_closed_factorial_form(s, k)) << s.name() << " k=" << k;
    }
  }
  EXPECT_THROW(coeff_closed_factorial_form(so4, 0), InvalidArgument);
}

TEST(CurvatureRatio, RealHyperbolic) {
  for (int n = 2; n <= 8; ++n) {
    const auto s = describe(Family::RealHyperbolic, n);
    const auto ratio = coeff_closed(s, 1) / coeff_closed(s, 0);
    EXPECT_EQ(ratio, PiScaledRational(Rational(-n * (n - 1), 6))) << s.name();
  }
}

TEST(EvaluateExpansion, Examples) {
  const auto table = coefficient_table(so2, 2, SpectralParams{});
  const Real t(0.01, 200);
  const double value = evaluate_expansion(table, SpectralParams{}, t, 2).to_double();
  EXPECT_NEAR(value, 25.0 * (1.0 - 1.0 / 300.0 + 1e-4 / 15.0), 1e-12);
  EXPECT_NEAR(value, 24.9168333333333, 1e-10);

  const double single = evaluate_expansion(table, SpectralParams{}, t, 0).to_double();
  EXPECT_NEAR(single, 1.0 / (4.0 * M_PI * 0.01) * M_PI, 1e-12);

  const auto odd = coefficient_table(so3, 1, SpectralParams{});
  const double odd_value = evaluate_expansion(odd, SpectralParams{}, Real(0.1, 200), 1).to_double();
  EXPECT_NEAR(odd_value, std::pow(4.0 * M_PI * 0.1, -1.5) * M_PI * (1.0 - 0.1), 1e-13);

  const SpectralParams scaled{2, Rational(3, 2), 0};
  EXPECT_NEAR(evaluate_expansion(table, scaled, t, 2).to_double(), 3.0 * value, 1e-11);

  EXPECT_THROW(evaluate_expansion(table, SpectralParams{}, t, 3), InvalidArgument);
  EXPECT_THROW(evaluate_expansion(table, SpectralParams{}, Real(-1.0, 64), 0), InvalidArgument);
}
