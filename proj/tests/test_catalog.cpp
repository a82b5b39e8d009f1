#include <gtest/gtest.h>

#include "heatcoef/catalog.hpp"
#include "heatcoef/error.hpp"

using namespace heatcoef;

namespace {
std::vector<Rational> coeffs_of(Family f, std::optional<int> n) { return describe(f, n).polynomial.coeffs; }
}  // namespace

TEST(Describe, RealHyperbolicFour) {
  const auto s = describe(Family::RealHyperbolic, 4);
  EXPECT_EQ(s.d, 4);
  EXPECT_EQ(s.rho0, Rational(3, 2));
  EXPECT_EQ(s.c_g, PiScaledRational(Rational(1, 16), 0));
  EXPECT_EQ(s.density_kind, DensityKind::TanhFull);
  EXPECT_EQ(s.a_g_kind, AGKind::Pi);
  EXPECT_EQ(s.name(), "SO(4,1)");
}

TEST(Describe, RealHyperbolicThreeHasInversePi) {
  const auto s = describe(Family::RealHyperbolic, 3);
  EXPECT_EQ(s.d, 3);
  EXPECT_EQ(s.rho0, Rational(1));
  // 2^2 Gamma(3/2)^2 = pi
  EXPECT_EQ(s.c_g, PiScaledRational(Rational(1), -2));
  EXPECT_EQ(s.density_kind, DensityKind::Polynomial);
  EXPECT_FALSE(s.a_g_kind.has_value());
}

TEST(Describe, ComplexHyperbolicThree) {
  const auto s = describe(Family::ComplexHyperbolic, 3);
  EXPECT_EQ(s.d, 6);
  EXPECT_EQ(s.rho0, Rational(3));
  EXPECT_EQ(s.c_g, PiScaledRational(Rational(1, 128)));
  EXPECT_EQ(s.density_kind, DensityKind::TanhHalf);
  EXPECT_EQ(s.a_g_kind, AGKind::PiHalf);
}

TEST(Describe, FamilyInvariants) {
  for (const auto& s : admissible_spaces(24)) {
    SCOPED_TRACE(s.name());
    switch (s.family) {
      case Family::RealHyperbolic:
        EXPECT_EQ(s.d, *s.n);
        EXPECT_EQ(s.rho0, Rational(*s.n - 1, 2));
        EXPECT_EQ(s.density_kind, *s.n % 2 == 0 ? DensityKind::TanhFull : DensityKind::Polynomial);
        EXPECT_EQ(s.a_g_kind.has_value(), *s.n % 2 == 0);
        break;
      case Family::ComplexHyperbolic:
        EXPECT_EQ(s.d, 2 * *s.n);
        EXPECT_EQ(s.rho0, Rational(*s.n));
        EXPECT_EQ(s.density_kind, *s.n % 2 == 1 ? DensityKind::TanhHalf : DensityKind::CothHalf);
        break;
      case Family::QuaternionicHyperbolic:
        EXPECT_EQ(s.d, 4 * *s.n);
        EXPECT_EQ(s.rho0, Rational(2 * *s.n + 1));
        EXPECT_EQ(s.a_g_kind, AGKind::PiHalf);
        break;
      case Family::OctonionicHyperbolic:
        EXPECT_EQ(s.d, 16);
        EXPECT_EQ(s.rho0, Rational(11));
        EXPECT_EQ(s.c_g, PiScaledRational(Rational(1) / (Rational(2097152) * Rational(5040 * 5040))));
        break;
    }
  }
}

TEST(Describe, RejectsInadmissible) {
  EXPECT_THROW(describe(Family::RealHyperbolic, 1), InvalidArgument);
  EXPECT_THROW(describe(Family::ComplexHyperbolic, 0), InvalidArgument);
  EXPECT_THROW(describe(Family::QuaternionicHyperbolic, std::nullopt), InvalidArgument);
  EXPECT_THROW(describe(Family::OctonionicHyperbolic, 2), InvalidArgument);
  EXPECT_NO_THROW(describe(Family::OctonionicHyperbolic, std::nullopt));
  EXPECT_THROW(parse_family("so3"), InvalidArgument);
  EXPECT_EQ(parse_family("F4"), Family::OctonionicHyperbolic);
}

TEST(PlancherelPolynomial, TabulatedExamples) {
  EXPECT_EQ(coeffs_of(Family::RealHyperbolic, 4), (std::vector<Rational>{Rational(1, 4), Rational(1)}));
  EXPECT_EQ(coeffs_of(Family::RealHyperbolic, 2), (std::vector<Rational>{Rational(1)}));
  EXPECT_EQ(coeffs_of(Family::ComplexHyperbolic, 3),
            (std::vector<Rational>{Rational(1, 16), Rational(1, 8), Rational(1, 16)}));
  // r^2 (r^2 + 1)
  EXPECT_EQ(coeffs_of(Family::RealHyperbolic, 5), (std::vector<Rational>{Rational(0), Rational(1), Rational(1)}));
}

TEST(PlancherelPolynomial, ExpansionMatchesFactoredProduct) {
  for (const auto& s : admissible_spaces(20)) {
    for (const Rational r : {Rational(0), Rational(1, 3), Rational(-2), Rational(7, 2)}) {
      Rational product(1);
      for (const auto& f : s.factors) product *= f.r2_coeff * r * r + f.constant;
      EXPECT_EQ(s.polynomial.evaluate(r), product) << s.name();
      EXPECT_EQ(s.polynomial.evaluate(-r), s.polynomial.evaluate(r)) << s.name();
    }
  }
}

TEST(DegreeCheck, Examples) {
  const auto sp2 = describe(Family::QuaternionicHyperbolic, 2);
  EXPECT_EQ(sp2.polynomial.degree(), 6);
  EXPECT_TRUE(degree_check(sp2));
  const auto so5 = describe(Family::RealHyperbolic, 5);
  EXPECT_EQ(so5.polynomial.degree(), 4);
  EXPECT_TRUE(degree_check(so5));
  const auto f4 = describe(Family::OctonionicHyperbolic, std::nullopt);
  EXPECT_EQ(f4.polynomial.degree(), 14);
  EXPECT_TRUE(degree_check(f4));
}

TEST(DegreeCheck, AllAdmissibleUpToTwenty) {
  const auto spaces = admissible_spaces(20);
  EXPECT_EQ(spaces.size(), 19u + 9u + 4u + 1u);
  for (const auto& s : spaces) EXPECT_TRUE(degree_check(s)) << s.name();
}

TEST(PlancherelPolynomial, OddRealHyperbolicHasNoConstantTerm) {
  EXPECT_EQ(coeffs_of(Family::RealHyperbolic, 3), (std::vector<Rational>{Rational(0), Rational(1)}));
  for (int n = 3; n <= 21; n += 2) EXPECT_TRUE(describe(Family::RealHyperbolic, n).polynomial.a(0).is_zero()) << n;
}

TEST(PlancherelPolynomial, CoefficientsNonNegative) {
  for (const auto& s : admissible_spaces(20)) {
    for (const auto& a : s.polynomial.coeffs) EXPECT_GE(a.sign(), 0) << s.name();
  }
}
