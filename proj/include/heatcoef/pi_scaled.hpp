#pragma once

#include <iosfwd>
#include <string>

#include "heatcoef/rational.hpp"
#include "heatcoef/real.hpp"

namespace heatcoef {

/// Exact value coeff * pi^(pi_half_exponent / 2).
///
/// Zero is canonically (0, 0) and acts as the additive identity for every
/// exponent. Adding two non-zero values with different exponents throws
/// MixedExponentError.
class PiScaledRational {
 public:
  PiScaledRational() = default;
  PiScaledRational(Rational coeff, int pi_half_exponent = 0);  // NOLINT

  /// pi^(half_exponent / 2).
  static PiScaledRational pi_power(int half_exponent) { return {Rational(1), half_exponent}; }
  /// (4 pi)^(half_exponent / 2) = 2^half_exponent * pi^(half_exponent / 2).
  static PiScaledRational four_pi_power(int half_exponent);

  const Rational& coeff() const noexcept { return coeff_; }
  int pi_half_exponent() const noexcept { return exp_; }
  bool is_zero() const { return coeff_.is_zero(); }

  /// Numeric value at the given binary precision.
  Real to_real(mpfr_prec_t bits) const;
  /// Scientific decimal with `significant` digits.
  std::string decimal(int significant) const;
  /// e.g. "(-1/3)*pi^(2/2)".
  std::string str() const;

  PiScaledRational& operator+=(const PiScaledRational& o);
  PiScaledRational& operator-=(const PiScaledRational& o);
  PiScaledRational& operator*=(const PiScaledRational& o);
  PiScaledRational& operator/=(const PiScaledRational& o);

  friend PiScaledRational operator+(PiScaledRational a, const PiScaledRational& b) { return a += b; }
  friend PiScaledRational operator-(PiScaledRational a, const PiScaledRational& b) { return a -= b; }
  friend PiScaledRational operator*(PiScaledRational a, const PiScaledRational& b) { return a *= b; }
  friend PiScaledRational operator/(PiScaledRational a, const PiScaledRational& b) { return a /= b; }
  friend PiScaledRational operator-(const PiScaledRational& a) { return {-a.coeff_, a.exp_}; }

  friend bool operator==(const PiScaledRational& a, const PiScaledRational& b) {
    return a.exp_ == b.exp_ && a.coeff_ == b.coeff_;
  }

 private:
  void canonicalize() {
    if (coeff_.is_zero()) exp_ = 0;
  }

  Rational coeff_;
  int exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PiScaledRational& x);

}  // namespace heatcoef
