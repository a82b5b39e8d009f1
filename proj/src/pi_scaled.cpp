#include "heatcoef/pi_scaled.hpp"

#include <ostream>

#include "heatcoef/error.hpp"

namespace heatcoef {

PiScaledRational::PiScaledRational(Rational coeff, int pi_half_exponent)
    : coeff_(std::move(coeff)), exp_(pi_half_exponent) {
  canonicalize();
}

PiScaledRational PiScaledRational::four_pi_power(int half_exponent) {
  return {pow(Rational(2), half_exponent), half_exponent};
}

Real PiScaledRational::to_real(mpfr_prec_t bits) const {
  Real value(coeff_, bits);
  if (exp_ == 0 || is_zero()) return value;
  Real pi = Real::pi(bits);
  if (exp_ % 2 == 0) return value * pow(pi, exp_ / 2);
  return value * pow(sqrt(pi), exp_);
}

std::string PiScaledRational::decimal(int significant) const {
  return to_real(bits_for_digits(significant + 10)).str(significant);
}

std::string PiScaledRational::str() const {
  return "(" + coeff_.str() + ")*pi^(" + std::to_string(exp_) + "/2)";
}

PiScaledRational& PiScaledRational::operator+=(const PiScaledRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (exp_ != o.exp_) {
    throw MixedExponentError("cannot add pi^(" + std::to_string(exp_) + "/2) and pi^(" +
                             std::to_string(o.exp_) + "/2) terms");
  }
  coeff_ += o.coeff_;
  canonicalize();
  return *this;
}

PiScaledRational& PiScaledRational::operator-=(const PiScaledRational& o) { return *this += -o; }

PiScaledRational& PiScaledRational::operator*=(const PiScaledRational& o) {
  coeff_ *= o.coeff_;
  exp_ += o.exp_;
  canonicalize();
  return *this;
}

PiScaledRational& PiScaledRational::operator/=(const PiScaledRational& o) {
  if (o.is_zero()) throw InvalidArgument("PiScaledRational: division by zero");
  coeff_ /= o.coeff_;
  exp_ -= o.exp_;
  canonicalize();
  return *this;
}

std::ostream& operator<<(std::ostream& os, const PiScaledRational& x) { return os << x.str(); }

}  // namespace heatcoef
