#pragma once

#include <iosfwd>
#include <string>

#include <mpfr.h>

#include "heatcoef/rational.hpp"

namespace heatcoef {

/// Number of MPFR mantissa bits that carry `decimal_digits` decimal digits.
mpfr_prec_t bits_for_digits(int decimal_digits);

/// Multiprecision binary float with an explicit per-value precision.
///
/// Binary operations round to the larger of the operand precisions, so a
/// computation seeded with a given precision stays at that precision without
/// touching process-wide state.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 64);
  Real(double value, mpfr_prec_t bits);
  Real(const Rational& value, mpfr_prec_t bits);
  Real(const std::string& decimal, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real pi(mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  /// Scientific notation with `significant` digits, e.g. "3.1415e+00".
  std::string str(int significant) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  friend Real operator+(const Real& a, const Real& b) { Real r(a, wider(a, b)); return r += b; }
  friend Real operator-(const Real& a, const Real& b) { Real r(a, wider(a, b)); return r -= b; }
  friend Real operator*(const Real& a, const Real& b) { Real r(a, wider(a, b)); return r *= b; }
  friend Real operator/(const Real& a, const Real& b) { Real r(a, wider(a, b)); return r /= b; }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }
  friend Real operator-(const Real& a);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  Real(const Real& other, mpfr_prec_t bits);
  static mpfr_prec_t wider(const Real& a, const Real& b) {
    return a.precision() > b.precision() ? a.precision() : b.precision();
  }

  mpfr_t v_;
};

Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real sqrt(const Real& x);
Real abs(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real max(const Real& a, const Real& b);

std::ostream& operator<<(std::ostream& os, const Real& x);

}  // namespace heatcoef
