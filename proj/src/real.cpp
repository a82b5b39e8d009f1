#include "heatcoef/real.hpp"

#include <cmath>
#include <ostream>
#include <vector>

#include "heatcoef/error.hpp"

namespace heatcoef {

mpfr_prec_t bits_for_digits(int decimal_digits) {
  return static_cast<mpfr_prec_t>(std::ceil(decimal_digits * 3.321928094887362)) + 8;
}

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(double value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, value.get_mpq().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const std::string& decimal, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw InvalidArgument("Real: cannot parse '" + decimal + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(const Real& other, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

std::string Real::str(int significant) const {
  if (significant < 1) significant = 1;
  std::vector<char> buf(static_cast<std::size_t>(significant) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", significant - 1, v_);
  return std::string(buf.data());
}

Real& Real::operator+=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real operator-(const Real& a) {
  Real r(a);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x.precision());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real expm1(const Real& x) {
  Real r(x.precision());
  mpfr_expm1(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  Real r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const Real& exponent) {
  Real r(std::max(base.precision(), exponent.precision()));
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, long exponent) {
  Real r(base.precision());
  mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Real& x) {
  return os << x.str(static_cast<int>(os.precision()));
}

}  // namespace heatcoef
