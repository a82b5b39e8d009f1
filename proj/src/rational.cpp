#include "heatcoef/rational.hpp"

#include <ostream>
#include <regex>

#include "heatcoef/error.hpp"

namespace heatcoef {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw InvalidArgument("Rational: zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw InvalidArgument("Rational: zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  static const std::regex fraction(R"(^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$)");
  static const std::regex decimal(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, fraction)) {
    mpz_class num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
    mpz_class den(m[2].matched ? m[2].str() : std::string("1"));
    return Rational(num, den);
  }
  if (std::regex_match(s, m, decimal) && (m[2].length() + m[3].length()) > 0) {
    const std::string digits = m[2].str() + m[3].str();
    long exponent = m[4].matched ? std::stol(m[4].str()) : 0;
    exponent -= static_cast<long>(m[3].length());
    mpz_class num(digits);
    if (m[1].str() == "-") num = -num;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    return exponent >= 0 ? Rational(mpz_class(num * scale), mpz_class(1)) : Rational(num, scale);
  }
  throw InvalidArgument("Rational: cannot parse '" + s + "'");
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw InvalidArgument("Rational: zero to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  mpz_class num, den;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), base.get_mpq().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_mpq().get_den_mpz_t(), e);
  return Rational(num, den);
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace heatcoef
