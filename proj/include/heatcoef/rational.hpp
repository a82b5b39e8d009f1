#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace heatcoef {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class; every constructor canonicalizes,
/// and GMP's arithmetic keeps results canonical.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  Rational(long numerator, long denominator);
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpq_class& q);

  /// Parses "p", "p/q", or a plain decimal literal such as "2.5" or "-1e-3".
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& get_mpq() const noexcept { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// "p/q" with q >= 1 always present.
  std::string str() const;
  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

/// base^exponent; negative exponents invert (base must then be non-zero).
Rational pow(const Rational& base, int exponent);
Rational abs(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace heatcoef
