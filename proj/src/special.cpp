#include "heatcoef/special.hpp"

#include <mutex>
#include <vector>

#include "heatcoef/error.hpp"

namespace heatcoef {

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

}  // namespace

// Recurrence sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1.
Rational bernoulli(int m) {
  if (m < 0) throw InvalidArgument("bernoulli: negative index");
  if (m > 1 && m % 2 == 1) return Rational(0);
  std::lock_guard lock(bernoulli_mutex);
  while (static_cast<int>(bernoulli_cache.size()) <= m) {
    const int next = static_cast<int>(bernoulli_cache.size());
    if (next > 1 && next % 2 == 1) {
      bernoulli_cache.emplace_back(0);
      continue;
    }
    Rational sum;
    for (int k = 0; k < next; ++k) {
      if (!bernoulli_cache[k].is_zero()) sum += binomial(next + 1, k) * bernoulli_cache[k];
    }
    bernoulli_cache.push_back(-sum / Rational(next + 1));
  }
  return bernoulli_cache[m];
}

PiScaledRational half_gamma(int m) {
  if (m < 0) throw InvalidArgument("half_gamma: negative argument");
  return {factorial(2 * m) / (pow(Rational(4), m) * factorial(m)), 1};
}

PiScaledRational half_integer_gamma(int i) {
  if (i >= 0) return half_gamma(i);
  // Gamma(i + 1/2) = Gamma(i + 3/2) / (i + 1/2)
  return half_integer_gamma(i + 1) / PiScaledRational(Rational(2 * i + 1, 2));
}

Rational binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw InvalidArgument("binomial: need 0 <= k <= n, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
  }
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r, mpz_class(1));
}

Rational factorial(int n) {
  if (n < 0) throw InvalidArgument("factorial: negative argument");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r, mpz_class(1));
}

}  // namespace heatcoef
