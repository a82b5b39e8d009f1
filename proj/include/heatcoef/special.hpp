#pragma once

#include "heatcoef/pi_scaled.hpp"
#include "heatcoef/rational.hpp"

namespace heatcoef {

/// Bernoulli number B_m with B_1 = -1/2 (so B_2 = 1/6, B_4 = -1/30).
/// Memoized; safe to call concurrently.
Rational bernoulli(int m);

/// Gamma(m + 1/2) = (2m)! / (4^m m!) * pi^(1/2), for m >= 0.
PiScaledRational half_gamma(int m);

/// Gamma(i + 1/2) for any integer i, using Gamma(x) = Gamma(x + 1) / x below 1/2.
PiScaledRational half_integer_gamma(int i);

/// n choose k; throws InvalidArgument unless 0 <= k <= n.
Rational binomial(int n, int k);

/// n! for n >= 0.
Rational factorial(int n);

}  // namespace heatcoef
