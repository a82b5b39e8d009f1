#pragma once

#include <stdexcept>
#include <string>

namespace heatcoef {

/// Argument outside an operation's documented domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested quantity has no closed form here (the SU(q,1), q even,
/// cotangent density).
class NotCovered : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adding two non-zero pi-scaled values with different pi exponents.
class MixedExponentError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Numerical extraction ran out of working precision at coefficient `k`.
class PrecisionExhausted : public std::runtime_error {
 public:
  PrecisionExhausted(int k, const std::string& detail)
      : std::runtime_error("precision exhausted at k=" + std::to_string(k) +
                           ": " + detail),
        k_(k) {}

  int k() const noexcept { return k_; }

 private:
  int k_;
};

}  // namespace heatcoef
