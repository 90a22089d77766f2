#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace hyperinv {

using Cx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Precondition / parameter-domain violation. CLI maps this to exit code 2.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Iteration or quadrature failed to reach its tolerance within its budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_finite(Cx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Cx z, const char* what) {
  if (!is_finite(z)) throw DomainError(std::string(what) + ": non-finite complex value");
}

/// True when z lies exactly on {0, -1, -2, ...}.
inline bool is_nonpositive_int(Cx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

inline bool is_real_int(Cx z) {
  return z.imag() == 0.0 && z.real() == std::floor(z.real());
}

/// Operator parameter domain for x: the complex plane minus the closed
/// negative real axis and the point 1.
inline bool in_operator_x_domain(Cx x) {
  if (x.imag() != 0.0) return true;
  return x.real() > 0.0 && x.real() != 1.0;
}

}  // namespace hyperinv
