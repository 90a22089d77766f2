#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperinv/types.hpp"

namespace hyperinv {

/// Gamma evaluated at one point. `at_pole` is set exactly when the argument
/// is a nonpositive integer; `value` and `log_form` are NaN there. `log_form`
/// is the principal log-Gamma for Re(z) > 0; for Re(z) <= 0 it is a branch of
/// log Gamma(z) satisfying exp(log_form) == value.
struct GammaEval {
  Cx value{};
  Cx log_form{};
  bool at_pole = false;
};

GammaEval gamma(Cx z);

/// 1/Gamma(z); zero at the poles of Gamma.
Cx recip_gamma(Cx z);

/// Shorthand for gamma(z).log_form, Re(z) > 0 expected.
Cx log_gamma(Cx z);

/// psi = Gamma'/Gamma. Throws DomainError at nonpositive integers.
Cx digamma(Cx z);

/// Rising factorial (c)_m as a plain product; exact for integer c.
Cx pochhammer(Cx c, int m);

/// Terminating F(-m, beta; gamma; x). Requires gamma not in
/// {0, -1, ..., -(m-1)}; throws DomainError otherwise.
Cx hyp_poly(int m, Cx beta, Cx gamma_, Cx x);

/// Confluent hypergeometric Phi(alpha; beta; z) by series, with the Kummer
/// transform for strongly negative Re(z). beta must avoid -N.
Cx confluent_phi(Cx alpha, Cx beta, Cx z);

/// Gauss 2F1 by series for |z| < 1. Internal oracle helper (closed-form
/// M integrals, identity suite); not a general-purpose 2F1.
Cx gauss_2f1(Cx alpha, Cx beta, Cx gamma_, Cx z);

/// D_N(lambda, mu) as the defining finite sum of N terms.
Cx d_sum(int n_terms, Cx lambda, Cx mu);

/// D_N(lambda, mu) in closed form: the two-branch reduction, with the
/// explicit (-1)^m rule at integer lambda == mu (zero when m >= N or m < 0).
Cx d_closed(int n_terms, Cx lambda, Cx mu);

/// Randomized regression over the six classical Gauss-function identities
/// used in the derivations: the contiguous relation, the Euler transform,
/// the derivative relation, the 1-x argument swap, the Gauss summation at
/// z=1, and the Euler integral representation (checked by quadrature).
struct IdentityReport {
  struct Entry {
    std::string name;
    int trials = 0;
    double max_residual = 0.0;
    bool pass = false;
  };
  std::vector<Entry> entries;
  double max_residual = 0.0;
  bool all_pass = false;
};

IdentityReport identity_suite(std::uint64_t seed, int trials, double tol = 1e-8);

}  // namespace hyperinv
