#pragma once

#include <vector>

#include "hyperinv/inversion.hpp"
#include "hyperinv/types.hpp"

namespace hyperinv {

/// Truncated power series: coeffs[j] multiplies z^j, j = 0..order.
struct PowerSeries {
  int order = 0;
  std::vector<Cx> coeffs;

  explicit PowerSeries(int n) : order(n), coeffs(n + 1, Cx(0.0, 0.0)) {}

  PowerSeries mul(const PowerSeries& o) const;
  /// exp of a series with zero constant term.
  PowerSeries exp() const;
  Cx eval(Cx z) const;
};

struct GfParams {
  Cx x{};
  Cx nu{};
  int order = 24;
};

/// Xi(z) = z/(z-1) ((1-z)/(1-z(1-x)))^nu, principal branch for the power.
/// `near_cut`, when given, is set if the power's base argument comes within
/// 1e-8 of the negative-axis branch cut.
Cx xi(Cx z, const GfParams& p, bool* near_cut = nullptr);

/// Taylor coefficients of Xi at 0 up to p.order, by series exp/mul recurrences.
PowerSeries xi_series(const GfParams& p);

/// Unique analytic solution of 1 - Theta + w Theta^{1-nu} = 0 with Theta(0)=1,
/// pinned by Newton continuation along the ray 0 -> w.
Cx theta(Cx w, Cx nu);

/// Partial sum of Sigma(w) = sum_b G(b(1-nu))/(G(b)G(1-b nu)) w^b.
/// Optionally reports a geometric tail estimate.
Cx sigma_series(Cx w, Cx nu, int terms, double* tail_bound = nullptr);

/// Sigma(w) = (Theta(w) - 1)/(nu Theta(w) + 1 - nu).
Cx sigma_closed(Cx w, Cx nu);

/// Convergence radius R(nu) = exp(-Re psi(nu)) with the three-branch psi.
double radius_r(Cx nu);

/// |w Sigma' - Sigma (1 - nu Sigma)(1 + (1-nu) Sigma)| with Sigma' by a
/// 4th-order central difference of sigma_closed, step 1e-4 R(nu).
double ode_residual(Cx w, Cx nu);

/// Inverse mapping of Xi: Omega(xi) = Sigma(x xi) / ((1-x(1-nu)) Sigma(x xi) - x).
Cx omega(Cx xi_val, const GfParams& p);

/// Max coefficient mismatch, up to p.order, between the ordinary generating
/// series of S = B*T and the closed-form transform of the series of T.
/// `prefactor_zero`, when given, flags a zero of the bracket prefactor within
/// the truncation disk (the inverse-direction reading divides by it).
double ogf_relation_residual(const Seq& t_seq, const GfParams& p,
                             bool* prefactor_zero = nullptr);

/// Exponential generating function of S = B*T:
/// e^z sum_k (-1)^k T_k z^k/k! Phi(k nu; k; -x z).
Cx egf_s(Cx z, const Seq& t_seq, const GfParams& p);

}  // namespace hyperinv
