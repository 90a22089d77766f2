#pragma once

#include <functional>
#include <vector>

#include "hyperinv/inversion.hpp"
#include "hyperinv/types.hpp"

namespace hyperinv {

/// Truncated element of H0 (entire, vanishing at 0) in exponential-coefficient
/// form: f(z) = sum_{l=1}^{order} c_l z^l / l!. Coefficients are plain; the
/// (-1)^b K_b bookkeeping of the right-hand sides lives in conversion helpers,
/// not here.
class H0Series {
 public:
  H0Series() = default;
  explicit H0Series(int order) : c_(order, Cx(0.0, 0.0)) {}
  explicit H0Series(std::vector<Cx> coeffs) : c_(std::move(coeffs)) {}

  int order() const { return int(c_.size()); }
  Cx& c(int l) { return c_[l - 1]; }
  const Cx& c(int l) const { return c_[l - 1]; }
  const std::vector<Cx>& raw() const { return c_; }
  std::vector<Cx>& raw() { return c_; }

  Cx eval(Cx z) const;
  /// |c_N| |z|^N / N!, the tracked truncation-tail estimate at |z|.
  double tail_estimate(double abs_z) const;
  /// derivative as a plain polynomial evaluation (not in H0: f'(0) = c_1)
  Cx eval_derivative(Cx z) const;

 private:
  std::vector<Cx> c_;
};

struct ContourSpec {
  double rho = 0.5;       // circle radius, in (0,1)
  int circle_nodes = 32;  // starting counts; doubled until convergence
  int leg_nodes = 32;
};

struct OperatorParams {
  Cx x{};
  Cx nu{};
  QuadSettings quad{1e-10, 1e-10, 60};
  ContourSpec contour{};

  /// Operator domain: x outside R^- u {1}, Re(nu) < 0.
  OperatorParams(Cx x_, Cx nu_);

  /// Relaxed constructor for the loop representation of the inverse, which
  /// stays a valid integral for Re(nu) < 1 even where the operator itself is
  /// undefined. Results computed with Re(nu) >= 0 carry the
  /// unverified_domain flag.
  static OperatorParams for_contour_representation(Cx x_, Cx nu_);

  Cx c() const { return (1.0 - nu * x) / (1.0 - x); }
  Cx c0() const { return x * nu * (1.0 - nu) / (1.0 - x); }

 private:
  struct relaxed_tag {};
  OperatorParams(Cx x_, Cx nu_, relaxed_tag);
};

/// t_hat = nu/(nu-1) and tau_hat = t_hat^{-nu}(1 - t_hat), real nu < 0.
struct VolterraGeometry {
  double t_hat = 0.0;
  double tau_hat = 0.0;
  explicit VolterraGeometry(double nu);
};

/// r(zeta) = (1-zeta)^{-nu} (1-(1-x)zeta)^{nu-1}, principal powers.
Cx r_factor(double zeta, const OperatorParams& p);

Cx eval_h0(const H0Series& f, Cx z, bool* truncation_warning = nullptr);

/// L f(z) by adaptive quadrature of the defining integral.
Cx apply_l_quad(const H0Series& f, Cx z, const OperatorParams& p);
Cx apply_l_quad(const std::function<Cx(Cx)>& f, const std::function<Cx(Cx)>& fprime, Cx z,
                const OperatorParams& p);

/// L f through the triangular system: K_b = sum_l (-1)^l C(b,l) Q_{b,l} E_l,
/// returned in plain-coefficient convention (coef b = (-1)^b K_b).
H0Series apply_l_series(const H0Series& f, const OperatorParams& p);

/// M f(z) by quadrature (t = u^2 substitution tames the t -> 0 endpoint).
Cx apply_m_quad(const std::function<Cx(Cx)>& f, Cx z, const OperatorParams& p);
Cx apply_m_quad(const H0Series& f, Cx z, const OperatorParams& p);

/// z d/dz by 4th-order central differences, for black-box callables.
Cx delta_numeric(const std::function<Cx(Cx)>& g, Cx z);

/// z d/dz exactly on the coefficient representation: c_l -> l c_l.
H0Series delta_series(const H0Series& f);

/// K1(z) = [(1-x)/(nu(1-nu)x)] int_0^z K(t)/t dt, termwise on coefficients.
H0Series k1_from_k(const H0Series& k, const OperatorParams& p);

enum class Branch { minus, plus };

/// Inverse of t -> t^{-nu}(1-t) on [0, t_hat] (minus) or [t_hat, 1] (plus).
double theta_pm(double tau, Branch branch, double nu);

/// Psi_{+-}(z, tau) of the singular Volterra kernel. Rejects tau at the
/// kernel singularity tau_hat.
Cx psi_kernel(Cx z, double tau, Branch branch, const OperatorParams& p);

/// Left side of the Volterra equation:
/// int_0^{(tau_hat/x) z} [Psi_- - Psi_+](z, x xi / z) E*(xi) dxi,
/// in the tau variable with the 1/sqrt endpoint substituted away.
Cx volterra_lhs(const H0Series& e_star, Cx z, const OperatorParams& p);

/// Least-squares slope of log|f(tau)| against log(tau_hat - tau) on a
/// log-spaced grid over [lo_frac, hi_frac] * tau_hat.
double singularity_slope(const std::function<double(double)>& abs_kernel, double tau_hat,
                         double lo_frac, double hi_frac, int points);

/// Phi(alpha; beta; Z) through the loop representation; validates the contour
/// machinery (branch convention and 2 pi i normalization) against the series.
Cx contour_phi(Cx alpha, Cx beta, Cx z, const ContourSpec& spec = {});

/// Result of a contour inversion; flags mark the edge regimes.
struct ContourResult {
  Cx value{};
  bool endpoint_divergent = false;  // Re(nu) >= 0: integrand no longer vanishes at t=1
  bool unverified_domain = false;   // 0 <= Re(nu) < 1: computed, no operator round-trip
};

/// L^{-1} K by the loop around t = 0 anchored at t = 1. Valid representation
/// for Re(nu) < 1; operator-inverse semantics only for Re(nu) < 0.
ContourResult linv_contour(const H0Series& k, Cx z, const OperatorParams& p);
ContourResult linv_contour(const std::function<Cx(Cx)>& k, Cx z, const OperatorParams& p);

/// Mirrored representation: loop around t = 1 anchored at t = 0 (Re(nu) < 0).
ContourResult linv_contour_alt(const H0Series& k, Cx z, const OperatorParams& p);
ContourResult linv_contour_alt(const std::function<Cx(Cx)>& k, Cx z, const OperatorParams& p);

}  // namespace hyperinv
