#include "hyperinv/operators.hpp"

#include <cmath>

#include "hyperinv/special.hpp"

namespace hyperinv {

namespace {

double factorial(int n) {
  double r = 1.0;
  for (int j = 2; j <= n; ++j) r *= j;
  return r;
}

}  // namespace

Cx H0Series::eval(Cx z) const {
  Cx acc(0.0, 0.0);
  for (int l = order(); l >= 1; --l) acc = (acc + c_[l - 1] / factorial(l)) * z;
  return acc;
}

double H0Series::tail_estimate(double abs_z) const {
  int n = order();
  if (n == 0) return 0.0;
  return std::abs(c_[n - 1]) * std::pow(abs_z, n) / factorial(n);
}

Cx H0Series::eval_derivative(Cx z) const {
  // sum_{l>=1} c_l z^{l-1} / (l-1)!
  Cx acc(0.0, 0.0);
  for (int l = order(); l >= 1; --l) acc = acc * z + c_[l - 1] / factorial(l - 1);
  return acc;
}

OperatorParams::OperatorParams(Cx x_, Cx nu_) : OperatorParams(x_, nu_, relaxed_tag{}) {
  if (!(nu.real() < 0.0)) throw DomainError("OperatorParams: Re(nu) < 0 required");
}

OperatorParams::OperatorParams(Cx x_, Cx nu_, relaxed_tag) : x(x_), nu(nu_) {
  require_finite(x, "OperatorParams");
  require_finite(nu, "OperatorParams");
  if (!in_operator_x_domain(x))
    throw DomainError("OperatorParams: x must avoid the negative real axis and 1");
  if (!(contour.rho > 0.0 && contour.rho < 1.0))
    throw DomainError("OperatorParams: rho in (0,1) required");
}

OperatorParams OperatorParams::for_contour_representation(Cx x_, Cx nu_) {
  if (!(nu_.real() < 1.0))
    throw DomainError("OperatorParams: the loop representation needs Re(nu) < 1");
  return OperatorParams(x_, nu_, relaxed_tag{});
}

VolterraGeometry::VolterraGeometry(double nu) {
  if (!(nu < 0.0)) throw DomainError("VolterraGeometry: real nu < 0 required");
  t_hat = nu / (nu - 1.0);
  tau_hat = std::pow(t_hat, -nu) * (1.0 - t_hat);
}

Cx r_factor(double zeta, const OperatorParams& p) {
  if (zeta < 0.0 || zeta > 1.0) throw DomainError("r_factor: zeta in [0,1] required");
  return std::pow(Cx(1.0 - zeta, 0.0), -p.nu) *
         std::pow(1.0 - (1.0 - p.x) * zeta, p.nu - 1.0);
}

Cx eval_h0(const H0Series& f, Cx z, bool* truncation_warning) {
  if (truncation_warning)
    *truncation_warning = f.tail_estimate(std::abs(z)) > 1e-9 * std::max(1.0, std::abs(f.eval(z)));
  return f.eval(z);
}

namespace {

Cx l_integrand(const std::function<Cx(Cx)>& f, const std::function<Cx(Cx)>& fp, Cx z,
               const OperatorParams& p, double zeta) {
  Cx r = r_factor(zeta, p);
  Cx w = zeta * r * z;
  return ((1.0 + z * r) * f(w) - p.c() * z * r * fp(w)) * std::exp(-r * z);
}

}  // namespace

Cx apply_l_quad(const H0Series& f, Cx z, const OperatorParams& p) {
  return apply_l_quad([&](Cx w) { return f.eval(w); },
                      [&](Cx w) { return f.eval_derivative(w); }, z, p);
}

Cx apply_l_quad(const std::function<Cx(Cx)>& f, const std::function<Cx(Cx)>& fprime, Cx z,
                const OperatorParams& p) {
  require_finite(z, "apply_l_quad");
  return adaptive_integrate([&](double zeta) { return l_integrand(f, fprime, z, p, zeta); },
                            0.0, 1.0, p.quad);
}

H0Series apply_l_series(const H0Series& f, const OperatorParams& p) {
  int n = f.order();
  H0Series out(n);
  for (int b = 1; b <= n; ++b) {
    Cx kb(0.0, 0.0);
    for (int ell = 1; ell <= b; ++ell) {
      if (f.c(ell) == Cx(0.0, 0.0)) continue;
      double sign = (ell % 2 == 0) ? 1.0 : -1.0;
      kb += sign * detail::binomial_t<double>(b, ell) * q_coeff(b, ell, p.x, p.nu) * f.c(ell);
    }
    out.c(b) = (b % 2 == 0) ? kb : -kb;  // plain coefficient (-1)^b K_b
  }
  return out;
}

Cx apply_m_quad(const std::function<Cx(Cx)>& f, Cx z, const OperatorParams& p) {
  require_finite(z, "apply_m_quad");
  if (z == Cx(0.0, 0.0)) return Cx(0.0, 0.0);
  // t = u^2: dt/t = 2 du/u; integrand vanishes at u=0 for Re(nu) < -1/2 and
  // keeps an integrable endpoint otherwise (adaptive bisection absorbs it)
  return adaptive_integrate(
      [&](double u) {
        if (u == 0.0) return Cx(0.0, 0.0);
        double t = u * u;
        Cx tn = std::pow(Cx(t, 0.0), -p.nu);
        Cx arg = (z / p.x) * tn * (1.0 - t);
        return std::exp(-(z / p.x) * tn * (1.0 - (1.0 - p.x) * t)) * f(arg) * (2.0 / u);
      },
      0.0, 1.0, p.quad);
}

Cx apply_m_quad(const H0Series& f, Cx z, const OperatorParams& p) {
  return apply_m_quad([&](Cx w) { return f.eval(w); }, z, p);
}

Cx delta_numeric(const std::function<Cx(Cx)>& g, Cx z) {
  double h = 1e-5 * std::max(1.0, std::abs(z));
  Cx d = (-g(z + 2.0 * h) + 8.0 * g(z + h) - 8.0 * g(z - h) + g(z - 2.0 * h)) / (12.0 * h);
  return z * d;
}

H0Series delta_series(const H0Series& f) {
  H0Series out(f.order());
  for (int l = 1; l <= f.order(); ++l) out.c(l) = double(l) * f.c(l);
  return out;
}

H0Series k1_from_k(const H0Series& k, const OperatorParams& p) {
  Cx scale = (1.0 - p.x) / (p.nu * (1.0 - p.nu) * p.x);
  H0Series out(k.order());
  for (int b = 1; b <= k.order(); ++b) out.c(b) = scale * k.c(b) / double(b);
  return out;
}

double theta_pm(double tau, Branch branch, double nu) {
  if (!(nu < 0.0)) throw DomainError("theta_pm: real nu < 0 required");
  VolterraGeometry geo(nu);
  if (tau < 0.0 || tau > geo.tau_hat) throw DomainError("theta_pm: tau outside [0, tau_hat]");
  if (tau == 0.0) return branch == Branch::minus ? 0.0 : 1.0;
  if (tau == geo.tau_hat) return geo.t_hat;
  auto tau_of = [&](double t) { return std::pow(t, -nu) * (1.0 - t); };
  double lo = branch == Branch::minus ? 0.0 : geo.t_hat;
  double hi = branch == Branch::minus ? geo.t_hat : 1.0;
  bool increasing = branch == Branch::minus;
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (lo + hi);
    bool below = tau_of(mid) < tau;
    if (below == increasing)
      lo = mid;
    else
      hi = mid;
  }
  double t = 0.5 * (lo + hi);
  // Newton polish; derivative t^{-nu-1}(-nu + (nu-1) t)
  for (int it = 0; it < 8; ++it) {
    double r = tau_of(t) - tau;
    double d = std::pow(t, -nu - 1.0) * (-nu + (nu - 1.0) * t);
    if (d == 0.0) break;
    double step = r / d;
    double tn = t - step;
    if (tn <= lo || tn >= hi) break;
    t = tn;
    if (std::abs(r) <= 1e-15 * std::max(1.0, geo.tau_hat)) break;
  }
  return t;
}

Cx psi_kernel(Cx z, double tau, Branch branch, const OperatorParams& p) {
  if (p.nu.imag() != 0.0) throw DomainError("psi_kernel: real nu required");
  double nu = p.nu.real();
  VolterraGeometry geo(nu);
  if (!(tau < geo.tau_hat)) throw DomainError("psi_kernel: singular at tau = tau_hat");
  double th = theta_pm(tau, branch, nu);
  double tn = std::pow(th, -nu);
  Cx numer = std::exp(-(z / p.x) * tn * (1.0 - (1.0 - p.x) * th));
  double denom = tn * (-nu + (nu - 1.0) * th);
  return numer / denom;
}

Cx volterra_lhs(const H0Series& e_star, Cx z, const OperatorParams& p) {
  if (p.nu.imag() != 0.0 || p.x.imag() != 0.0 || !(p.x.real() > 0.0 && p.x.real() < 1.0))
    throw DomainError("volterra_lhs: real x in (0,1) and real nu < 0 required");
  double nu = p.nu.real();
  VolterraGeometry geo(nu);
  auto kernel_times_e = [&](double tau) {
    return (psi_kernel(z, tau, Branch::minus, p) - psi_kernel(z, tau, Branch::plus, p)) *
           e_star.eval((z / p.x) * tau);
  };
  // left half: plain nodes; the tau -> 0 end is finite (Psi_- ~ -1/(nu tau)
  // against E*(..) ~ tau)
  Cx left = integrate_gl_doubling([&](double tau) { return kernel_times_e(tau); }, 0.0,
                                  0.5 * geo.tau_hat, 64, 1e-9);
  // right half: tau = tau_hat (1 - u^2) absorbs the 1/sqrt endpoint
  double u0 = std::sqrt(0.5);
  Cx right = integrate_gl_doubling(
      [&](double u) {
        double tau = geo.tau_hat * (1.0 - u * u);
        return kernel_times_e(tau) * 2.0 * geo.tau_hat * u;
      },
      0.0, u0, 64, 1e-9);
  return (z / p.x) * (left + right);
}

double singularity_slope(const std::function<double(double)>& abs_kernel, double tau_hat,
                         double lo_frac, double hi_frac, int points) {
  // log-spaced distances from the singular endpoint
  double dlo = std::log((1.0 - lo_frac) * tau_hat);
  double dhi = std::log((1.0 - hi_frac) * tau_hat);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < points; ++i) {
    double ld = dlo + (dhi - dlo) * i / (points - 1);
    double tau = tau_hat - std::exp(ld);
    double y = std::log(abs_kernel(tau));
    sx += ld;
    sy += y;
    sxx += ld * ld;
    sxy += ld * y;
  }
  double n = points;
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

// The loop anchored at t = 1 encircling 0 once positively: inbound segment
// 1 -> rho on the upper edge with arg(-t) = -pi, the circle |t| = rho with
// arg(-t) running -pi -> +pi, outbound segment rho -> 1 on the lower edge
// with arg(-t) = +pi. arg(1-t) = 0 on the segments and stays principal on
// the circle. g receives (t, 1-t, arg(-t)); 1-t comes straight from the
// substitution variable so the t -> 1 endpoint never cancels away.
Cx loop_integral_origin(const std::function<Cx(Cx, Cx, double)>& g, const ContourSpec& spec,
                        double tol) {
  double rho = spec.rho;
  // t = 1 - (1-rho) u^4 absorbs the algebraic endpoint factor at t = 1
  // (vanishing but not smooth for non-integer nu, integrable for Re(nu) < 1)
  auto piece_segments = [&](int n) {
    auto seg = [&](double arg_mt) {
      return integrate_gl(
          [&](double u) {
            double u2 = u * u;
            double s = (1.0 - rho) * u2 * u2;  // s = 1 - t, exact
            return g(Cx(1.0 - s, 0.0), Cx(s, 0.0), arg_mt) * (4.0 * (1.0 - rho) * u2 * u);
          },
          0.0, 1.0, n);
    };
    return -seg(-kPi) + seg(kPi);
  };
  auto piece_circle = [&](int n) {
    return integrate_gl(
        [&](double phi) {
          Cx t = std::polar(rho, phi);
          return g(t, 1.0 - t, phi - kPi) * Cx(0.0, 1.0) * t;  // dt = i t dphi
        },
        0.0, 2.0 * kPi, n);
  };
  Cx prev = piece_segments(spec.leg_nodes) + piece_circle(spec.circle_nodes);
  int ns = spec.leg_nodes, nc = spec.circle_nodes;
  for (int it = 0; it < 12; ++it) {
    ns *= 2;
    nc *= 2;
    Cx cur = piece_segments(ns) + piece_circle(nc);
    if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  throw ConvergenceError("contour integral: node doubling did not converge");
}

// Mirror: loop anchored at t = 0 encircling 1 once positively. Inbound
// segment 0 -> 1-rho on the lower edge with arg(t-1) = -pi, circle
// |t-1| = rho with arg(t-1) running -pi -> +pi, outbound upper edge.
Cx loop_integral_one(const std::function<Cx(Cx, double)>& g, const ContourSpec& spec,
                     double tol) {
  double rho = spec.rho;
  // t = (1-rho) u^4 absorbs the endpoint factor at t = 0; t itself is exact
  // there so no cancellation guard is needed on this loop
  auto piece_segments = [&](int n) {
    auto seg = [&](double arg_tm1) {
      return integrate_gl(
          [&](double u) {
            double u2 = u * u;
            double t = (1.0 - rho) * u2 * u2;
            return g(Cx(t, 0.0), arg_tm1) * (4.0 * (1.0 - rho) * u2 * u);
          },
          0.0, 1.0, n);
    };
    return seg(-kPi) - seg(kPi);
  };
  auto piece_circle = [&](int n) {
    return integrate_gl(
        [&](double phi) {
          Cx t = 1.0 - std::polar(rho, phi);  // t - 1 = -rho e^{i phi}: arg = phi - pi
          return g(t, phi - kPi) * Cx(0.0, -1.0) * (1.0 - t);
        },
        0.0, 2.0 * kPi, n);
  };
  Cx prev = piece_segments(spec.leg_nodes) + piece_circle(spec.circle_nodes);
  int ns = spec.leg_nodes, nc = spec.circle_nodes;
  for (int it = 0; it < 12; ++it) {
    ns *= 2;
    nc *= 2;
    Cx cur = piece_segments(ns) + piece_circle(nc);
    if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  throw ConvergenceError("contour integral: node doubling did not converge");
}

// (-t)^expo with the tracked branch of arg(-t)
Cx pow_tracked(Cx t, double arg_minus_t, Cx expo) {
  return std::exp(expo * Cx(std::log(std::abs(t)), arg_minus_t));
}

ContourResult linv_impl(const std::function<Cx(Cx)>& k, Cx z, const OperatorParams& p,
                        bool alt) {
  ContourResult out;
  out.unverified_domain = p.nu.real() >= 0.0;
  out.endpoint_divergent = p.nu.real() >= 0.0;
  if (z == Cx(0.0, 0.0)) return out;

  if (!alt) {
    auto g = [&](Cx t, Cx one_minus_t, double amt) {
      Cx w = p.x * z * pow_tracked(t, amt, p.nu) * std::pow(one_minus_t, 1.0 - p.nu);
      return -std::exp(-p.x * t * z) / (t * one_minus_t) * k(w);
    };
    Cx integral = loop_integral_origin(g, p.contour, 1e-9);
    out.value = (1.0 - p.x) / (Cx(0.0, 2.0 * kPi) * p.x) * std::exp(z) * integral;
  } else {
    auto g = [&](Cx t, double amt1) {
      // (t-1)^nu with tracked arg; t^{1-nu} stays principal on the path
      Cx tm1 = std::exp(p.nu * Cx(std::log(std::abs(t - 1.0)), amt1));
      Cx w = p.x * z * std::pow(t, 1.0 - p.nu) * tm1;
      return std::exp(p.x * t * z) / (t * (t - 1.0)) * k(w);
    };
    Cx integral = loop_integral_one(g, p.contour, 1e-9);
    out.value = (p.x - 1.0) / (Cx(0.0, 2.0 * kPi) * p.x) * std::exp((1.0 - p.x) * z) * integral;
  }
  return out;
}

}  // namespace

Cx contour_phi(Cx alpha, Cx beta, Cx z, const ContourSpec& spec) {
  auto g = [&](Cx t, Cx one_minus_t, double amt) {
    return std::exp(z * t) * pow_tracked(t, amt, alpha - 1.0) *
           std::pow(one_minus_t, beta - alpha - 1.0);
  };
  Cx integral = loop_integral_origin(g, spec, 1e-10);
  Cx pref = -std::exp(log_gamma(1.0 - alpha) + log_gamma(beta) - log_gamma(beta - alpha)) /
            Cx(0.0, 2.0 * kPi);
  return pref * integral;
}

ContourResult linv_contour(const H0Series& k, Cx z, const OperatorParams& p) {
  return linv_impl([&](Cx w) { return k.eval(w); }, z, p, false);
}

ContourResult linv_contour(const std::function<Cx(Cx)>& k, Cx z, const OperatorParams& p) {
  return linv_impl(k, z, p, false);
}

ContourResult linv_contour_alt(const H0Series& k, Cx z, const OperatorParams& p) {
  if (!(p.nu.real() < 0.0))
    throw DomainError("linv_contour_alt: Re(nu) < 0 required");
  return linv_impl([&](Cx w) { return k.eval(w); }, z, p, true);
}

ContourResult linv_contour_alt(const std::function<Cx(Cx)>& k, Cx z, const OperatorParams& p) {
  if (!(p.nu.real() < 0.0))
    throw DomainError("linv_contour_alt: Re(nu) < 0 required");
  return linv_impl(k, z, p, true);
}

}  // namespace hyperinv
