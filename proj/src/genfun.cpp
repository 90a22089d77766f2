#include "hyperinv/genfun.hpp"

#include <cmath>

#include "hyperinv/special.hpp"

namespace hyperinv {

PowerSeries PowerSeries::mul(const PowerSeries& o) const {
  PowerSeries out(order);
  for (int i = 0; i <= order; ++i) {
    Cx acc(0.0, 0.0);
    int jmax = std::min(i, order);
    for (int j = std::max(0, i - o.order); j <= jmax; ++j) acc += coeffs[j] * o.coeffs[i - j];
    out.coeffs[i] = acc;
  }
  return out;
}

PowerSeries PowerSeries::exp() const {
  // g' = f' g termwise: g_n = (1/n) sum_{k=1..n} k f_k g_{n-k}
  PowerSeries g(order);
  g.coeffs[0] = Cx(1.0, 0.0);
  for (int n = 1; n <= order; ++n) {
    Cx acc(0.0, 0.0);
    for (int k = 1; k <= n; ++k) acc += double(k) * coeffs[k] * g.coeffs[n - k];
    g.coeffs[n] = acc / double(n);
  }
  return g;
}

Cx PowerSeries::eval(Cx z) const {
  Cx acc(0.0, 0.0);
  for (int j = order; j >= 0; --j) acc = acc * z + coeffs[j];
  return acc;
}

Cx xi(Cx z, const GfParams& p, bool* near_cut) {
  require_finite(z, "xi");
  if (p.x == Cx(1.0, 0.0)) throw DomainError("xi: x != 1 required");
  if (z == Cx(1.0, 0.0)) throw DomainError("xi: pole at z = 1");
  Cx denom = 1.0 - z * (1.0 - p.x);
  if (denom == Cx(0.0, 0.0)) throw DomainError("xi: pole at z = 1/(1-x)");
  Cx base = (1.0 - z) / denom;
  if (near_cut) {
    *near_cut = base.real() < 0.0 && std::abs(base.imag()) <= 1e-8 * std::abs(base.real());
  }
  return z / (z - 1.0) * std::pow(base, p.nu);
}

PowerSeries xi_series(const GfParams& p) {
  int n = p.order;
  // log((1-z)/(1-z(1-x))) = sum_j ((1-x)^j - 1)/j z^j
  PowerSeries lg(n);
  Cx a = 1.0 - p.x;
  Cx apow(1.0, 0.0);
  for (int j = 1; j <= n; ++j) {
    apow *= a;
    lg.coeffs[j] = p.nu * (apow - 1.0) / double(j);
  }
  PowerSeries e = lg.exp();
  PowerSeries zfac(n);  // z/(z-1) = -sum_{j>=1} z^j
  for (int j = 1; j <= n; ++j) zfac.coeffs[j] = Cx(-1.0, 0.0);
  return zfac.mul(e);
}

Cx theta(Cx w, Cx nu) {
  require_finite(w, "theta");
  double r = radius_r(nu);
  if (std::abs(w) > 0.95 * r)
    throw DomainError("theta: |w| exceeds the convergence radius guard");
  if (w == Cx(0.0, 0.0)) return Cx(1.0, 0.0);

  Cx th(1.0, 0.0);
  int steps = 1;
  // continuation along the straight ray pins the analytic branch through
  // Theta(0) = 1; restart with more steps on any jump or stall
  for (; steps <= 32; steps *= 2) {
    th = Cx(1.0, 0.0);
    bool ok = true;
    for (int j = 1; j <= steps && ok; ++j) {
      Cx wj = w * (double(j) / steps);
      Cx prev = th;
      bool converged = false;
      for (int it = 0; it < 64; ++it) {
        Cx tp = std::pow(th, 1.0 - nu);
        Cx g = 1.0 - th + wj * tp;
        if (std::abs(g) <= 1e-13) {
          converged = true;
          break;
        }
        Cx gp = -1.0 + wj * (1.0 - nu) * std::pow(th, -nu);
        th -= g / gp;
      }
      ok = converged && std::abs(th - prev) <= 0.2;
    }
    if (ok) {
      if (std::abs(1.0 - th + w * std::pow(th, 1.0 - nu)) <= 1e-12) return th;
    }
  }
  throw ConvergenceError("theta: Newton continuation failed");
}

Cx sigma_series(Cx w, Cx nu, int terms, double* tail_bound) {
  double r = radius_r(nu);
  if (std::abs(w) > 0.8 * r)
    throw DomainError("sigma_series: |w| <= 0.8 R(nu) required");
  Cx acc(0.0, 0.0);
  Cx wpow(1.0, 0.0);
  double last = 0.0;
  for (int b = 1; b <= terms; ++b) {
    wpow *= w;
    Cx lg = log_gamma(double(b) * (1.0 - nu)) - log_gamma(Cx(double(b))) -
            log_gamma(1.0 - double(b) * nu);
    Cx term = std::exp(lg) * wpow;
    acc += term;
    last = std::abs(term);
  }
  if (tail_bound) {
    // |sigma_b| ~ R^{-b} up to algebraic factors, so the tail is close to
    // geometric with ratio |w|/R
    double q = std::abs(w) / r;
    *tail_bound = (q < 1.0) ? last * q / (1.0 - q) : INFINITY;
  }
  return acc;
}

Cx sigma_closed(Cx w, Cx nu) {
  Cx th = theta(w, nu);
  return (th - 1.0) / (nu * th + 1.0 - nu);
}

double radius_r(Cx nu) {
  auto xlogx = [](double t) { return t > 0.0 ? t * std::log(t) : 0.0; };
  if (nu.imag() != 0.0 || nu.real() < 0.0) {
    Cx psi = (1.0 - nu) * std::log(1.0 - nu) + nu * std::log(-nu);
    return std::exp(-psi.real());
  }
  double v = nu.real();
  if (v < 1.0) return std::exp(-(xlogx(1.0 - v) + xlogx(v)));
  return std::exp(-((1.0 - v) * (v > 1.0 ? std::log(v - 1.0) : 0.0) + xlogx(v)));
}

double ode_residual(Cx w, Cx nu) {
  if (w == Cx(0.0, 0.0)) throw DomainError("ode_residual: w != 0 required");
  double h = 1e-4 * radius_r(nu);
  Cx d = (-sigma_closed(w + 2.0 * h, nu) + 8.0 * sigma_closed(w + h, nu) -
          8.0 * sigma_closed(w - h, nu) + sigma_closed(w - 2.0 * h, nu)) /
         (12.0 * h);
  Cx s = sigma_closed(w, nu);
  return std::abs(w * d - s * (1.0 - nu * s) * (1.0 + (1.0 - nu) * s));
}

Cx omega(Cx xi_val, const GfParams& p) {
  if (p.x == Cx(0.0, 0.0)) throw DomainError("omega: x != 0 required");
  if (p.x == Cx(1.0, 0.0)) throw DomainError("omega: x != 1 required");
  Cx s = sigma_closed(p.x * xi_val, p.nu);  // theta rechecks the radius
  Cx denom = (1.0 - p.x * (1.0 - p.nu)) * s - p.x;
  if (denom == Cx(0.0, 0.0)) throw DomainError("omega: zero denominator");
  return s / denom;
}

double ogf_relation_residual(const Seq& t_seq, const GfParams& p, bool* prefactor_zero) {
  int order = p.order;
  int n = t_seq.size();
  if (order < 1) throw DomainError("ogf_relation_residual: order >= 1 required");

  // left side: coefficients of G_S with S = B * T, T zero-padded to `order`
  MatrixParams mp{p.x, p.nu, std::max(order, n)};
  TriMatrixNum b = build_b(mp);
  Seq t_pad(mp.n);
  for (int i = 1; i <= n; ++i) t_pad(i) = t_seq(i);
  Seq s = apply_tri(b, t_pad);

  // right side: [ (1-nu)/(1-z) + nu/(1-z(1-x)) ] * G_T(Xi(z))
  PowerSeries xs = xi_series(GfParams{p.x, p.nu, order});
  PowerSeries comp(order);
  PowerSeries xik(order);
  xik.coeffs[0] = Cx(1.0, 0.0);
  for (int k = 1; k <= n; ++k) {
    xik = xik.mul(xs);
    for (int j = 0; j <= order; ++j) comp.coeffs[j] += t_seq(k) * xik.coeffs[j];
  }
  PowerSeries pref(order);
  Cx a = 1.0 - p.x;
  Cx apow(1.0, 0.0);
  pref.coeffs[0] = Cx(1.0, 0.0);  // (1-nu) + nu
  for (int j = 1; j <= order; ++j) {
    apow *= a;
    pref.coeffs[j] = (1.0 - p.nu) + p.nu * apow;
  }
  PowerSeries rhs = pref.mul(comp);

  if (prefactor_zero) {
    // the inverse reading divides by (1-nu)/(1-z) + nu/(1-z(1-x)), whose only
    // zero sits at z* = 1/(1 - x + nu x); flag it when it enters the unit disk
    *prefactor_zero = false;
    Cx denom = 1.0 - p.x + p.nu * p.x;
    if (denom == Cx(0.0, 0.0) || std::abs(1.0 / denom) < 1.0) *prefactor_zero = true;
  }

  double res = 0.0;
  for (int j = 0; j <= order; ++j) {
    Cx lhs = (j == 0) ? Cx(0.0, 0.0) : s(j);
    res = std::max(res, std::abs(lhs - rhs.coeffs[j]));
  }
  return res;
}

Cx egf_s(Cx z, const Seq& t_seq, const GfParams& p) {
  Cx acc(0.0, 0.0);
  Cx zk(1.0, 0.0);
  double kfact = 1.0;
  for (int k = 1; k <= t_seq.size(); ++k) {
    zk *= z;
    kfact *= double(k);
    if (t_seq(k) == Cx(0.0, 0.0)) continue;
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    acc += sign * t_seq(k) * zk / kfact * confluent_phi(double(k) * p.nu, Cx(double(k)), -p.x * z);
  }
  return std::exp(z) * acc;
}

}  // namespace hyperinv
