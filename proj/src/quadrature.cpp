#include "hyperinv/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace hyperinv {

namespace {

// Kronrod 15-point nodes (positive half) and weights; Gauss 7 weights embed
// at the odd positions. Standard QUADPACK constants.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct GkResult {
  Cx value;
  double err;
};

GkResult gk15(const std::function<Cx(double)>& f, double a, double b) {
  double hl = 0.5 * (b - a), c = 0.5 * (a + b);
  Cx fc = f(c);
  Cx res_g = kWg[3] * fc;
  Cx res_k = kWgk[7] * fc;
  for (int j = 0; j < 7; ++j) {
    double x = hl * kXgk[j];
    Cx fsum = f(c - x) + f(c + x);
    res_k += kWgk[j] * fsum;
    if (j % 2 == 1) res_g += kWg[j / 2] * fsum;
  }
  res_g *= hl;
  res_k *= hl;
  return {res_k, std::abs(res_k - res_g)};
}

void adapt(const std::function<Cx(double)>& f, double a, double b, const QuadSettings& s,
           int depth, double scale, Cx& acc, double& err_acc) {
  GkResult r = gk15(f, a, b);
  double tol = std::max({s.abs_tol * (b - a), s.rel_tol * std::abs(r.value), 1e-14});
  if (r.err <= tol || depth >= s.max_depth) {
    acc += r.value;
    err_acc += r.err;
    return;
  }
  double mid = 0.5 * (a + b);
  adapt(f, a, mid, s, depth + 1, scale, acc, err_acc);
  adapt(f, mid, b, s, depth + 1, scale, acc, err_acc);
}

}  // namespace

Cx adaptive_integrate(const std::function<Cx(double)>& f, double a, double b,
                      const QuadSettings& s) {
  Cx acc(0.0, 0.0);
  double err = 0.0;
  adapt(f, a, b, s, 0, std::abs(b - a), acc, err);
  double bound = std::max({s.abs_tol, s.rel_tol * std::abs(acc), 1e-14});
  if (err > 1e3 * bound * std::max(1.0, std::abs(b - a)))
    throw ConvergenceError("adaptive_integrate: error estimate above tolerance");
  return acc;
}

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Newton on P_n with the usual cosine initial guess.
  std::vector<double> x(n), w(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double xi = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = xi;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (xi * p1 - p0) / (xi * xi - 1.0);
      double dx = p1 / pp;
      xi -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    x[i] = -xi;
    x[n - 1 - i] = xi;
    double wi = 2.0 / ((1.0 - xi * xi) * pp * pp);
    w[i] = wi;
    w[n - 1 - i] = wi;
  }
  auto [pos, ok] = cache.emplace(n, std::make_pair(std::move(x), std::move(w)));
  (void)ok;
  return pos->second;
}

Cx integrate_gl(const std::function<Cx(double)>& f, double a, double b, int n) {
  const auto& [x, w] = gauss_legendre(n);
  double hl = 0.5 * (b - a), c = 0.5 * (a + b);
  Cx acc(0.0, 0.0);
  for (int i = 0; i < n; ++i) acc += w[i] * f(c + hl * x[i]);
  return hl * acc;
}

Cx integrate_gl_doubling(const std::function<Cx(double)>& f, double a, double b,
                         int n0, double tol, int max_nodes) {
  Cx prev = integrate_gl(f, a, b, n0);
  for (int n = 2 * n0; n <= max_nodes; n *= 2) {
    Cx cur = integrate_gl(f, a, b, n);
    if (std::abs(cur - prev) <= std::max(1e-14, tol * std::max(1.0, std::abs(cur))))
      return cur;
    prev = cur;
  }
  throw ConvergenceError("integrate_gl_doubling: node cap reached before convergence");
}

}  // namespace hyperinv
