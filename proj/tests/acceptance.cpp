// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// Criterion 11 asserts the reference value printed in the source remark for
// L[z e^{(1-x)z}]; three independent evaluation routes (direct quadrature,
// the factorization c0 * delta * M, and the triangular-series route) agree
// with each other and with -(z/(1-x)) Phi(1-1/nu; 2-1/nu; -z) instead, so the
// criterion is expected red. It is asserted as stated on purpose; see the
// companion test suites for the three-route agreement checks.

#include <boost/multiprecision/cpp_complex.hpp>
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "hyperinv/exact_poly.hpp"
#include "hyperinv/genfun.hpp"
#include "hyperinv/io.hpp"
#include "hyperinv/operators.hpp"
#include "hyperinv/special.hpp"

using namespace hyperinv;

namespace {

struct Outcome {
  int id;
  std::string label;
  bool pass;
  double residual;
  double seconds;
  std::string note;
};

std::vector<Outcome> g_results;

template <class Fn>
void criterion(int id, const std::string& label, Fn&& body) {
  Outcome out{id, label, false, 0.0, 0.0, ""};
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto [pass, residual, note] = body();
    out.pass = pass;
    out.residual = residual;
    out.note = note;
  } catch (const std::exception& e) {
    out.pass = false;
    out.residual = std::numeric_limits<double>::infinity();
    out.note = std::string("exception: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  g_results.push_back(out);
  std::printf("criterion %2d  %-54s %s  (max residual %.3e, %.2fs)%s%s\n", id, label.c_str(),
              out.pass ? "PASS" : "FAIL", out.residual, out.seconds,
              out.note.empty() ? "" : "  -- ", out.note.c_str());
  std::fflush(stdout);
}

using Body = std::tuple<bool, double, std::string>;

double rel(Cx got, Cx want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

H0Series exp_times_z(Cx a, int order) {
  H0Series f(order);
  Cx p(1.0, 0.0);
  for (int l = 1; l <= order; ++l) {
    f.c(l) = double(l) * p;
    p *= a;
  }
  return f;
}

}  // namespace

int main() {
  std::printf("hyperinv acceptance suite\n");

  criterion(1, "symbolic inversion A*B = B*A = Id, n <= 10, exact", []() -> Body {
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 1; n <= 10; ++n) {
      auto a = build_a_exact(n);
      auto b = build_b_exact(n);
      if (!is_identity(mul_tri(a, b)) || !is_identity(mul_tri(b, a)))
        return {false, 1.0, "identity violated at n=" + std::to_string(n)};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= 60.0) return {false, 0.0, "runtime budget 60 s exceeded"};
    return {true, 0.0, "zero tolerance, both orders"};
  });

  criterion(2, "numeric inversion ||A*B - Id||_max <= 1e-10, n = 30", []() -> Body {
    using MC = boost::multiprecision::cpp_complex_50;
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto draw_disk = [&](double radius) {
      double re, im;
      do {
        re = u(rng);
        im = u(rng);
      } while (re * re + im * im > 1.0);
      return std::pair{radius * re, radius * im};
    };
    double worst = 0.0;
    int n = 30;
    for (int s = 0; s < 20; ++s) {
      auto [xr, xi] = draw_disk(2.0);
      auto [nr, ni] = draw_disk(3.0);
      MC x(xr, xi), nu(nr, ni);
      auto prod = detail::mul_tri_t<MC>(detail::build_a_t<MC>(n, x, nu),
                                        detail::build_b_t<MC>(n, x, nu));
      for (int r = 1; r <= n; ++r)
        for (int k = 1; k <= r; ++k) {
          MC want = (r == k) ? MC(1) : MC(0);
          worst = std::max(worst, double(abs(prod.at(r, k) - want)));
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= 10.0) return {false, worst, "runtime budget 10 s exceeded"};
    return {worst <= 1e-10, worst, "20 samples, |x| <= 2, |nu| <= 3, 50-digit build"};
  });

  criterion(3, "criterion coefficients: U_{n-k} = 0 (k<n), U_0 = 1 (n=k)", []() -> Body {
    for (int n = 1; n <= 8; ++n)
      for (int k = 1; k <= n; ++k) {
        if (k < n && !criterion_coefficient(n, k, n - k).is_zero())
          return {false, 1.0, "nonzero at (" + std::to_string(n) + "," + std::to_string(k) + ")"};
        if (k == n && !(criterion_coefficient(n, n, 0) == BiPoly::constant(1)))
          return {false, 1.0, "unit failed at n=" + std::to_string(n)};
      }
    return {true, 0.0, "exact, 1 <= k <= n <= 8"};
  });

  criterion(4, "closed D_N vs defining sum, 200-point grid, <= 1e-11", []() -> Body {
    std::vector<std::tuple<int, Cx, Cx>> pts;
    for (int n : {1, 2, 3, 5, 8})
      for (double lam : {-1.6, -0.8, 0.25, 0.7, 1.3, 2.6})
        for (double mu : {-2.4, -1.2, 0.3, 1.7, 3.1, 4.2})
          pts.emplace_back(n, Cx(lam, 0), Cx(mu, 0));
    for (int m = -3; m <= 6; ++m)
      for (int n : {1, 2, 4, 7}) pts.emplace_back(n, Cx(double(m), 0), Cx(double(m), 0));
    for (double lam : {-1.45, -0.35, 0.45, 1.55, 2.65, 3.75})
      for (int n : {2, 3, 6, 8}) pts.emplace_back(n, Cx(lam, 0), Cx(lam, 0));
    double worst = 0.0;
    for (auto& [n, lam, mu] : pts)
      worst = std::max(worst, std::abs(d_closed(n, lam, mu) - d_sum(n, lam, mu)));
    return {worst <= 1e-11 && pts.size() >= 200, worst,
            std::to_string(pts.size()) + " grid points, both branches, integer limits"};
  });

  criterion(5, "Sigma: series vs implicit closed form; spot values", []() -> Body {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (Cx nu : {Cx(-2, 0), Cx(-1, 0), Cx(-0.5, 0), Cx(0.3, 0.1)}) {
      double rad = radius_r(nu);
      for (int i = 0; i < 25; ++i) {
        Cx w = std::polar(0.5 * rad * u(rng), 2.0 * kPi * u(rng));
        worst = std::max(worst, std::abs(sigma_series(w, nu, 220) - sigma_closed(w, nu)));
      }
    }
    if (worst > 1e-10) return {false, worst, "series/closed split"};
    double spot = std::abs(sigma_closed(Cx(0.1, 0), Cx(-1, 0)) - Cx(0.1454972, 0));
    if (spot > 1e-6) return {false, spot, "Sigma(0.1) at nu=-1"};
    double radr = std::abs(radius_r(Cx(-1, 0)) - 0.25);
    if (radr > 1e-12) return {false, radr, "R(-1)"};
    return {true, worst, "|w| <= 0.5 R(nu), four nu regimes + spot values"};
  });

  criterion(6, "ODE residual <= 1e-6 inside half the radius", []() -> Body {
    double worst = 0.0;
    for (Cx nu : {Cx(-2, 0), Cx(-1, 0), Cx(-0.5, 0), Cx(0.3, 0.1)}) {
      double rad = radius_r(nu);
      for (double frac : {0.05, 0.15, 0.25, 0.35, 0.45})
        for (double ang : {0.0, 1.1, 2.2, 4.4})
          worst = std::max(worst, ode_residual(std::polar(frac * rad, ang), nu));
    }
    return {worst <= 1e-6, worst, "radius-interior grid, 4th-order differences"};
  });

  criterion(7, "inverse mapping Omega(Xi(z)) = z, |z| <= 0.1", []() -> Body {
    double worst = 0.0;
    for (auto [x, nu] : {std::pair{Cx(0.5, 0), Cx(-1.0, 0)}, {Cx(0.5, 0), Cx(-2.0, 0)},
                         {Cx(0.3, 0.1), Cx(-1.2, 0)}}) {
      GfParams p{x, nu, 24};
      for (int i = 1; i <= 16; ++i) {
        Cx z = std::polar(0.1 * i / 16.0, 2.0 * kPi * i / 16.0);
        worst = std::max(worst, std::abs(omega(xi(z, p), p) - z));
      }
    }
    if (worst > 1e-9) return {false, worst, "round trip"};
    GfParams ph{Cx(0.5, 0), Cx(-1.0, 0), 24};
    double spot = std::abs(omega(Cx(0.2, 0), ph) - Cx(-0.2909944, 0));
    if (spot > 1e-6) return {false, spot, "hand value Omega(0.2)"};
    return {true, worst, "three parameter pairs + hand value"};
  });

  criterion(8, "generating-series transforms (ordinary and exponential)", []() -> Body {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (auto [x, nu] : {std::pair{Cx(0.4, 0), Cx(-1.3, 0)}, {Cx(0.5, 0), Cx(-2.0, 0)}}) {
      Seq t(12);
      for (int i = 1; i <= 12; ++i) t(i) = Cx(u(rng), u(rng));
      GfParams p{x, nu, 14};
      worst = std::max(worst, ogf_relation_residual(t, p));
      Seq t_pad(60);
      for (int i = 1; i <= 12; ++i) t_pad(i) = t(i);
      Seq s = apply_tri(build_b(MatrixParams{x, nu, 60}), t_pad);
      for (Cx z : {Cx(0.5, 0), Cx(0, 0.5), Cx(-0.3, 0.2)}) {
        Cx direct(0, 0);
        double fact = 1.0;
        Cx zp(1, 0);
        for (int m = 1; m <= 60; ++m) {
          zp *= z;
          fact *= m;
          direct += s(m) * zp / fact;
        }
        worst = std::max(worst, rel(egf_s(z, t, p), direct));
      }
    }
    return {worst <= 1e-8, worst, "random T, n = 12"};
  });

  criterion(9, "reduction + closed solution; Q vs integral route", []() -> Body {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Cx x(0.5, 0), nu(-2.0, 0);
    int n = 20;
    Seq k(n);
    for (int i = 1; i <= n; ++i) k(i) = Cx(u(rng), u(rng));
    Seq e_formula = solve_e0(k, x, nu);
    Seq e_solve = solve_tri(t0_matrix(n, x, nu), k);
    double worst = 0.0;
    for (int i = 1; i <= n; ++i)
      worst = std::max(worst, std::abs(e_formula(i) - e_solve(i)) /
                                  std::max(1e-30, std::abs(e_solve(i))));
    if (worst > 1e-10) return {false, worst, "solve_e0 vs solve_tri"};
    double worst_q = 0.0;
    for (auto [b, l] : {std::pair{1, 1}, {3, 2}, {5, 4}, {6, 2}})
      for (auto [xr, nr] : {std::pair{0.5, -2.0}, {0.3, -1.2}})
        worst_q = std::max(worst_q, rel(q_via_m(b, l, Cx(xr, 0), Cx(nr, 0)),
                                        q_coeff(b, l, Cx(xr, 0), Cx(nr, 0))));
    if (worst_q > 1e-8) return {false, worst_q, "q_coeff vs q_via_m"};
    return {true, std::max(worst, worst_q), "n = 20 solve + 8 Q cross-checks"};
  });

  criterion(10, "factorization L = c0 * delta * M, two test functions", []() -> Body {
    OperatorParams p(Cx(0.5, 0), Cx(-2.0, 0));
    H0Series f1 = exp_times_z(1.0 - p.x, 30);
    H0Series f2(24);
    f2.c(1) = Cx(1, 0);
    f2.c(3) = Cx(1, 0);
    double worst = 0.0;
    for (const H0Series& f : {f1, f2}) {
      for (Cx z : {Cx(0.5, 0), Cx(1.0, 0), Cx(1.0, 0.5)}) {
        Cx lhs = apply_l_quad(f, z, p);
        Cx rhs = p.c0() * delta_numeric([&](Cx w) { return apply_m_quad(f, w, p); }, z);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
      }
    }
    return {worst <= 1e-7, worst, "3-point z grid each"};
  });

  criterion(11, "stated closed form L[z e^{(1-x)z}] = -z e^{-z}/(1-x)", []() -> Body {
    OperatorParams p(Cx(0.5, 0), Cx(-2.0, 0));
    H0Series f = exp_times_z(1.0 - p.x, 30);
    double worst = 0.0;
    for (Cx z : {Cx(0.5, 0), Cx(1.0, 0), Cx(1.0, 0.5)}) {
      Cx got = apply_l_quad(f, z, p);
      Cx stated = -z * std::exp(-z) / (1.0 - p.x);
      worst = std::max(worst, rel(got, stated));
    }
    return {worst <= 1e-8, worst,
            "expected red: three routes agree on -(z/(1-x))Phi(1-1/nu;2-1/nu;-z) instead"};
  });

  criterion(12, "loop-integral inverse: round trip, Phi validation, dual form", []() -> Body {
    auto t0 = std::chrono::steady_clock::now();
    OperatorParams p(Cx(0.5, 0), Cx(-2.0, 0));
    H0Series f(24);
    f.c(1) = Cx(1, 0);
    f.c(3) = Cx(1, 0);
    H0Series k = apply_l_series(f, p);
    double worst = 0.0;
    for (Cx z : {Cx(0.5, 0), Cx(1.0, 0), Cx(-0.8, 0), Cx(0, 1.0), Cx(0.3, 0.4),
                 Cx(-0.2, -0.6), Cx(0.9, 0.1), Cx(0.05, 0)}) {
      worst = std::max(worst, rel(linv_contour(k, z, p).value, eval_h0(f, z)));
    }
    if (worst > 1e-6) return {false, worst, "round trip"};
    double phi_res = std::abs(contour_phi(Cx(-1.0, 0), Cx(2, 0), Cx(0.7, 0)) -
                              confluent_phi(Cx(-1.0, 0), Cx(2, 0), Cx(0.7, 0)));
    if (phi_res > 1e-8) return {false, phi_res, "Phi reproduction at (2,-0.5,0.7)"};
    double dual = 0.0;
    for (Cx z : {Cx(0.7, 0), Cx(0.4, 0.2)})
      dual = std::max(dual, rel(linv_contour_alt(k, z, p).value, linv_contour(k, z, p).value));
    if (dual > 1e-8) return {false, dual, "two representations disagree"};
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= 30.0) return {false, dual, "runtime budget 30 s exceeded"};
    return {true, std::max({worst, phi_res, dual}), "8-point round trip + validations"};
  });

  criterion(13, "singular Volterra equation and kernel exponent", []() -> Body {
    OperatorParams p(Cx(0.5, 0), Cx(-2.0, 0));
    H0Series estar(24);
    estar.c(1) = Cx(1, 0);
    estar.c(3) = Cx(0.5, 0);
    H0Series k1 = k1_from_k(apply_l_series(estar, p), p);
    double worst = 0.0;
    for (Cx z : {Cx(0.5, 0), Cx(0.3, 0)}) {
      Cx lhs = volterra_lhs(estar, z, p);
      Cx rhs = (z / p.x) * eval_h0(k1, z);
      worst = std::max(worst, rel(lhs, rhs));
    }
    if (worst > 1e-6) return {false, worst, "lhs vs (z/x) K1"};
    VolterraGeometry geo(-2.0);
    double slope = singularity_slope(
        [&](double tau) {
          return std::abs(psi_kernel(Cx(0.3, 0), tau, Branch::minus, p) -
                          psi_kernel(Cx(0.3, 0), tau, Branch::plus, p));
        },
        geo.tau_hat, 0.99, 0.9999, 25);
    if (std::abs(slope + 0.5) > 0.02)
      return {false, std::abs(slope + 0.5), "kernel log-log slope " + std::to_string(slope)};
    return {true, std::max(worst, std::abs(slope + 0.5)),
            "slope fit on [0.99, 0.9999] tau_hat (kernel difference)"};
  });

  criterion(14, "identity regression: six classical identities, 50 draws", []() -> Body {
    auto rep = identity_suite(14, 50);
    return {rep.all_pass, rep.max_residual, "tolerance 1e-8 each"};
  });

  int failed = 0;
  for (const auto& r : g_results)
    if (!r.pass) ++failed;
  std::printf("\n%d/%d criteria pass", int(g_results.size()) - failed, int(g_results.size()));
  if (failed) std::printf("  (criterion 11 documents a defective reference value)");
  std::printf("\n");
  return failed == 0 ? 0 : 1;
}
