#include "hyperinv/inversion.hpp"

#include <cmath>

#include "hyperinv/special.hpp"

namespace hyperinv {

namespace {

void check_operator_domain(Cx x, Cx nu, const char* where) {
  if (!in_operator_x_domain(x))
    throw DomainError(std::string(where) + ": x must avoid the negative real axis and 1");
  if (!(nu.real() < 0.0)) throw DomainError(std::string(where) + ": Re(nu) < 0 required");
}

Cx pow_int(Cx base, int e) {
  if (e >= 0) {
    Cx r(1.0, 0.0);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  }
  return 1.0 / pow_int(base, -e);
}

}  // namespace

TriMatrixNum build_a(const MatrixParams& p) {
  require_finite(p.x, "build_a");
  require_finite(p.nu, "build_a");
  if (p.n < 1) throw DomainError("build_a: n >= 1 required");
  return detail::build_a_t<Cx>(p.n, p.x, p.nu);
}

TriMatrixNum build_b(const MatrixParams& p) {
  require_finite(p.x, "build_b");
  require_finite(p.nu, "build_b");
  if (p.n < 1) throw DomainError("build_b: n >= 1 required");
  return detail::build_b_t<Cx>(p.n, p.x, p.nu);
}

Seq apply_tri(const TriMatrixNum& m, const Seq& s) {
  if (m.n != s.size()) throw DomainError("apply_tri: dimension mismatch");
  return Seq(detail::apply_tri_t<Cx>(m, s.raw()));
}

Seq solve_tri(const TriMatrixNum& m, const Seq& rhs) {
  if (m.n != rhs.size()) throw DomainError("solve_tri: dimension mismatch");
  for (int r = 1; r <= m.n; ++r)
    if (m.at(r, r) == Cx(0.0, 0.0)) throw DomainError("solve_tri: zero diagonal");
  return Seq(detail::solve_tri_t<Cx>(m, rhs.raw()));
}

Cx q_coeff(int b, int ell, Cx x, Cx nu) {
  if (ell < 1 || ell > b) throw DomainError("q_coeff: 1 <= ell <= b required");
  check_operator_domain(x, nu, "q_coeff");
  // all Gamma arguments have Re > 0 under the domain guard
  Cx lg = log_gamma(Cx(double(b))) + log_gamma(1.0 - double(b) * nu) -
          log_gamma(double(b) - double(b) * nu);
  Cx f = hyp_poly(b - ell, -double(b) * nu, Cx(-double(b)), x);
  return -std::exp(lg) * pow_int(x, 1 - b) / (1.0 - x) * f;
}

Cx m_integral_quad(int b, int ell, Cx x, Cx nu) {
  check_operator_domain(x, nu, "m_integral_quad");
  if (x.imag() != 0.0 || nu.imag() != 0.0)
    throw DomainError("m_integral_quad: real parameters required for the quadrature path");
  double xr = x.real(), nur = nu.real();
  return adaptive_integrate(
      [=](double z) {
        double r = std::pow(1.0 - z, -nur) * std::pow(1.0 - (1.0 - xr) * z, nur - 1.0);
        return Cx(std::pow(z, double(ell)) * std::pow(r, double(b)), 0.0);
      },
      0.0, 1.0, {1e-11, 1e-11, 60});
}

Cx m_integral_closed(int b, int ell, Cx x, Cx nu) {
  check_operator_domain(x, nu, "m_integral_closed");
  Cx lg = log_gamma(Cx(double(ell + 1))) + log_gamma(1.0 - double(b) * nu) -
          log_gamma(2.0 + double(ell) - double(b) * nu);
  Cx f = gauss_2f1(double(b) * (1.0 - nu), Cx(double(ell + 1)),
                   2.0 + double(ell) - double(b) * nu, 1.0 - x);
  return std::exp(lg) * f;
}

Cx q_via_m(int b, int ell, Cx x, Cx nu) {
  if (ell < 1 || ell > b) throw DomainError("q_via_m: 1 <= ell <= b required");
  Cx c = (1.0 - nu * x) / (1.0 - x);
  Cx m1 = m_integral_quad(b, ell, x, nu);
  Cx m0 = m_integral_quad(b, ell - 1, x, nu);
  return double(ell + 1 - b) * m1 - double(ell) * c * m0;
}

Seq reduced_rhs(const Seq& k, Cx x, Cx nu) {
  check_operator_domain(x, nu, "reduced_rhs");
  Seq out(k.size());
  for (int b = 1; b <= k.size(); ++b) {
    Cx lg = log_gamma(double(b) - double(b) * nu) - log_gamma(Cx(double(b))) -
            log_gamma(1.0 - double(b) * nu);
    out(b) = -std::exp(lg) * (1.0 - x) * pow_int(x, b - 1) * k(b);
  }
  return out;
}

Seq solve_e0(const Seq& k, Cx x, Cx nu) {
  check_operator_domain(x, nu, "solve_e0");
  int n = k.size();
  Seq out(n);
  for (int b = 1; b <= n; ++b) {
    Cx acc(0.0, 0.0);
    for (int ell = 1; ell <= b; ++ell) {
      Cx lg = log_gamma(double(ell) - double(ell) * nu) - log_gamma(Cx(double(ell))) -
              log_gamma(1.0 - double(ell) * nu);
      Cx f = hyp_poly(b - ell, double(ell) * nu, Cx(double(ell)), x);
      double sign = (ell % 2 == 1) ? 1.0 : -1.0;
      acc += sign * detail::binomial_t<double>(b, ell) * f * pow_int(x, ell - 1) *
             std::exp(lg) * k(ell);
    }
    out(b) = (1.0 - x) * acc;
  }
  return out;
}

TriMatrixNum t0_matrix(int n, Cx x, Cx nu) {
  TriMatrixNum m(n);
  for (int b = 1; b <= n; ++b)
    for (int ell = 1; ell <= b; ++ell) {
      double sign = (ell % 2 == 0) ? 1.0 : -1.0;
      m.at(b, ell) = sign * detail::binomial_t<double>(b, ell) * q_coeff(b, ell, x, nu);
    }
  return m;
}

}  // namespace hyperinv
