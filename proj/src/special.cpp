#include "hyperinv/special.hpp"

#include <cmath>
#include <random>

#include "hyperinv/detail/kernels.hpp"
#include "hyperinv/quadrature.hpp"

namespace hyperinv {

namespace {

// Lanczos, g = 7, 9 coefficients.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kLogSqrtTwoPi = 0.91893853320467274178;

// Lanczos rational sum; valid for Re(z) >= 0.5.
Cx lanczos_sum(Cx z) {
  Cx acc(kLanczos[0], 0.0);
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z - 1.0 + double(i));
  return acc;
}

// Principal log-Gamma on Re(z) > 0; recurrence keeps the strip
// 0 < Re(z) < 1/2 on the principal branch.
Cx log_gamma_right(Cx z) {
  if (z.real() < 0.5) return log_gamma_right(z + 1.0) - std::log(z);
  Cx t = z + (kLanczosG - 0.5);
  return kLogSqrtTwoPi + (z - 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

}  // namespace

GammaEval gamma(Cx z) {
  require_finite(z, "gamma");
  GammaEval out;
  if (is_nonpositive_int(z)) {
    out.at_pole = true;
    double nan = std::numeric_limits<double>::quiet_NaN();
    out.value = Cx(nan, nan);
    out.log_form = out.value;
    return out;
  }
  if (z.real() >= 0.5) {
    out.log_form = log_gamma_right(z);
    out.value = std::exp(out.log_form);
    return out;
  }
  // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
  Cx lg_ref = log_gamma_right(1.0 - z);
  Cx s = std::sin(kPi * z);
  out.value = kPi / (s * std::exp(lg_ref));
  out.log_form = std::log(out.value);
  return out;
}

Cx recip_gamma(Cx z) {
  if (is_nonpositive_int(z)) return Cx(0.0, 0.0);
  GammaEval g = gamma(z);
  return 1.0 / g.value;
}

Cx log_gamma(Cx z) { return gamma(z).log_form; }

Cx digamma(Cx z) {
  require_finite(z, "digamma");
  if (is_nonpositive_int(z)) throw DomainError("digamma: pole at nonpositive integer");
  if (z.real() < 0.5) {
    // psi(z) = psi(1-z) - pi cot(pi z)
    return digamma(1.0 - z) - kPi * std::cos(kPi * z) / std::sin(kPi * z);
  }
  Cx acc(0.0, 0.0);
  while (z.real() < 10.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  // asymptotic series with Bernoulli numbers B_2..B_14
  static const double b[7] = {1.0 / 6,  -1.0 / 30,      1.0 / 42, -1.0 / 30,
                              5.0 / 66, -691.0 / 2730,  7.0 / 6};
  Cx inv = 1.0 / z, inv2 = inv * inv;
  Cx s = std::log(z) - 0.5 * inv;
  Cx p = inv2;
  for (int k = 0; k < 7; ++k) {
    s -= b[k] / (2.0 * (k + 1)) * p;
    p *= inv2;
  }
  return s + acc;
}

Cx pochhammer(Cx c, int m) {
  Cx p(1.0, 0.0);
  for (int j = 0; j < m; ++j) p *= c + double(j);
  return p;
}

Cx hyp_poly(int m, Cx beta, Cx gamma_, Cx x) {
  require_finite(beta, "hyp_poly");
  require_finite(gamma_, "hyp_poly");
  require_finite(x, "hyp_poly");
  if (is_real_int(gamma_) && gamma_.real() <= 0.0 && gamma_.real() > -double(m))
    throw DomainError("hyp_poly: zero Pochhammer denominator (gamma in {0,-1,..,-(m-1)})");
  return detail::hyp_poly_t<Cx>(m, beta, gamma_, x);
}

Cx confluent_phi(Cx alpha, Cx beta, Cx z) {
  require_finite(z, "confluent_phi");
  if (is_nonpositive_int(beta)) throw DomainError("confluent_phi: beta in -N");
  if (z.real() < 0.0 && !is_nonpositive_int(alpha)) {
    // Kummer: Phi(a;b;z) = e^z Phi(b-a;b;-z). Transforming for any Re(z) < 0
    // bounds the series cancellation by exp(|z| - |Re z|).
    return std::exp(z) * confluent_phi(beta - alpha, beta, -z);
  }
  Cx sum(1.0, 0.0), term(1.0, 0.0);
  constexpr int kCap = 10000;
  int quiet = 0;
  for (int m = 0; m < kCap; ++m) {
    term *= (alpha + double(m)) / ((beta + double(m)) * double(m + 1)) * z;
    sum += term;
    if (term == Cx(0.0, 0.0)) return sum;  // terminating
    if (std::abs(term) <= 1e-17 * std::max(1.0, std::abs(sum))) {
      if (++quiet >= 2) return sum;
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("confluent_phi: series cap exceeded");
}

Cx gauss_2f1(Cx alpha, Cx beta, Cx gamma_, Cx z) {
  if (std::abs(z) >= 1.0 && !is_nonpositive_int(alpha) && !is_nonpositive_int(beta))
    throw DomainError("gauss_2f1: |z| >= 1");
  if (is_nonpositive_int(gamma_)) throw DomainError("gauss_2f1: gamma in -N");
  Cx sum(1.0, 0.0), term(1.0, 0.0);
  constexpr int kCap = 200000;
  int quiet = 0;
  for (int j = 0; j < kCap; ++j) {
    term *= (alpha + double(j)) * (beta + double(j)) / ((gamma_ + double(j)) * double(j + 1)) * z;
    sum += term;
    if (term == Cx(0.0, 0.0)) return sum;
    if (std::abs(term) <= 1e-17 * std::max(1.0, std::abs(sum))) {
      if (++quiet >= 2) return sum;
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("gauss_2f1: series cap exceeded");
}

Cx d_sum(int n_terms, Cx lambda, Cx mu) {
  Cx acc(0.0, 0.0);
  double sign = 1.0;
  for (int r = 0; r < n_terms; ++r) {
    acc += sign * recip_gamma(1.0 + double(r) - lambda) * recip_gamma(1.0 - double(r) + mu);
    sign = -sign;
  }
  return acc;
}

Cx d_closed(int n_terms, Cx lambda, Cx mu) {
  double sgn_n = (n_terms % 2 == 0) ? 1.0 : -1.0;
  if (lambda == mu) {
    if (is_real_int(lambda)) {
      // limit from the proof: only 0 <= m <= N-1 leaves a surviving term
      long m = std::lround(lambda.real());
      if (m < 0 || m > long(n_terms) - 1) return Cx(0.0, 0.0);
      return Cx((m % 2 == 0) ? 1.0 : -1.0, 0.0);
    }
    return std::sin(kPi * lambda) / kPi *
           (digamma(-lambda) - digamma(double(n_terms) - lambda));
  }
  Cx first = recip_gamma(-lambda) * recip_gamma(1.0 + mu);
  Cx second = sgn_n * recip_gamma(double(n_terms) - lambda) *
              recip_gamma(1.0 - double(n_terms) + mu);
  return (first - second) / (mu - lambda);
}

namespace {

double rel_residual(Cx got, Cx want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

IdentityReport identity_suite(std::uint64_t seed, int trials, double tol) {
  if (trials < 1) throw DomainError("identity_suite: trials >= 1 required");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uni = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

  IdentityReport rep;
  rep.entries.resize(6);
  rep.entries[0].name = "contiguous";
  rep.entries[1].name = "euler_transform";
  rep.entries[2].name = "derivative";
  rep.entries[3].name = "argument_swap";
  rep.entries[4].name = "gauss_summation";
  rep.entries[5].name = "euler_integral";

  for (int t = 0; t < trials; ++t) {
    int m = 1 + int(uni(0.0, 5.0));        // terminating first parameter -m
    Cx alpha(-double(m), 0.0);
    double beta = uni(0.3, 2.5);
    double gam = beta + uni(1.2, 3.0);
    double z = uni(-0.6, 0.6);

    // beta F(a,b+1;g+1;z) = g F(a,b;g;z) - (g-b) F(a,b;g+1;z)
    {
      Cx lhs = beta * hyp_poly(m, beta + 1.0, gam + 1.0, z);
      Cx rhs = gam * hyp_poly(m, beta, gam, z) - (gam - beta) * hyp_poly(m, beta, gam + 1.0, z);
      auto& e = rep.entries[0];
      e.max_residual = std::max(e.max_residual, rel_residual(lhs, rhs));
      ++e.trials;
    }
    // F(a,b;g;z) = (1-z)^{g-a-b} F(g-a,g-b;g;z)
    {
      Cx lhs = hyp_poly(m, beta, gam, z);
      Cx rhs = std::pow(Cx(1.0 - z, 0.0), gam + double(m) - beta) *
               gauss_2f1(gam + double(m), gam - beta, gam, z);
      auto& e = rep.entries[1];
      e.max_residual = std::max(e.max_residual, rel_residual(lhs, rhs));
      ++e.trials;
    }
    // d/dz F(a,b;g;z) = (a b / g) F(a+1,b+1;g+1;z); lhs via 4th-order stencil
    {
      double h = 1e-3;
      Cx num = (-hyp_poly(m, beta, gam, z + 2 * h) + 8.0 * hyp_poly(m, beta, gam, z + h) -
                8.0 * hyp_poly(m, beta, gam, z - h) + hyp_poly(m, beta, gam, z - 2 * h)) /
               (12.0 * h);
      Cx rhs = alpha * beta / gam * hyp_poly(m - 1, beta + 1.0, gam + 1.0, z);
      auto& e = rep.entries[2];
      e.max_residual = std::max(e.max_residual, rel_residual(num, rhs));
      ++e.trials;
    }
    // F(-m,b;g;1-x) = [G(g)G(g-b+m)/(G(g-b)G(g+m))] F(-m,b;b+1-m-g;x)
    {
      double xx = uni(0.15, 0.85);
      Cx lhs = hyp_poly(m, beta, gam, 1.0 - xx);
      Cx ratio = std::exp(log_gamma(Cx(gam)) + log_gamma(Cx(gam - beta + m)) -
                          log_gamma(Cx(gam - beta)) - log_gamma(Cx(gam + m)));
      Cx rhs = ratio * hyp_poly(m, beta, Cx(beta + 1.0 - m - gam), xx);
      auto& e = rep.entries[3];
      e.max_residual = std::max(e.max_residual, rel_residual(lhs, rhs));
      ++e.trials;
    }
    // F(a,b;g;1) = G(g)G(g-a-b)/(G(g-a)G(g-b))
    {
      Cx lhs = hyp_poly(m, beta, gam, 1.0);
      Cx rhs = std::exp(log_gamma(Cx(gam)) + log_gamma(Cx(gam + m - beta)) -
                        log_gamma(Cx(gam + m)) - log_gamma(Cx(gam - beta)));
      auto& e = rep.entries[4];
      e.max_residual = std::max(e.max_residual, rel_residual(lhs, rhs));
      ++e.trials;
    }
    // B(b,g-b) F(a,b;g;z) = int_0^1 t^{b-1}(1-t)^{g-b-1}(1-zt)^{m} dt
    {
      double bq = uni(1.3, 3.0);
      double gq = bq + uni(1.3, 3.0);
      double zq = uni(-0.6, 0.6);
      Cx integral = adaptive_integrate(
          [&](double u) {
            return Cx(std::pow(u, bq - 1.0) * std::pow(1.0 - u, gq - bq - 1.0) *
                          std::pow(1.0 - zq * u, double(m)),
                      0.0);
          },
          0.0, 1.0, {1e-12, 1e-12, 60});
      Cx lhs = std::exp(log_gamma(Cx(bq)) + log_gamma(Cx(gq - bq)) - log_gamma(Cx(gq))) *
               hyp_poly(m, bq, gq, zq);
      auto& e = rep.entries[5];
      e.max_residual = std::max(e.max_residual, rel_residual(integral, lhs));
      ++e.trials;
    }
  }

  rep.all_pass = true;
  for (auto& e : rep.entries) {
    e.pass = e.max_residual <= tol;
    rep.max_residual = std::max(rep.max_residual, e.max_residual);
    rep.all_pass = rep.all_pass && e.pass;
  }
  return rep;
}

}  // namespace hyperinv
