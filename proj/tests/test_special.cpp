#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hyperinv/special.hpp"

using namespace hyperinv;

namespace {

double rel_err(Cx got, Cx want) {
  double scale = std::max(1e-300, std::abs(want));
  return std::abs(got - want) / scale;
}

constexpr double kEulerGamma = 0.57721566490153286061;

}  // namespace

TEST_CASE("gamma at small integers and half-integer") {
  CHECK(rel_err(gamma(Cx(1.0, 0)).value, Cx(1.0, 0)) < 1e-14);
  CHECK(rel_err(gamma(Cx(5.0, 0)).value, Cx(24.0, 0)) < 1e-14);
  CHECK(rel_err(gamma(Cx(0.5, 0)).value, Cx(std::sqrt(kPi), 0)) < 1e-14);
  // reflection side
  CHECK(rel_err(gamma(Cx(-0.5, 0)).value, Cx(-2.0 * std::sqrt(kPi), 0)) < 1e-13);
}

TEST_CASE("gamma pole flag, never an exception") {
  for (double m : {0.0, -1.0, -7.0}) {
    auto g = gamma(Cx(m, 0.0));
    CHECK(g.at_pole);
    CHECK(recip_gamma(Cx(m, 0.0)) == Cx(0.0, 0.0));
  }
  CHECK_FALSE(gamma(Cx(-0.999999, 0.0)).at_pole);
}

TEST_CASE("gamma against frozen high-precision references") {
  struct Ref {
    Cx z, gamma_val, psi_val;
  };
  // 30-digit references
  const Ref refs[] = {
      {{3.5, 2.0}, {-1.2371865633661036378, 1.2899550031953227671},
       {1.2837361971973439238, 0.58507518451034648233}},
      {{0.25, -1.5}, {0.062307528139193409387, 0.20628962293912129698},
       {0.40048582610900268032, -1.743064161365960122}},
      {{-2.5, 0.5}, {-0.3338752035224323374, -0.20645730796360841492},
       {1.1165080219699073014, 2.7175825969005915157}},
      {{12.0, -7.0}, {1112765.2628578610603, 5208219.4721327993525},
       {2.6000443631211382085, -0.5465848207427854091}},
  };
  for (const auto& r : refs) {
    CHECK(rel_err(gamma(r.z).value, r.gamma_val) < 1e-13);
    CHECK(std::abs(digamma(r.z) - r.psi_val) < 1e-12);
  }
}

TEST_CASE("gamma recurrence on a grid avoiding poles") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(-20.0, 40.0), im(-30.0, 30.0);
  for (int i = 0; i < 300; ++i) {
    Cx z(re(rng), im(rng));
    if (std::abs(z.imag()) < 0.1 && z.real() < 1.0) continue;  // stay off the pole line
    auto a = gamma(z + 1.0).value;
    auto b = z * gamma(z).value;
    CHECK(rel_err(a, b) < 1e-12);
  }
}

TEST_CASE("log_gamma exponentiates back and is real on the positive axis") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> re(0.1, 60.0), im(-40.0, 40.0);
  for (int i = 0; i < 200; ++i) {
    Cx z(re(rng), im(rng));
    CHECK(rel_err(std::exp(log_gamma(z)), gamma(z).value) < 1e-12);
  }
  CHECK(log_gamma(Cx(7.3, 0.0)).imag() == 0.0);
}

TEST_CASE("digamma values and reflection") {
  CHECK(std::abs(digamma(Cx(1.0, 0)) - Cx(-kEulerGamma, 0)) < 1e-13);
  CHECK(std::abs(digamma(Cx(2.0, 0)) - Cx(1.0 - kEulerGamma, 0)) < 1e-13);
  // psi(z) - psi(1-z) = -pi cot(pi z) at z = 0.3
  Cx z(0.3, 0.0);
  Cx lhs = digamma(z) - digamma(1.0 - z);
  Cx rhs = -kPi * std::cos(kPi * z) / std::sin(kPi * z);
  CHECK(std::abs(lhs - rhs) < 1e-12);
  CHECK_THROWS_AS(digamma(Cx(-3.0, 0.0)), DomainError);
}

TEST_CASE("digamma matches a log-gamma derivative") {
  for (Cx z : {Cx(1.7, 0.3), Cx(6.0, -2.0), Cx(0.8, 0.0), Cx(3.5, 10.0)}) {
    double h = 1e-5;
    Cx num = (log_gamma(z + h) - log_gamma(z - h)) / (2.0 * h);
    CHECK(std::abs(num - digamma(z)) < 1e-9);
  }
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Cx(3.7, 1.0), 0) == Cx(1.0, 0.0));
  CHECK(pochhammer(Cx(-3.0, 0.0), 2) == Cx(6.0, 0.0));
  // (-n)_m = (-1)^m n!/(n-m)! at n=5, m=3
  CHECK(pochhammer(Cx(-5.0, 0.0), 3) == Cx(-60.0, 0.0));
}

TEST_CASE("hyp_poly low orders against expanded forms") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    Cx beta(u(rng), u(rng)), gam(u(rng) + 3.0, u(rng)), x(u(rng), u(rng));
    CHECK(hyp_poly(0, beta, gam, x) == Cx(1.0, 0.0));
    Cx nu(u(rng), u(rng));
    // F(-1, -2 nu; -2; x) = 1 - nu x
    CHECK(rel_err(hyp_poly(1, -2.0 * nu, Cx(-2.0, 0.0), x), 1.0 - nu * x) < 1e-13);
    // F(-2, nu; 1; x) = 1 - 2 nu x + nu(nu+1) x^2/2
    Cx want = 1.0 - 2.0 * nu * x + nu * (nu + 1.0) * x * x / 2.0;
    CHECK(rel_err(hyp_poly(2, nu, Cx(1.0, 0.0), x), want) < 1e-12);
  }
}

TEST_CASE("hyp_poly negative-integer gamma stays finite when n > m") {
  // gamma = -n with n > m is fine; the running denominators never hit zero
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 40; ++i) {
    int m = 1 + int(std::uniform_int_distribution<int>(0, 4)(rng));
    int n = m + 1 + int(std::uniform_int_distribution<int>(0, 3)(rng));
    Cx beta(u(rng), u(rng)), x(u(rng), u(rng));
    Cx got = hyp_poly(m, beta, Cx(-double(n), 0.0), x);
    // explicit sum with Pochhammer factors
    Cx want(0.0, 0.0);
    double mfact = 1.0;
    for (int j = 0; j <= m; ++j) {
      if (j > 0) mfact *= j;
      want += pochhammer(Cx(-double(m), 0), j) * pochhammer(beta, j) /
              (pochhammer(Cx(-double(n), 0), j) * mfact) * std::pow(x, double(j));
    }
    CHECK(rel_err(got, want) < 1e-12);
  }
  CHECK_THROWS_AS(hyp_poly(3, Cx(1.0, 0), Cx(-2.0, 0.0), Cx(0.5, 0)), DomainError);
  CHECK_THROWS_AS(hyp_poly(1, Cx(1.0, 0), Cx(0.0, 0.0), Cx(0.5, 0)), DomainError);
}

TEST_CASE("confluent_phi basics") {
  // Phi(a; a; z) = e^z
  CHECK(rel_err(confluent_phi(Cx(0.7, 0), Cx(0.7, 0), Cx(1.3, 0)), std::exp(Cx(1.3, 0))) <
        1e-12);
  CHECK(confluent_phi(Cx(2.5, 1.0), Cx(4.0, 0), Cx(0.0, 0)) == Cx(1.0, 0.0));
  // terminating: Phi(-1; 2; z) = 1 - z/2
  CHECK(rel_err(confluent_phi(Cx(-1.0, 0), Cx(2.0, 0), Cx(0.4, 0)), Cx(0.8, 0)) < 1e-14);
  CHECK_THROWS_AS(confluent_phi(Cx(1.0, 0), Cx(-2.0, 0), Cx(1.0, 0)), DomainError);
}

TEST_CASE("confluent_phi Kummer consistency") {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u(0.2, 3.0), uz(-35.0, 35.0), ui(-5.0, 5.0);
  for (int i = 0; i < 60; ++i) {
    Cx a(u(rng), 0.3 * u(rng)), b(u(rng) + 3.0, 0.0);
    Cx z(uz(rng), ui(rng));
    Cx lhs = confluent_phi(a, b, z);
    Cx rhs = std::exp(z) * confluent_phi(b - a, b, -z);
    CHECK(rel_err(lhs, rhs) < 1e-9);
  }
}

TEST_CASE("d_sum single term and pole-vanishing cases") {
  Cx lam(0.3, 0), mu(0.7, 0);
  Cx want = recip_gamma(1.0 - lam) * recip_gamma(1.0 + mu);
  CHECK(rel_err(d_sum(1, lam, mu), want) < 1e-14);
  // integer lambda = m, integer mu < m: every term hits a Gamma pole
  CHECK(d_sum(4, Cx(2.0, 0), Cx(1.0, 0)) == Cx(0.0, 0.0));
}

TEST_CASE("d_closed against the finite-sum oracle") {
  CHECK(std::abs(d_closed(3, Cx(0.3, 0), Cx(0.7, 0)) - d_sum(3, Cx(0.3, 0), Cx(0.7, 0))) <
        1e-12);
  CHECK(std::abs(d_closed(2, Cx(0.25, 0), Cx(0.25, 0)) - d_sum(2, Cx(0.25, 0), Cx(0.25, 0))) <
        1e-12);
  // D_{n-k+1}(m, n-k-m') = 0 for m + m' < n-k
  for (int nk : {2, 3, 5}) {
    for (int m = 0; m <= nk; ++m)
      for (int mp = 0; m + mp < nk; ++mp)
        CHECK(std::abs(d_closed(nk + 1, Cx(double(m), 0), Cx(double(nk - mp), 0))) == 0.0);
  }
}

TEST_CASE("d_closed equals d_sum across both branches (property)") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-4.0, 6.0);
  std::uniform_int_distribution<int> nn(1, 8), pick(0, 3);
  for (int i = 0; i < 400; ++i) {
    int n = nn(rng);
    Cx lam, mu;
    switch (pick(rng)) {
      case 0:  // generic distinct
        lam = Cx(u(rng), 0.3 * u(rng));
        mu = Cx(u(rng), 0.3 * u(rng));
        break;
      case 1:  // equal non-integer
        lam = mu = Cx(u(rng) + 0.37, 0.0);
        break;
      case 2:  // equal integer (the explicit limit rule)
        lam = mu = Cx(double(std::uniform_int_distribution<int>(-3, 9)(rng)), 0.0);
        break;
      default:  // integer pair, distinct
        lam = Cx(double(std::uniform_int_distribution<int>(-2, 6)(rng)), 0.0);
        mu = lam + Cx(double(std::uniform_int_distribution<int>(1, 4)(rng)), 0.0);
        break;
    }
    if (lam != mu && std::abs(lam - mu) < 1e-6) continue;
    CAPTURE(n);
    CAPTURE(lam);
    CAPTURE(mu);
    // reciprocal gammas grow factorially for Re << 0, so compare to scale
    Cx ref = d_sum(n, lam, mu);
    CHECK(std::abs(d_closed(n, lam, mu) - ref) < 1e-11 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("identity suite spot values") {
  // contiguous relation at (alpha, beta, gamma, z) = (-2, 1.5, 3.2, 0.4)
  {
    double beta = 1.5, gam = 3.2, z = 0.4;
    Cx lhs = beta * hyp_poly(2, Cx(beta + 1.0, 0), Cx(gam + 1.0, 0), Cx(z, 0));
    Cx rhs = gam * hyp_poly(2, Cx(beta, 0), Cx(gam, 0), Cx(z, 0)) -
             (gam - beta) * hyp_poly(2, Cx(beta, 0), Cx(gam + 1.0, 0), Cx(z, 0));
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
  // Euler transform at terminating alpha = -3
  {
    double beta = 1.4, gam = 3.7, z = 0.35;
    Cx lhs = hyp_poly(3, Cx(beta, 0), Cx(gam, 0), Cx(z, 0));
    Cx rhs = std::pow(Cx(1.0 - z, 0), gam + 3.0 - beta) *
             gauss_2f1(Cx(gam + 3.0, 0), Cx(gam - beta, 0), Cx(gam, 0), Cx(z, 0));
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
  // Gauss summation: F(-2, 1.1; 4.3; 1) against the Gamma ratio
  {
    Cx lhs = hyp_poly(2, Cx(1.1, 0), Cx(4.3, 0), Cx(1.0, 0));
    Cx rhs = std::exp(log_gamma(Cx(4.3, 0)) + log_gamma(Cx(4.3 + 2.0 - 1.1, 0)) -
                      log_gamma(Cx(4.3 + 2.0, 0)) - log_gamma(Cx(4.3 - 1.1, 0)));
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("identity suite randomized report") {
  auto rep = identity_suite(42, 60);
  CHECK(rep.entries.size() == 6);
  for (const auto& e : rep.entries) {
    CAPTURE(e.name);
    CHECK(e.trials == 60);
    CHECK(e.max_residual <= 1e-8);
    CHECK(e.pass);
  }
  CHECK(rep.all_pass);
  CHECK_THROWS_AS(identity_suite(1, 0), DomainError);
}
