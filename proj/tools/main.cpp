// hyperinv command line: matrix export, triangular solving, operator
// evaluation and the verification suites.

#include <CLI11.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include "hyperinv/exact_poly.hpp"
#include "hyperinv/genfun.hpp"
#include "hyperinv/io.hpp"
#include "hyperinv/operators.hpp"
#include "hyperinv/special.hpp"

using namespace hyperinv;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitDomain = 2;
constexpr int kExitIo = 3;

int thread_cap() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HYPERINV_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) hw = std::min<unsigned>(hw, unsigned(v));
  }
  return int(std::min(hw, 8u));
}

// deterministic: results land in index-order slots
template <class Fn>
void parallel_for(int count, Fn&& fn) {
  int threads = std::min(thread_cap(), count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open output file: " + path);
  out << payload << "\n";
  if (!out) throw std::ios_base::failure("write failed: " + path);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open input file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw std::ios_base::failure(std::string("bad JSON in ") + path + ": " + e.what());
  }
  return j;
}

struct SuiteResult {
  std::string suite;
  int cases = 0;
  double max_residual = 0.0;
  bool pass = true;

  void record(double residual, double tol) {
    ++cases;
    max_residual = std::max(max_residual, residual);
    if (!(residual <= tol)) pass = false;
  }
  Json to_json_obj() const {
    return Json{{"suite", suite}, {"cases", cases}, {"max_residual", max_residual},
                {"pass", pass}};
  }
};

SuiteResult verify_exact(int n_max) {
  SuiteResult r{"exact"};
  for (int n = 1; n <= n_max; ++n) {
    auto a = build_a_exact(n);
    auto b = build_b_exact(n);
    r.record(is_identity(mul_tri(a, b)) ? 0.0 : 1.0, 0.0);
    r.record(is_identity(mul_tri(b, a)) ? 0.0 : 1.0, 0.0);
  }
  for (int n = 1; n <= std::min(n_max, 8); ++n)
    for (int k = 1; k <= n; ++k) {
      if (k < n)
        r.record(criterion_coefficient(n, k, n - k).is_zero() ? 0.0 : 1.0, 0.0);
      else
        r.record(criterion_coefficient(n, n, 0) == BiPoly::constant(1) ? 0.0 : 1.0, 0.0);
    }
  return r;
}

SuiteResult verify_numeric(int n, std::uint64_t seed, int samples) {
  using MC = boost::multiprecision::cpp_complex_50;
  SuiteResult r{"numeric"};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  struct Draw {
    double xr, xi, nr, ni;
  };
  std::vector<Draw> draws(samples);
  for (auto& d : draws) d = {2.0 * u(rng), 2.0 * u(rng), 3.0 * u(rng), 3.0 * u(rng)};
  std::vector<double> residuals(samples, 0.0);
  parallel_for(samples, [&](int i) {
    const auto& d = draws[i];
    MC x(d.xr, d.xi), nu(d.nr, d.ni);
    auto a = detail::build_a_t<MC>(n, x, nu);
    auto b = detail::build_b_t<MC>(n, x, nu);
    auto prod = detail::mul_tri_t<MC>(a, b);
    double worst = 0.0;
    for (int row = 1; row <= n; ++row)
      for (int col = 1; col <= row; ++col) {
        MC want = (row == col) ? MC(1) : MC(0);
        worst = std::max(worst, double(abs(prod.at(row, col) - want)));
      }
    residuals[i] = worst;
  });
  for (double res : residuals) r.record(res, 1e-10);
  return r;
}

SuiteResult verify_lemma(std::uint64_t seed) {
  SuiteResult r{"lemma"};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 4.0);
  std::uniform_int_distribution<int> nn(1, 6);
  // structured grid plus a random equal-argument fill to 200 points
  std::vector<std::tuple<int, Cx, Cx>> pts;
  for (int n : {1, 2, 3, 5})
    for (double lam : {-1.6, -0.8, 0.25, 0.7, 1.3, 2.6})
      for (double mu : {-1.2, 0.3, 1.7, 3.1}) pts.emplace_back(n, Cx(lam, 0), Cx(mu, 0));
  for (int m = -2; m <= 5; ++m)
    for (int n : {1, 2, 4}) pts.emplace_back(n, Cx(double(m), 0), Cx(double(m), 0));
  while (pts.size() < 200) {
    double lam = u(rng);
    pts.emplace_back(nn(rng), Cx(lam, 0), Cx(lam, 0));
  }
  for (auto& [n, lam, mu] : pts)
    r.record(std::abs(d_closed(n, lam, mu) - d_sum(n, lam, mu)), 1e-11);
  return r;
}

SuiteResult verify_genfun(std::uint64_t seed) {
  SuiteResult r{"genfun"};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (Cx nu : {Cx(-2, 0), Cx(-1, 0), Cx(-0.5, 0), Cx(0.3, 0.1)}) {
    double rad = radius_r(nu);
    for (int i = 0; i < 10; ++i) {
      Cx w = std::polar(0.5 * rad * u(rng), 2.0 * kPi * u(rng));
      r.record(std::abs(sigma_series(w, nu, 200) - sigma_closed(w, nu)), 1e-10);
    }
  }
  r.record(std::abs(radius_r(Cx(-1, 0)) - 0.25), 1e-12);
  r.record(std::abs(sigma_closed(Cx(0.1, 0), Cx(-1, 0)) - Cx(0.14549722436790294, 0)), 1e-6);
  for (Cx nu : {Cx(-2, 0), Cx(-1, 0), Cx(-0.5, 0)}) {
    double rad = radius_r(nu);
    for (double frac : {0.1, 0.3, 0.45}) r.record(ode_residual(Cx(frac * rad, 0), nu), 1e-6);
  }
  for (auto [x, nu] : {std::pair{Cx(0.5, 0), Cx(-1.0, 0)}, {Cx(0.5, 0), Cx(-2.0, 0)},
                       {Cx(0.3, 0.1), Cx(-1.2, 0)}}) {
    GfParams p{x, nu, 24};
    for (int i = 1; i <= 8; ++i) {
      Cx z = std::polar(0.1 * i / 8.0, 2.0 * kPi * i / 8.0);
      r.record(std::abs(omega(xi(z, p), p) - z), 1e-9);
    }
  }
  GfParams ph{Cx(0.5, 0), Cx(-1.0, 0), 24};
  r.record(std::abs(omega(Cx(0.2, 0), ph) - Cx(-0.2909944487358059, 0)), 1e-6);
  std::uniform_real_distribution<double> v(-1.0, 1.0);
  for (auto [x, nu] : {std::pair{Cx(0.4, 0), Cx(-1.3, 0)}, {Cx(0.5, 0), Cx(-2.0, 0)}}) {
    Seq t(12);
    for (int i = 1; i <= 12; ++i) t(i) = Cx(v(rng), v(rng));
    GfParams p{x, nu, 14};
    r.record(ogf_relation_residual(t, p), 1e-8);
    Seq t_pad(60);
    for (int i = 1; i <= 12; ++i) t_pad(i) = t(i);
    Seq s = apply_tri(build_b(MatrixParams{x, nu, 60}), t_pad);
    for (Cx z : {Cx(0.5, 0), Cx(0, 0.5)}) {
      Cx direct(0, 0);
      double fact = 1.0;
      Cx zp(1, 0);
      for (int m = 1; m <= 60; ++m) {
        zp *= z;
        fact *= m;
        direct += s(m) * zp / fact;
      }
      r.record(std::abs(egf_s(z, t, p) - direct) / std::max(1.0, std::abs(direct)), 1e-8);
    }
  }
  return r;
}

SuiteResult verify_operators(std::uint64_t seed) {
  SuiteResult r{"operators"};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  OperatorParams p(Cx(0.5, 0), Cx(-2.0, 0));

  {
    int n = 20;
    Seq k(n);
    for (int i = 1; i <= n; ++i) k(i) = Cx(u(rng), u(rng));
    Seq via_formula = solve_e0(k, p.x, p.nu);
    Seq via_solve = solve_tri(t0_matrix(n, p.x, p.nu), k);
    double worst = 0.0;
    for (int i = 1; i <= n; ++i)
      worst = std::max(worst, std::abs(via_formula(i) - via_solve(i)) /
                                  std::max(1e-30, std::abs(via_solve(i))));
    r.record(worst, 1e-10);
  }
  for (auto [b, l] : {std::pair{1, 1}, {3, 2}, {5, 4}})
    r.record(std::abs(q_coeff(b, l, p.x, p.nu) - q_via_m(b, l, p.x, p.nu)) /
                 std::max(1.0, std::abs(q_coeff(b, l, p.x, p.nu))),
             1e-8);
  H0Series f(24);
  f.c(1) = Cx(1, 0);
  f.c(3) = Cx(1, 0);
  H0Series k = apply_l_series(f, p);
  for (Cx z : {Cx(0.5, 0), Cx(1.0, 0), Cx(1.0, 0.5)}) {
    Cx lq = apply_l_quad(f, z, p);
    r.record(std::abs(lq - eval_h0(k, z)) / std::max(1.0, std::abs(lq)), 1e-8);
    Cx fac = p.c0() * delta_numeric([&](Cx w) { return apply_m_quad(f, w, p); }, z);
    r.record(std::abs(lq - fac) / std::max(1.0, std::abs(lq)), 1e-7);
  }
  H0Series k1 = k1_from_k(k, p);
  for (Cx z : {Cx(0.5, 0), Cx(0.3, 0)}) {
    Cx lhs = volterra_lhs(f, z, p);
    Cx rhs = (z / p.x) * eval_h0(k1, z);
    r.record(std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)), 1e-6);
  }
  VolterraGeometry geo(-2.0);
  double slope = singularity_slope(
      [&](double tau) {
        return std::abs(psi_kernel(Cx(0.3, 0), tau, Branch::minus, p) -
                        psi_kernel(Cx(0.3, 0), tau, Branch::plus, p));
      },
      geo.tau_hat, 0.99, 0.9999, 25);
  r.record(std::abs(slope + 0.5), 0.02);
  r.record(std::abs(contour_phi(Cx(-1.0, 0), Cx(2, 0), Cx(0.7, 0)) -
                    confluent_phi(Cx(-1.0, 0), Cx(2, 0), Cx(0.7, 0))),
           1e-8);
  for (Cx z : {Cx(0.5, 0), Cx(0, 1.0), Cx(0.9, 0.1)}) {
    Cx got = linv_contour(k, z, p).value;
    Cx want = eval_h0(f, z);
    r.record(std::abs(got - want) / std::max(1.0, std::abs(want)), 1e-6);
  }
  Cx alt = linv_contour_alt(k, Cx(0.7, 0), p).value;
  Cx main = linv_contour(k, Cx(0.7, 0), p).value;
  r.record(std::abs(alt - main) / std::max(1.0, std::abs(main)), 1e-8);
  return r;
}

SuiteResult verify_identities(std::uint64_t seed) {
  SuiteResult r{"identities"};
  auto rep = identity_suite(seed, 50);
  for (const auto& e : rep.entries) r.record(e.max_residual, 1e-8);
  return r;
}

std::string format_report(const std::vector<SuiteResult>& suites, bool pretty) {
  if (!pretty) {
    Json arr = Json::array();
    for (const auto& s : suites) arr.push_back(s.to_json_obj());
    return arr.dump(2);
  }
  std::ostringstream out;
  out << "suite        cases  max_residual   pass\n";
  for (const auto& s : suites) {
    char line[96];
    std::snprintf(line, sizeof line, "%-12s %5d  %12.3e   %s", s.suite.c_str(), s.cases,
                  s.max_residual, s.pass ? "yes" : "NO");
    out << line << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperinv: triangular inversion pairs, generating-function transforms,\n"
               "and the integro-differential operator toolkit"};
  app.require_subcommand(1);

  std::string x_text = "0.5", nu_text = "-2", out_path, format = "json";
  int order_n = 24;
  std::uint64_t seed = 1;
  double rho = 0.5;
  bool pretty = false;

  auto add_params = [&](CLI::App* cmd, bool with_format = false) {
    cmd->add_option("--x", x_text, "parameter x (complex: re, re+imj or re,im)");
    cmd->add_option("--nu", nu_text, "parameter nu (complex literal)");
    cmd->add_option("--n,--order", order_n, "matrix order / truncation order");
    cmd->add_option("--out", out_path, "output path (default stdout)");
    if (with_format)
      cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* cmd_matrices = app.add_subcommand("matrices", "export A, B (and Q) matrices");
  bool exact = false, with_q = false;
  add_params(cmd_matrices, true);
  cmd_matrices->add_flag("--exact", exact, "exact polynomial entries instead of numeric");
  cmd_matrices->add_flag("--with-q", with_q, "include the Q coefficient matrix");

  auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  add_params(cmd_verify);
  cmd_verify->add_option("--suite", suite, "exact|numeric|lemma|genfun|operators|identities|all")
      ->check(CLI::IsMember(
          {"exact", "numeric", "lemma", "genfun", "operators", "identities", "all"}));
  cmd_verify->add_option("--seed", seed, "random seed");
  cmd_verify->add_flag("--pretty", pretty, "human-readable table instead of JSON");

  auto* cmd_solve = app.add_subcommand("solve", "solve the triangular system for E");
  std::string k_file;
  add_params(cmd_solve);
  cmd_solve->add_option("--k", k_file, "right-hand side sequence (JSON)")->required();

  auto* cmd_apply = app.add_subcommand("apply", "evaluate L, M or Linv on a series");
  std::string op = "L", f_file;
  std::vector<std::string> z_texts;
  add_params(cmd_apply);
  cmd_apply->add_option("--op", op, "L, M or Linv")->check(CLI::IsMember({"L", "M", "Linv"}));
  cmd_apply->add_option("--f", f_file, "input series (H0 JSON)")->required();
  cmd_apply->add_option("--z", z_texts, "evaluation points (repeatable)")->required();
  cmd_apply->add_option("--rho", rho, "contour circle radius");
  double quad_tol = 1e-9;
  cmd_apply->add_option("--tol", quad_tol, "quadrature tolerance for L and M");

  auto* cmd_genfun = app.add_subcommand("genfun", "generating-function evaluators");
  std::string fn = "xi", arg_text = "0";
  int terms = 60;
  add_params(cmd_genfun);
  cmd_genfun->add_option("--fn", fn, "xi|theta|sigma|sigma-series|omega|radius|ode")
      ->check(CLI::IsMember({"xi", "theta", "sigma", "sigma-series", "omega", "radius", "ode"}));
  cmd_genfun->add_option("--arg", arg_text, "argument (z, w or xi value; complex literal)");
  cmd_genfun->add_option("--terms", terms, "series term count for sigma-series");

  auto* cmd_volterra = app.add_subcommand("volterra", "singular Volterra equation checks");
  std::string estar_file, z_text = "0.5";
  double kernel_tau = -1.0;
  add_params(cmd_volterra);
  cmd_volterra->add_option("--f", estar_file, "E* series (H0 JSON)");
  cmd_volterra->add_option("--z", z_text, "evaluation point");
  cmd_volterra->add_option("--kernel-tau", kernel_tau,
                           "print Psi_-/Psi_+ at this tau instead of the integral");

  CLI11_PARSE(app, argc, argv);

  try {
    Cx x = parse_cx(x_text), nu = parse_cx(nu_text);

    if (*cmd_matrices) {
      if (exact) {
        Json out{{"A", to_json(build_a_exact(order_n))}, {"B", to_json(build_b_exact(order_n))}};
        write_output(out_path, out.dump(2));
      } else if (format == "csv") {
        MatrixParams mp{x, nu, order_n};
        std::string payload =
            "# A\n" + tri_to_csv(build_a(mp)) + "# B\n" + tri_to_csv(build_b(mp));
        if (with_q) payload += "# Q\n" + tri_to_csv(t0_matrix(order_n, x, nu));
        write_output(out_path, payload);
      } else {
        MatrixParams mp{x, nu, order_n};
        Json out{{"x", to_json(x)},
                 {"nu", to_json(nu)},
                 {"A", to_json(build_a(mp))},
                 {"B", to_json(build_b(mp))}};
        if (with_q) out["Q"] = to_json(t0_matrix(order_n, x, nu));
        write_output(out_path, out.dump(2));
      }
      return 0;
    }

    if (*cmd_verify) {
      std::vector<SuiteResult> results;
      bool all = suite == "all";
      if (all || suite == "exact") results.push_back(verify_exact(std::min(order_n, 10)));
      if (all || suite == "numeric")
        results.push_back(verify_numeric(std::max(order_n, 2), seed, 20));
      if (all || suite == "lemma") results.push_back(verify_lemma(seed));
      if (all || suite == "genfun") results.push_back(verify_genfun(seed));
      if (all || suite == "operators") results.push_back(verify_operators(seed));
      if (all || suite == "identities") results.push_back(verify_identities(seed));
      write_output(out_path, format_report(results, pretty));
      for (const auto& s : results)
        if (!s.pass) return kExitVerifyFail;
      return 0;
    }

    if (*cmd_solve) {
      Seq k = seq_from_json(read_json_file(k_file));
      Seq e = solve_e0(k, x, nu);
      Seq via_solve = solve_tri(t0_matrix(k.size(), x, nu), k);
      double residual = 0.0;
      for (int i = 1; i <= k.size(); ++i)
        residual =
            std::max(residual, std::abs(e(i) - via_solve(i)) / std::max(1.0, std::abs(e(i))));
      Json out{{"x", to_json(x)},
               {"nu", to_json(nu)},
               {"E", to_json(e)},
               {"cross_residual_vs_solve_tri", residual}};
      write_output(out_path, out.dump(2));
      return 0;
    }

    if (*cmd_apply) {
      H0Series f = h0_from_json(read_json_file(f_file));
      OperatorParams p(x, nu);
      p.contour.rho = rho;
      p.quad.abs_tol = p.quad.rel_tol = quad_tol;
      Json values = Json::array();
      bool any_warning = false;
      for (const auto& zt : z_texts) {
        Cx z = parse_cx(zt);
        Cx value;
        if (op == "L") {
          value = apply_l_quad(f, z, p);
        } else if (op == "M") {
          value = apply_m_quad(f, z, p);
        } else {
          value = linv_contour(f, z, p).value;
        }
        bool warn = false;
        eval_h0(f, z, &warn);
        any_warning = any_warning || warn;
        values.push_back(Json{{"z", to_json(z)}, {"value", to_json(value)}});
      }
      Json out{{"op", op}, {"values", values}};
      if (any_warning) out["truncation_warning"] = true;
      write_output(out_path, out.dump(2));
      return 0;
    }

    if (*cmd_genfun) {
      Cx arg = parse_cx(arg_text);
      GfParams p{x, nu, order_n};
      Json out{{"fn", fn}, {"x", to_json(x)}, {"nu", to_json(nu)}, {"arg", to_json(arg)}};
      if (fn == "xi") {
        bool near_cut = false;
        out["value"] = to_json(xi(arg, p, &near_cut));
        if (near_cut) out["branch_cut_warning"] = true;
      } else if (fn == "theta") {
        out["value"] = to_json(theta(arg, nu));
      } else if (fn == "sigma") {
        out["value"] = to_json(sigma_closed(arg, nu));
      } else if (fn == "sigma-series") {
        double tail = 0.0;
        out["value"] = to_json(sigma_series(arg, nu, terms, &tail));
        out["tail_bound"] = tail;
      } else if (fn == "omega") {
        out["value"] = to_json(omega(arg, p));
      } else if (fn == "radius") {
        out["value"] = radius_r(nu);
      } else {
        out["value"] = ode_residual(arg, nu);
      }
      write_output(out_path, out.dump(2));
      return 0;
    }

    if (*cmd_volterra) {
      OperatorParams p(x, nu);
      if (kernel_tau >= 0.0) {
        Cx z = parse_cx(z_text);
        Json out{{"tau", kernel_tau},
                 {"psi_minus", to_json(psi_kernel(z, kernel_tau, Branch::minus, p))},
                 {"psi_plus", to_json(psi_kernel(z, kernel_tau, Branch::plus, p))}};
        write_output(out_path, out.dump(2));
        return 0;
      }
      if (estar_file.empty()) throw DomainError("volterra: --f or --kernel-tau required");
      H0Series estar = h0_from_json(read_json_file(estar_file));
      Cx z = parse_cx(z_text);
      Cx lhs = volterra_lhs(estar, z, p);
      H0Series k1 = k1_from_k(apply_l_series(estar, p), p);
      Cx rhs = (z / p.x) * eval_h0(k1, z);
      Json out{{"z", to_json(z)},
               {"lhs", to_json(lhs)},
               {"rhs_zx_k1", to_json(rhs)},
               {"residual", std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs))}};
      write_output(out_path, out.dump(2));
      return 0;
    }
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return 0;
}
