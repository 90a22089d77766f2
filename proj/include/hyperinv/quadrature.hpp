#pragma once

#include <functional>
#include <vector>

#include "hyperinv/types.hpp"

namespace hyperinv {

struct QuadSettings {
  double abs_tol = 1e-11;
  double rel_tol = 1e-11;
  int max_depth = 60;
};

/// Adaptive Gauss-Kronrod (G7/K15) with interval bisection over [a, b].
/// Complex-valued integrand of a real variable. Absolute floor 1e-14.
Cx adaptive_integrate(const std::function<Cx(double)>& f, double a, double b,
                      const QuadSettings& s = {});

/// Gauss-Legendre nodes/weights on [-1, 1]; cached per n.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

/// Fixed-order Gauss-Legendre on [a, b].
Cx integrate_gl(const std::function<Cx(double)>& f, double a, double b, int n);

/// Node-doubling Gauss-Legendre: doubles n until two successive estimates
/// agree to tol (relative, floored at abs 1e-14) or n exceeds max_nodes.
Cx integrate_gl_doubling(const std::function<Cx(double)>& f, double a, double b,
                         int n0, double tol, int max_nodes = 1 << 14);

}  // namespace hyperinv
