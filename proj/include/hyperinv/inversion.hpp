#pragma once

#include <vector>

#include "hyperinv/detail/kernels.hpp"
#include "hyperinv/quadrature.hpp"
#include "hyperinv/types.hpp"

namespace hyperinv {

/// Parameters for the numeric matrix layer. Plain A/B builds accept any
/// complex (x, nu); the Q / reduced-rhs / closed-solution paths additionally
/// need x outside R^- u {1} and Re(nu) < 0 and enforce that themselves.
struct MatrixParams {
  Cx x{};
  Cx nu{};
  int n = 0;
};

/// 1-based complex sequence, indices 1..n as in the triangular systems.
class Seq {
 public:
  Seq() = default;
  explicit Seq(int n) : v_(n, Cx(0.0, 0.0)) {}
  explicit Seq(std::vector<Cx> values) : v_(std::move(values)) {}

  int size() const { return int(v_.size()); }
  Cx& operator()(int i) { return v_[i - 1]; }
  const Cx& operator()(int i) const { return v_[i - 1]; }
  const std::vector<Cx>& raw() const { return v_; }
  std::vector<Cx>& raw() { return v_; }

 private:
  std::vector<Cx> v_;
};

/// Numeric lower-triangular matrix, 1-based (row, col) with col <= row.
using TriMatrixNum = detail::TriDense<Cx>;

TriMatrixNum build_a(const MatrixParams& p);
TriMatrixNum build_b(const MatrixParams& p);

Seq apply_tri(const TriMatrixNum& m, const Seq& s);

/// Forward substitution; throws DomainError on zero diagonal or size mismatch.
Seq solve_tri(const TriMatrixNum& m, const Seq& rhs);

/// Q_{b,l} = -[G(b)G(1-b nu)/G(b-b nu)] x^{1-b}/(1-x) F(l-b, -b nu; -b; x),
/// Gamma ratio in log space. Requires 1 <= l <= b, Re(nu) < 0, x in domain.
Cx q_coeff(int b, int ell, Cx x, Cx nu);

/// M_{b,l} = int_0^1 z^l r(z)^b dz by adaptive quadrature (real x, nu).
Cx m_integral_quad(int b, int ell, Cx x, Cx nu);

/// Same integral through the Gamma * 2F1 closed form.
Cx m_integral_closed(int b, int ell, Cx x, Cx nu);

/// Q_{b,l} assembled from the definite integrals:
/// (l+1-b) M_{b,l} - l c M_{b,l-1}, with c = (1-nu x)/(1-x).
/// Quadrature route; independent oracle for q_coeff.
Cx q_via_m(int b, int ell, Cx x, Cx nu);

/// Ktilde_b = -[G(b-b nu)/(G(b)G(1-b nu))] (1-x) x^{b-1} K_b.
Seq reduced_rhs(const Seq& k, Cx x, Cx nu);

/// Closed-form unique solution of the reduced system:
/// E_b = (1-x) sum_l (-1)^{l-1} C(b,l) F(l-b, l nu; l; x) x^{l-1}
///       [G(l-l nu)/(G(l)G(1-l nu))] K_l.
Seq solve_e0(const Seq& k, Cx x, Cx nu);

/// System matrix of (T0): entry (b,l) = (-1)^l C(b,l) Q_{b,l}.
TriMatrixNum t0_matrix(int n, Cx x, Cx nu);

}  // namespace hyperinv
