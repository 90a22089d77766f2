#pragma once

// Scalar-generic kernels for the triangular matrix pair. The public f64 API
// wraps these; the verification sweep instantiates them at extended precision
// because the entries carry binomial-scale alternating sums.

#include <vector>

namespace hyperinv::detail {

// Terminating Gauss sum F(-m, beta; gamma; x) by running products.
// Requires gamma not in {0, -1, ..., -(m-1)}; the caller checks.
template <class C>
C hyp_poly_t(int m, const C& beta, const C& gamma, const C& x) {
  C sum(1), term(1);
  for (int j = 0; j < m; ++j) {
    term *= C(-m + j) * (beta + C(j)) / ((gamma + C(j)) * C(j + 1)) * x;
    sum += term;
  }
  return sum;
}

template <class C>
C binomial_t(int n, int k) {
  C r(1);
  if (k > n - k) k = n - k;
  for (int j = 0; j < k; ++j) r = r * C(n - j) / C(j + 1);
  return r;
}

// Dense lower-triangular storage, 1-based (row, col), col <= row.
template <class C>
struct TriDense {
  int n = 0;
  std::vector<C> e;  // row-major packed: row r holds r entries
  explicit TriDense(int order) : n(order), e(std::size_t(order) * (order + 1) / 2) {}
  C& at(int r, int k) { return e[std::size_t(r) * (r - 1) / 2 + k - 1]; }
  const C& at(int r, int k) const { return e[std::size_t(r) * (r - 1) / 2 + k - 1]; }
};

template <class C>
TriDense<C> build_a_t(int n, const C& x, const C& nu) {
  TriDense<C> m(n);
  for (int r = 1; r <= n; ++r) {
    for (int k = 1; k < r; ++k) {
      C sign = (k % 2 == 0) ? C(1) : C(-1);
      m.at(r, k) = sign * binomial_t<C>(r, k) * hyp_poly_t<C>(r - k, C(-r) * nu, C(-r), x);
    }
    m.at(r, r) = (r % 2 == 0) ? C(1) : C(-1);
  }
  return m;
}

template <class C>
TriDense<C> build_b_t(int n, const C& x, const C& nu) {
  TriDense<C> m(n);
  for (int r = 1; r <= n; ++r) {
    for (int k = 1; k < r; ++k) {
      C sign = (k % 2 == 0) ? C(1) : C(-1);
      m.at(r, k) = sign * binomial_t<C>(r, k) * hyp_poly_t<C>(r - k, C(k) * nu, C(k), x);
    }
    m.at(r, r) = (r % 2 == 0) ? C(1) : C(-1);
  }
  return m;
}

// Lower-triangular product, same order.
template <class C>
TriDense<C> mul_tri_t(const TriDense<C>& p, const TriDense<C>& q) {
  TriDense<C> out(p.n);
  for (int r = 1; r <= p.n; ++r)
    for (int k = 1; k <= r; ++k) {
      C acc(0);
      for (int l = k; l <= r; ++l) acc += p.at(r, l) * q.at(l, k);
      out.at(r, k) = acc;
    }
  return out;
}

template <class C>
std::vector<C> apply_tri_t(const TriDense<C>& m, const std::vector<C>& s) {
  std::vector<C> out(m.n);
  for (int r = 1; r <= m.n; ++r) {
    C acc(0);
    for (int k = 1; k <= r; ++k) acc += m.at(r, k) * s[k - 1];
    out[r - 1] = acc;
  }
  return out;
}

template <class C>
std::vector<C> solve_tri_t(const TriDense<C>& m, const std::vector<C>& rhs) {
  std::vector<C> sol(m.n);
  for (int r = 1; r <= m.n; ++r) {
    C acc = rhs[r - 1];
    for (int k = 1; k < r; ++k) acc -= m.at(r, k) * sol[k - 1];
    sol[r - 1] = acc / m.at(r, r);
  }
  return sol;
}

}  // namespace hyperinv::detail
