#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyperinv/types.hpp"

namespace hyperinv {

using BigInt = boost::multiprecision::cpp_int;
/// Canonical big rational: gcd-reduced, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

/// Exact bivariate polynomial in (x, nu) over Rational, sparse and canonical
/// (no zero coefficients stored), so operator== is structural equality.
class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (deg_x, deg_nu)

  BiPoly() = default;
  static BiPoly constant(const Rational& c);
  static BiPoly monomial(int deg_x, int deg_nu, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }

  void add_term(int deg_x, int deg_nu, const Rational& c);

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly& operator*=(const Rational& c);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  Cx eval(Cx x, Cx nu) const;

 private:
  std::map<Key, Rational> terms_;
};

/// Lower-triangular matrix of exact polynomials, 1-based indices.
struct TriMatrixExact {
  int n = 0;
  std::vector<BiPoly> entries;  // packed rows

  explicit TriMatrixExact(int order)
      : n(order), entries(std::size_t(order) * (order + 1) / 2) {}
  BiPoly& at(int r, int k) { return entries[std::size_t(r) * (r - 1) / 2 + k - 1]; }
  const BiPoly& at(int r, int k) const {
    return entries[std::size_t(r) * (r - 1) / 2 + k - 1];
  }
};

/// Exact A(x, nu): entry (r,k) = (-1)^k C(r,k) sum_m (k-r)_m (-r nu)_m / ((-r)_m m!) x^m.
TriMatrixExact build_a_exact(int n);

/// Exact B(x, nu): entry (r,k) = (-1)^k C(r,k) sum_m (k-r)_m (k nu)_m / ((k)_m m!) x^m.
TriMatrixExact build_b_exact(int n);

/// Exact triangular product; throws DomainError on order mismatch.
TriMatrixExact mul_tri(const TriMatrixExact& p, const TriMatrixExact& q);

/// exact identity test helper
bool is_identity(const TriMatrixExact& m);

/// Convolution coefficient U_l^{(n,k)} as an exact polynomial in nu.
/// Requires 1 <= k <= n and l <= n (the (-n)_m denominators vanish beyond).
BiPoly criterion_coefficient(int n, int k, int ell);

Cx eval_bipoly(const BiPoly& p, Cx x, Cx nu);

}  // namespace hyperinv
