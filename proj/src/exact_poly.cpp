#include "hyperinv/exact_poly.hpp"

namespace hyperinv {

std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

namespace {

// cpp_rational's two-argument constructor rejects negative denominators
Rational make_rational(BigInt num, BigInt den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

}  // namespace

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

BiPoly BiPoly::constant(const Rational& c) { return monomial(0, 0, c); }

BiPoly BiPoly::monomial(int deg_x, int deg_nu, const Rational& c) {
  BiPoly p;
  if (c != 0) p.terms_[{deg_x, deg_nu}] = c;
  return p;
}

void BiPoly::add_term(int deg_x, int deg_nu, const Rational& c) {
  if (c == 0) return;
  auto key = Key{deg_x, deg_nu};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_[key] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

Cx BiPoly::eval(Cx x, Cx nu) const {
  // Horner in x over terms grouped by deg_x; nu powers inner.
  Cx acc(0.0, 0.0);
  int prev_dx = -1;
  // terms_ is ordered by (deg_x, deg_nu); walk from the highest x-degree down
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    int dx = it->first.first;
    if (prev_dx < 0) {
      prev_dx = dx;
    } else {
      for (int j = 0; j < prev_dx - dx; ++j) acc *= x;
      prev_dx = dx;
    }
    Cx nupow(1.0, 0.0);
    for (int j = 0; j < it->first.second; ++j) nupow *= nu;
    acc += it->second.convert_to<double>() * nupow;
  }
  if (prev_dx > 0)
    for (int j = 0; j < prev_dx; ++j) acc *= x;
  return acc;
}

namespace {

BigInt binomial_big(int n, int k) {
  BigInt r = 1;
  if (k > n - k) k = n - k;
  for (int j = 0; j < k; ++j) {
    r *= (n - j);
    r /= (j + 1);
  }
  return r;
}

BigInt pochhammer_int(long c, int m) {
  BigInt r = 1;
  for (int j = 0; j < m; ++j) r *= BigInt(c + j);
  return r;
}

BigInt factorial_big(int m) {
  BigInt r = 1;
  for (int j = 2; j <= m; ++j) r *= j;
  return r;
}

// (s*nu)_m = prod_{j=0}^{m-1} (s nu + j) as an exact polynomial in nu
BiPoly pochhammer_nu(long s, int m) {
  BiPoly p = BiPoly::constant(1);
  for (int j = 0; j < m; ++j) {
    BiPoly factor = BiPoly::monomial(0, 1, Rational(s));
    factor.add_term(0, 0, Rational(j));
    p = p * factor;
  }
  return p;
}

}  // namespace

TriMatrixExact build_a_exact(int n) {
  if (n < 1) throw DomainError("build_a_exact: n >= 1 required");
  TriMatrixExact m(n);
  for (int r = 1; r <= n; ++r) {
    for (int k = 1; k <= r; ++k) {
      BiPoly entry;
      for (int mm = 0; mm <= r - k; ++mm) {
        // (k-r)_mm / ((-r)_mm mm!) exact; (-r)_mm nonzero for mm <= r-k < r
        Rational coef = make_rational(pochhammer_int(k - r, mm),
                                      pochhammer_int(-r, mm) * factorial_big(mm));
        BiPoly term = pochhammer_nu(-r, mm);
        term *= coef;
        BiPoly shifted;
        for (const auto& [key, c] : term.terms()) shifted.add_term(mm, key.second, c);
        entry += shifted;
      }
      Rational scale(binomial_big(r, k) * (k % 2 == 0 ? 1 : -1));
      entry *= scale;
      m.at(r, k) = entry;
    }
  }
  return m;
}

TriMatrixExact build_b_exact(int n) {
  if (n < 1) throw DomainError("build_b_exact: n >= 1 required");
  TriMatrixExact m(n);
  for (int r = 1; r <= n; ++r) {
    for (int k = 1; k <= r; ++k) {
      BiPoly entry;
      for (int mm = 0; mm <= r - k; ++mm) {
        Rational coef = make_rational(pochhammer_int(k - r, mm),
                                      pochhammer_int(k, mm) * factorial_big(mm));
        BiPoly term = pochhammer_nu(k, mm);
        term *= coef;
        BiPoly shifted;
        for (const auto& [key, c] : term.terms()) shifted.add_term(mm, key.second, c);
        entry += shifted;
      }
      Rational scale(binomial_big(r, k) * (k % 2 == 0 ? 1 : -1));
      entry *= scale;
      m.at(r, k) = entry;
    }
  }
  return m;
}

TriMatrixExact mul_tri(const TriMatrixExact& p, const TriMatrixExact& q) {
  if (p.n != q.n) throw DomainError("mul_tri: order mismatch");
  TriMatrixExact out(p.n);
  for (int r = 1; r <= p.n; ++r)
    for (int k = 1; k <= r; ++k) {
      BiPoly acc;
      for (int l = k; l <= r; ++l) acc += p.at(r, l) * q.at(l, k);
      out.at(r, k) = acc;
    }
  return out;
}

bool is_identity(const TriMatrixExact& m) {
  BiPoly one = BiPoly::constant(1);
  for (int r = 1; r <= m.n; ++r)
    for (int k = 1; k <= r; ++k) {
      if (r == k) {
        if (!(m.at(r, k) == one)) return false;
      } else {
        if (!m.at(r, k).is_zero()) return false;
      }
    }
  return true;
}

BiPoly criterion_coefficient(int n, int k, int ell) {
  if (k < 1 || k > n) throw DomainError("criterion_coefficient: 1 <= k <= n required");
  if (ell < 0 || ell > n)
    throw DomainError("criterion_coefficient: 0 <= ell <= n ((-n)_m must stay nonzero)");
  BiPoly acc;
  for (int m = 0; m <= ell; ++m) {
    int mp = ell - m;
    // (-1)^m (-n nu)_m / ((-n)_m m!) * (k nu)_mp / ((k)_mp mp!)
    Rational coef = make_rational(BigInt(m % 2 == 0 ? 1 : -1),
                                  pochhammer_int(-n, m) * factorial_big(m) *
                                      pochhammer_int(k, mp) * factorial_big(mp));
    BiPoly term = pochhammer_nu(-n, m) * pochhammer_nu(k, mp);
    term *= coef;
    acc += term;
  }
  return acc;
}

Cx eval_bipoly(const BiPoly& p, Cx x, Cx nu) { return p.eval(x, nu); }

}  // namespace hyperinv
