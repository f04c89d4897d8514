#pragma once

// Random generators and oracles shared by the unit tests and the acceptance
// suites. The oracles avoid the code paths they are used to check.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "frobq/additive.hpp"

namespace frobq::oracle {

inline Poly random_poly(const FieldPtr& F, int max_deg, std::mt19937_64& rng) {
  int d = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
  std::vector<Elem> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = static_cast<Elem>(rng() % F->size());
  return Poly(F, c);
}

inline Poly random_nonzero_poly(const FieldPtr& F, int max_deg, std::mt19937_64& rng) {
  while (true) {
    Poly p = random_poly(F, max_deg, rng);
    if (!p.is_zero()) return p;
  }
}

inline RatFunc random_ratfunc(const FieldPtr& F, int max_deg, std::mt19937_64& rng) {
  return RatFunc(random_poly(F, max_deg, rng), random_nonzero_poly(F, max_deg, rng));
}

inline RatFunc random_nonzero_ratfunc(const FieldPtr& F, int max_deg, std::mt19937_64& rng) {
  return RatFunc(random_nonzero_poly(F, max_deg, rng), random_nonzero_poly(F, max_deg, rng));
}

// Random element of R: polynomial over a product of S-powers.
inline RatFunc random_ring_elem(const Localization& L, int max_num_deg, int max_pow, std::mt19937_64& rng) {
  Poly den = Poly::constant(L.field(), 1);
  for (auto& s : L.S()) den = den * s.pow(rng() % static_cast<unsigned>(max_pow + 1));
  return RatFunc(random_poly(L.field(), max_num_deg, rng), den);
}

// Up to nvars R-variables x1.., each with s_i <= max_s and F_p[z] coefficients.
inline AdditivePoly random_additive(const FieldPtr& F, std::size_t nvars, unsigned max_s, int max_deg,
                                    std::mt19937_64& rng) {
  AdditivePoly f(F);
  for (std::size_t i = 1; i <= nvars; ++i) {
    unsigned s = static_cast<unsigned>(rng() % (max_s + 1));
    for (unsigned k = 0; k <= s; ++k) {
      Poly c = random_poly(Field::prime(F->p()), max_deg, rng);
      f.add_term(Var{"x" + std::to_string(i), Sort::R}, k, Poly(F, c.coeffs()));
    }
  }
  return f;
}

// p-basic f over F with F_p coefficients: q variables of degree q = p^s.
inline AdditivePoly random_p_basic(const FieldPtr& F, unsigned s, int max_deg, std::mt19937_64& rng) {
  auto Fp = Field::prime(F->p());
  std::size_t q = 1;
  for (unsigned i = 0; i < s; ++i) q *= F->p();
  // q independent leading coefficients need degrees reaching q - 1.
  max_deg = std::max(max_deg, static_cast<int>(q));
  while (true) {
    AdditivePoly f(F);
    for (std::size_t j = 1; j <= q; ++j) {
      Var v{"x" + std::to_string(j), Sort::R};
      Poly b = random_poly(Fp, max_deg, rng);
      if (b.is_zero()) b = Poly::constant(Fp, 1);
      f.add_term(v, s, Poly(F, b.coeffs()));
      for (unsigned k = 0; k < s; ++k) {
        if (rng() % 2) continue;
        f.add_term(v, k, Poly(F, random_poly(Fp, max_deg, rng).coeffs()));
      }
    }
    if (classify(f).p_basic) return f;
  }
}

// ---------------------------------------------------------------- Taylor series

// Truncated power series in T with coefficients in F(z).
using Series = std::vector<RatFunc>;

inline Series series_mul(const Series& a, const Series& b, std::size_t n, const FieldPtr& F) {
  Series r(n, RatFunc(F));
  for (std::size_t i = 0; i < n && i < a.size(); ++i)
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// f(z + T) mod T^n by repeated multiplication, no binomials involved.
inline Series shift_series(const Poly& f, std::size_t n) {
  const FieldPtr& F = f.field();
  Series zt(n, RatFunc(F));
  zt[0] = RatFunc::z(F);
  if (n > 1) zt[1] = RatFunc::constant(F, 1);
  Series power(n, RatFunc(F));
  power[0] = RatFunc::constant(F, 1);
  Series acc(n, RatFunc(F));
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
    for (std::size_t k = 0; k < n; ++k) acc[k] += power[k] * RatFunc::constant(F, f.coeffs()[j]);
    power = series_mul(power, zt, n, F);
  }
  return acc;
}

// Coefficient of T^eps in x(z + T): an independent value of D_eps(x).
inline RatFunc taylor_oracle(const RatFunc& x, unsigned eps) {
  const FieldPtr& F = x.field();
  std::size_t n = eps + 1;
  Series a = shift_series(x.num(), n), b = shift_series(x.den(), n);
  Series inv(n, RatFunc(F));
  inv[0] = b[0].inv();
  for (std::size_t k = 1; k < n; ++k) {
    RatFunc s(F);
    for (std::size_t i = 1; i <= k; ++i) s += b[i] * inv[k - i];
    inv[k] = -(s * inv[0]);
  }
  return series_mul(a, inv, n, F)[eps];
}

// ---------------------------------------------------------------- symbolic expansion

// Multivariate polynomials over F[z], used to expand compositions by plain
// multiplication, independent of the additive-polynomial code paths.
using Monomial = std::map<std::string, std::uint64_t>;
using MPoly = std::map<Monomial, Poly>;

inline void mp_add_term(MPoly& r, const Monomial& m, const Poly& c) {
  if (c.is_zero()) return;
  auto it = r.find(m);
  if (it == r.end()) {
    r.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) r.erase(it);
}

inline MPoly mp_mul(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (auto& [ma, ca] : a)
    for (auto& [mb, cb] : b) {
      Monomial m = ma;
      for (auto& [v, e] : mb) m[v] += e;
      mp_add_term(r, m, ca * cb);
    }
  return r;
}

inline MPoly mp_add(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (auto& [m, c] : b) mp_add_term(r, m, c);
  return r;
}

// a^e by repeated multiplication.
inline MPoly mp_pow(const MPoly& a, std::uint64_t e, const FieldPtr& F) {
  MPoly r;
  r[Monomial{}] = Poly::constant(F, 1);
  for (std::uint64_t i = 0; i < e; ++i) r = mp_mul(r, a);
  return r;
}

inline MPoly to_mpoly(const AdditivePoly& f) {
  MPoly r;
  const FieldPtr& F = f.field();
  for (auto& e : f.entries()) {
    std::uint64_t d = 1;
    for (std::size_t k = 0; k < e.c.size(); ++k) {
      mp_add_term(r, Monomial{{e.var.name, d}}, e.c[k]);
      d *= F->p();
    }
  }
  return r;
}

// f(xi(...)) expanded without using additivity: each x^{p^k} becomes the
// p^k-th power of the component, computed one p-th power at a time.
inline MPoly expand_composition(const AdditivePoly& f, const std::map<std::string, AdditivePoly>& xi) {
  const FieldPtr& F = f.field();
  MPoly r;
  for (auto& e : f.entries()) {
    auto it = xi.find(e.var.name);
    MPoly base = it == xi.end() ? to_mpoly(AdditivePoly::variable(F, e.var)) : to_mpoly(it->second);
    MPoly pw = base;
    for (std::size_t k = 0; k < e.c.size(); ++k) {
      MPoly scaled;
      for (auto& [m, c] : pw) mp_add_term(scaled, m, c * e.c[k]);
      r = mp_add(r, scaled);
      if (k + 1 < e.c.size()) pw = mp_pow(pw, F->p(), F);
    }
  }
  return r;
}

}  // namespace frobq::oracle
