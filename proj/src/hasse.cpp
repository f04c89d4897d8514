#include "frobq/hasse.hpp"

#include "frobq/errors.hpp"

namespace frobq {

Poly hasse_poly(const Poly& f, unsigned eps) {
  if (eps == 0 || f.is_zero()) return f;
  const FieldPtr& F = f.field();
  const auto& c = f.coeffs();
  if (c.size() <= eps) return Poly(F);
  std::vector<Elem> r(c.size() - eps, 0);
  for (std::size_t j = eps; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    std::uint32_t b = binom_mod(j, eps, F->p());
    if (b) r[j - eps] = F->mul(F->from_int(b), c[j]);
  }
  return Poly(F, std::move(r));
}

namespace {

// Numerator N with D_eps(1/f) = N / f^{eps+1}.
Poly inverse_numerator(const Poly& f, unsigned eps) {
  const FieldPtr& F = f.field();
  if (eps == 0) return Poly::constant(F, 1);
  std::vector<Poly> D(eps + 1);
  for (unsigned i = 1; i <= eps; ++i) D[i] = hasse_poly(f, i);
  // T[k][e]: sum over compositions of e into k positive parts of prod D_{i_j}(f).
  std::vector<std::vector<Poly>> T(eps + 1, std::vector<Poly>(eps + 1, Poly(F)));
  for (unsigned e = 1; e <= eps; ++e) T[1][e] = D[e];
  for (unsigned k = 2; k <= eps; ++k)
    for (unsigned e = k; e <= eps; ++e) {
      Poly acc(F);
      for (unsigned i = 1; i + (k - 1) <= e; ++i) acc += D[i] * T[k - 1][e - i];
      T[k][e] = acc;
    }
  // sum_k (-1)^k T[k][eps] / f^{k+1}, over the common denominator f^{eps+1}.
  Poly N(F);
  for (unsigned k = 1; k <= eps; ++k) {
    if (T[k][eps].is_zero()) continue;
    Poly term = T[k][eps] * f.pow(eps - k);
    N = (k % 2) ? N - term : N + term;
  }
  return N;
}

}  // namespace

RatFunc hasse_inverse(const Poly& f, unsigned eps) {
  if (f.is_zero()) throw DomainError("D(1/f) with f = 0");
  return RatFunc(inverse_numerator(f, eps), f.pow(eps + 1));
}

RatFunc hasse_derivative(const RatFunc& x, unsigned eps) {
  if (eps == 0 || x.is_zero()) return x;
  if (x.is_poly()) return RatFunc(hasse_poly(x.num(), eps));
  const Poly& a = x.num();
  const Poly& b = x.den();
  const FieldPtr& F = x.field();
  // D_eps(a/b) = sum_i D_i(a) N_{eps-i} b^i / b^{eps+1}.
  Poly acc(F);
  Poly bpow = Poly::constant(F, 1);
  for (unsigned i = 0; i <= eps; ++i) {
    Poly Da = hasse_poly(a, i);
    if (!Da.is_zero()) acc += Da * inverse_numerator(b, eps - i) * bpow;
    bpow = bpow * b;
  }
  return RatFunc(acc, b.pow(eps + 1));
}

RatFunc check_p3(const RatFunc& x, unsigned m, unsigned eps) {
  const FieldPtr& F = x.field();
  std::uint64_t pm = 1;
  for (unsigned i = 0; i < m; ++i) pm *= F->p();
  RatFunc direct = hasse_derivative(x.frob_pow(m), eps);
  RatFunc via = eps % pm == 0 ? hasse_derivative(x, static_cast<unsigned>(eps / pm)).frob_pow(m) : RatFunc(F);
  if (direct != via)
    throw InvariantError("p-th power rule disagrees for D_" + std::to_string(eps) + "((" + x.str() + ")^" +
                         std::to_string(pm) + ")");
  return direct;
}

RatFunc derivative_in_basis(const RatFunc& g, unsigned s, unsigned eps) {
  const FieldPtr& F = g.field();
  std::uint64_t q = 1;
  for (unsigned i = 0; i < s; ++i) q *= F->p();
  if (eps < 1 || eps >= q) throw DomainError("derivative_in_basis needs 1 <= eps < p^s");
  auto parts = q_power_decomposition(g, s);
  RatFunc acc(F);
  for (std::size_t i = eps; i < parts.size(); ++i) {
    if (parts[i].is_zero()) continue;
    std::uint32_t b = binom_mod(i, eps, F->p());
    if (!b) continue;
    acc += parts[i].frob_pow(s) * RatFunc(Poly::monomial(F, F->from_int(b), i - eps));
  }
  return acc;
}

std::optional<OrdInequalitySides> ord_inequality_sides(const RatFunc& u, unsigned eps, const Place& v, Elem eta) {
  if (u.is_zero()) throw DomainError("order inequality needs u != 0");
  const FieldPtr& F = u.field();
  if (!v.infinity) {
    if (v.Q.deg() != 1) throw DomainError("order inequality is checked at degree-1 places");
    RatFunc d = hasse_derivative(u, eps);
    if (d.is_zero()) return std::nullopt;
    return OrdInequalitySides{ord_at(d, v).value(), ord_at(u, v).value() - static_cast<long long>(eps)};
  }
  // z -> 1/(z - eta) maps the place at infinity to eta.
  Poly lin = Poly::z(F) - Poly::constant(F, eta);
  RatFunc sub = RatFunc(Poly::constant(F, 1), lin);
  RatFunc ut = u.compose(sub);
  RatFunc d = hasse_derivative(ut, eps);
  if (d.is_zero()) return std::nullopt;
  Place at_eta = Place{false, lin};
  long long ord_inf = ord_at(u, Place::inf()).value();
  if (ord_at(ut, at_eta).value() != ord_inf) throw InvariantError("substitution z -> 1/(z-eta) moved the order");
  return OrdInequalitySides{ord_at(d, at_eta).value(), ord_inf - static_cast<long long>(eps)};
}

}  // namespace frobq
