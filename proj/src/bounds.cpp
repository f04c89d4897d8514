#include "frobq/bounds.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "frobq/errors.hpp"

namespace frobq {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

long long ceil_div(long long a, long long b) {
  // b > 0
  long long q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

Poly one(const FieldPtr& F) { return Poly::constant(F, 1); }

std::vector<Var> r_vars(const AdditivePoly& f) {
  std::vector<Var> out;
  for (auto& v : f.vars())
    if (v.sort == Sort::R) out.push_back(v);
  return out;
}

void require_r_only(const AdditivePoly& f, const char* what) {
  for (auto& v : f.vars())
    if (v.sort != Sort::R) throw DomainError(std::string(what) + ": F-sorted variable " + v.name);
}

// Gauss-Jordan inverse and determinant over F(z). Returns false when singular.
bool invert(std::vector<std::vector<RatFunc>> A, std::vector<std::vector<RatFunc>>& inv, RatFunc& det) {
  const std::size_t n = A.size();
  const FieldPtr& F = A[0][0].field() ? A[0][0].field() : A[0][0].num().field();
  inv.assign(n, std::vector<RatFunc>(n, RatFunc(F)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = RatFunc::constant(F, 1);
  det = RatFunc::constant(F, 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && A[piv][c].is_zero()) ++piv;
    if (piv == n) return false;
    if (piv != c) {
      std::swap(A[piv], A[c]);
      std::swap(inv[piv], inv[c]);
      det = -det;
    }
    det *= A[c][c];
    RatFunc pinv = A[c][c].inv();
    for (std::size_t k = 0; k < n; ++k) {
      A[c][k] *= pinv;
      inv[c][k] *= pinv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || A[i][c].is_zero()) continue;
      RatFunc m = A[i][c];
      for (std::size_t k = 0; k < n; ++k) {
        A[i][k] -= m * A[c][k];
        inv[i][k] -= m * inv[c][k];
      }
    }
  }
  return true;
}

// Solves A x = b over F_p; nullopt when inconsistent.
std::optional<std::vector<std::uint32_t>> solve_mod_p(std::vector<std::vector<std::uint32_t>> A,
                                                      std::vector<std::uint32_t> b, std::uint32_t p) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  auto inv = [p](std::uint32_t a) {
    std::uint64_t r = 1, x = a;
    for (std::uint32_t e = p - 2; e; e >>= 1, x = x * x % p)
      if (e & 1) r = r * x % p;
    return static_cast<std::uint32_t>(r);
  };
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    std::swap(b[piv], b[r]);
    std::uint32_t iv = inv(A[r][c]);
    for (std::size_t k = c; k < cols; ++k) A[r][k] = static_cast<std::uint32_t>(std::uint64_t(A[r][k]) * iv % p);
    b[r] = static_cast<std::uint32_t>(std::uint64_t(b[r]) * iv % p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      std::uint64_t m = A[i][c];
      for (std::size_t k = c; k < cols; ++k) A[i][k] = static_cast<std::uint32_t>((A[i][k] + (p - m) * A[r][k]) % p);
      b[i] = static_cast<std::uint32_t>((b[i] + (p - m) * b[r]) % p);
    }
    pivcol.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<std::uint32_t> x(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = b[i];
  return x;
}

long long pole_order(const RatFunc& x, const Place& v) {
  Ord o = ord_at(x, v);
  if (o.is_infinite()) return 0;
  return std::max(0LL, -o.value());
}

// x~ with sum_j b_j x~_j^q = N / Q^l, assuming Delta | N.
std::vector<RatFunc> claim_step(const ChangeOfBasis& cob, const Poly& N, const Poly& Q, long long l) {
  const FieldPtr& F = N.field();
  const long long q = static_cast<long long>(ipow(F->p(), cob.s));
  long long r = (q - l % q) % q;
  long long k = (l + r) / q;
  Poly a2 = (N * Q.pow(static_cast<std::uint64_t>(r))).exact_div(cob.Delta);
  auto parts = q_power_decomposition(a2, cob.s);
  RatFunc Qk(Q.pow(static_cast<std::uint64_t>(k)));
  std::vector<RatFunc> x;
  for (std::size_t j = 0; j < cob.b.size(); ++j) {
    Poly acc(F);
    for (std::size_t i = 0; i < parts.size(); ++i) acc += parts[i] * cob.e[i][j];
    x.push_back(RatFunc(acc) / Qk);
  }
  RatFunc lhs(F);
  for (std::size_t j = 0; j < x.size(); ++j) lhs += RatFunc(cob.b[j]) * x[j].frob_pow(cob.s);
  if (lhs != RatFunc(N, Q.pow(static_cast<std::uint64_t>(l))))
    throw InvariantError("claim step: change-of-basis preimage does not evaluate back");
  return x;
}

Assignment zero_assignment(const FieldPtr& F, const std::vector<Var>& vars) {
  Assignment a;
  for (auto& v : vars) a[v.name] = RatFunc(F);
  return a;
}

// cur += f(y), X += y.
void apply_shift(const AdditivePoly& f, const std::vector<Var>& vars, const std::vector<RatFunc>& y, RatFunc& cur,
                 Assignment& X) {
  Assignment a;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    a[vars[j].name] = y[j];
    X[vars[j].name] += y[j];
  }
  cur += f.eval(a);
}

Poly poly_part(const RatFunc& x) { return x.num() / x.den(); }

}  // namespace

// ---------------------------------------------------------------- change of basis

ChangeOfBasis change_of_basis(const AdditivePoly& f) {
  require_r_only(f, "change_of_basis");
  if (!classify(f).p_basic) throw DomainError("change_of_basis needs a p-basic polynomial");
  const FieldPtr& F = f.field();
  ChangeOfBasis cob;
  cob.s = f.s();
  cob.vars = r_vars(f);
  const std::size_t q = ipow(F->p(), cob.s);
  std::vector<RatFunc> b;
  for (auto& v : cob.vars) {
    cob.b.push_back(f.leading(v.name));
    b.push_back(RatFunc(cob.b.back()));
  }
  // A'[j][i](w) with b_j = sum_i A'[j][i](z^q) z^i.
  auto M = coordinate_matrix(b, cob.s);
  std::vector<std::vector<RatFunc>> A(q, std::vector<RatFunc>(q, RatFunc(F)));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) A[j][i] = M[i][j];
  std::vector<std::vector<RatFunc>> inv;
  RatFunc det;
  if (!invert(A, inv, det)) throw DomainError("leading coefficients are not a basis");
  if (!det.is_poly()) throw InvariantError("determinant of a polynomial matrix is not a polynomial");
  cob.Delta = det.num().inflate(q);
  // z^i = sum_j inv[i][j](z^q) b_j, so Delta z^i = sum_j (det inv[i][j])(z^q) b_j.
  cob.e.assign(q, std::vector<Poly>(q, Poly(F)));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      RatFunc adj = det * inv[i][j];
      if (!adj.is_poly()) throw InvariantError("adjugate entry is not a polynomial");
      cob.e[i][j] = adj.num().map_coeffs_frob(-static_cast<long long>(cob.s));
    }
  for (std::size_t i = 0; i < q; ++i) {
    Poly acc(F);
    for (std::size_t j = 0; j < q; ++j) acc += cob.e[i][j].frob_pow(cob.s) * cob.b[j];
    if (acc != cob.Delta.shift(i)) throw InvariantError("change-of-basis identity fails");
  }
  return cob;
}

SplittingExponents splitting_exponents(const Poly& Delta) {
  if (Delta.is_zero()) throw DomainError("splitting_exponents of 0");
  SplittingExponents out;
  if (Delta.deg() == 0) return out;
  const FieldPtr& F = Delta.field();
  const std::uint32_t p = F->p();
  unsigned long long m = 1;
  int maxmult = 1;
  for (auto& [Q, k] : factor(Delta)) {
    m = std::lcm(m, static_cast<unsigned long long>(Q.deg()));
    maxmult = std::max(maxmult, k);
  }
  unsigned m0 = 0;
  while (ipow(p, m0) < static_cast<std::uint64_t>(maxmult)) ++m0;
  out.m = static_cast<unsigned>(m);
  out.m0 = m0;
  // z^{p^{m0}} (z^{p^{m0}(p^m - 1)} - 1) via repeated p-th powers mod Delta.
  Poly z = Poly::z(F);
  Poly a = z % Delta;
  for (unsigned i = 0; i < m0; ++i) a = powmod(a, p, Delta);
  Poly b = a;
  for (unsigned i = 0; i < m; ++i) b = powmod(b, p, Delta);
  if (!((b - a) % Delta).is_zero()) throw InvariantError("Delta does not divide z^{p^(m+m0)} - z^{p^m0}");
  return out;
}

// ---------------------------------------------------------------- E_ord

OrdBoundReport e_ord(const AdditivePoly& f) {
  OrdBoundReport rep;
  rep.cob = change_of_basis(f);
  auto se = splitting_exponents(rep.cob.Delta);
  rep.m = se.m;
  rep.m0 = se.m0;
  const FieldPtr& F = f.field();
  const long long p = F->p();
  const long long q = static_cast<long long>(ipow(F->p(), rep.cob.s));
  const long long delta = rep.cob.Delta.deg();
  long long emax = 0;
  for (auto& row : rep.cob.e)
    for (auto& e : row) emax = std::max<long long>(emax, e.deg());
  // Lower terms c_{j,k} x_j^{p^k}, k < s.
  std::vector<std::pair<long long, long long>> lower;  // (deg c, p^k)
  long long maxc = 0;
  for (auto& en : f.entries())
    for (std::size_t k = 0; k + 1 < en.c.size(); ++k)
      if (!en.c[k].is_zero()) {
        lower.push_back({en.c[k].deg(), static_cast<long long>(ipow(F->p(), static_cast<unsigned>(k)))});
        maxc = std::max<long long>(maxc, en.c[k].deg());
      }
  // One Delta-division step on a polynomial of degree d >= delta leaves
  // degree at most B(d).
  auto B = [&](long long d) {
    long long best = delta - 1;
    long long wdeg = (d - delta) / q + emax;
    for (auto& [dc, pk] : lower) best = std::max(best, dc + pk * wdeg);
    return best;
  };
  long long pk = q / p > 0 ? q / p : 1;
  long long limit = 2 * (p * (maxc + pk * emax + delta + q) / (p - 1)) + q + 16;
  long long omega = std::max<long long>(0, delta - 1);
  for (long long d = std::max<long long>(delta, 0); d <= limit; ++d)
    if (B(d) >= d) omega = std::max(omega, d);
  rep.Omega = omega;
  rep.Eord = std::max(ceil_div(static_cast<long long>(ipow(F->p(), rep.m0)) + q, p - 1), omega);
  std::vector<RatFunc> b;
  for (auto& x : rep.cob.b) b.push_back(RatFunc(x));
  auto eps = wronskian_certificate(b, rep.cob.s);
  if (!eps) throw InvariantError("p-basic polynomial with dependent leading coefficients");
  rep.eps = *eps;
  rep.W = wronskian(b, rep.eps);
  rep.C = pole_order_bound(b, rep.cob.s, 0);
  return rep;
}

// ---------------------------------------------------------------- reduction

ReductionWitness reduce_mod_image(const AdditivePoly& f, const RatFunc& u, const Localization& L, SplitMode mode) {
  return reduce_mod_image(f, u, L, e_ord(f), mode);
}

ReductionWitness reduce_mod_image(const AdditivePoly& f, const RatFunc& u, const Localization& L,
                                  const OrdBoundReport& rep, SplitMode mode) {
  L.require(u, "u");
  const FieldPtr& F = f.field();
  const ChangeOfBasis& cob = rep.cob;
  const long long p = F->p();
  const long long q = static_cast<long long>(ipow(F->p(), cob.s));
  const auto& vars = cob.vars;
  const long long pm0 = static_cast<long long>(ipow(F->p(), rep.m0));

  ReductionWitness w;
  w.xTilde = zero_assignment(F, vars);
  RatFunc cur = u;

  std::vector<Poly> poles;
  for (auto& [Q, k] : factor(u.den())) poles.push_back(Q);

  for (auto& Q : poles) {
    const Place place = Place::at(Q);
    int mu = cob.Delta.deg() > 0 ? multiplicity(cob.Delta, Q) : 0;
    Poly H(F);
    long long T0 = 0;
    if (mode == SplitMode::Crt) {
      Poly D1 = cob.Delta.exact_div(Q.pow(static_cast<std::uint64_t>(mu)));
      if (D1.deg() > 0) {
        Poly s, t;
        ext_gcd(Q % D1, D1, s, t);
        H = Q * s;
      }
      T0 = ceil_div(mu + q, p - 1);
    } else {
      T0 = ceil_div(pm0 + q, p - 1);
      double size = static_cast<double>(Q.deg()) * static_cast<double>(ipow(F->p(), rep.m + rep.m0));
      if (size > 4096) throw ResourceError("Frobenius split degree too large; use the CRT split");
    }
    while (true) {
      long long l = pole_order(cur, place);
      // Stop once within E_ord; every step taken has l >= T0, so progress is strict.
      if (l <= std::max(rep.Eord, T0 - 1)) break;
      // Principal part A / Q^l of cur at Q.
      Poly Ql = Q.pow(static_cast<std::uint64_t>(l));
      Poly rest = cur.den().exact_div(Ql);
      Poly s, t;
      ext_gcd(rest % Ql, Ql, s, t);
      Poly Apart = mulmod(cur.num() % Ql, s, Ql);
      Poly N(F);
      long long l2 = 0;
      if (mode == SplitMode::Crt) {
        N = Apart * (one(F) - H) * Q.pow(static_cast<std::uint64_t>(mu));
        l2 = l + mu;
      } else {
        std::uint64_t big = ipow(F->p(), rep.m + rep.m0);
        N = -(Apart * (Q.pow(big) - Q.pow(static_cast<std::uint64_t>(pm0))));
        l2 = l + pm0;
      }
      auto x = claim_step(cob, N, Q, l2);
      for (auto& xi : x) xi = -xi;
      apply_shift(f, vars, x, cur, w.xTilde);
      long long after = pole_order(cur, place);
      w.progress.push_back({Q.str(), l, after});
      if (after >= l) throw InvariantError("reduction made no progress at " + Q.str());
    }
  }

  // Polynomial part: omega = Delta w + rem, x_j = sum_i w_i e_ij.
  while (true) {
    Poly omega = poly_part(cur);
    long long d = omega.deg();
    if (d <= rep.Omega || d < cob.Delta.deg()) break;
    Poly wq, rem;
    Poly::divmod(omega, cob.Delta, wq, rem);
    auto parts = q_power_decomposition(wq, cob.s);
    std::vector<RatFunc> x;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      Poly acc(F);
      for (std::size_t i = 0; i < parts.size(); ++i) acc += parts[i] * cob.e[i][j];
      x.push_back(-RatFunc(acc));
    }
    apply_shift(f, vars, x, cur, w.xTilde);
    long long after = poly_part(cur).deg();
    w.progress.push_back({"inf", d, std::max(after, 0LL)});
    if (after >= d) throw InvariantError("polynomial-part reduction made no progress");
  }

  // When u has no pole at infinity neither may u': kill the polynomial part
  // of positive degree with y_j = sum c z^i / P^K, c in F, by an F_p-linear solve.
  bool u_pole_inf = u.num().deg() > u.den().deg();
  if (!u_pole_inf && poly_part(cur).deg() >= 1 && !poles.empty()) {
    w.cleanupAtInfinity = true;
    Poly P = one(F);
    long long degP = 0;
    for (auto& Q : poles) {
      P *= Q;
      degP += Q.deg();
    }
    const long long K = rep.Eord / q;
    const long long top = std::max<long long>(poly_part(cur).deg(), rep.Omega);
    const long long D = K * degP + top + 1;
    const std::uint32_t mdeg = F->m();
    RatFunc PK(P.pow(static_cast<std::uint64_t>(K)));
    struct Unknown {
      std::size_t var;
      RatFunc y;
    };
    std::vector<Unknown> unk;
    std::vector<Poly> images;
    long long maxdeg = poly_part(cur).deg();
    for (std::size_t j = 0; j < vars.size(); ++j)
      for (long long i = 0; i <= D; ++i)
        for (std::uint32_t beta = 0; beta < mdeg; ++beta) {
          Elem c = F->pow(F->gen(), beta);
          if (mdeg == 1) c = 1;
          RatFunc y = RatFunc(Poly::monomial(F, c, static_cast<std::size_t>(i))) / PK;
          Assignment a = zero_assignment(F, vars);
          a[vars[j].name] = y;
          Poly img = poly_part(f.eval(a));
          maxdeg = std::max<long long>(maxdeg, img.deg());
          unk.push_back({j, y});
          images.push_back(img);
        }
    // Equations for degrees 1..maxdeg, one per F_p coordinate.
    std::vector<std::vector<std::uint32_t>> M;
    std::vector<std::uint32_t> rhs;
    Poly target = -poly_part(cur);
    for (long long d = 1; d <= maxdeg; ++d) {
      auto tc = F->coords(target.coeff(static_cast<std::size_t>(d)));
      for (std::uint32_t c = 0; c < mdeg; ++c) {
        std::vector<std::uint32_t> row;
        for (auto& img : images) row.push_back(F->coords(img.coeff(static_cast<std::size_t>(d)))[c]);
        M.push_back(std::move(row));
        rhs.push_back(tc[c]);
      }
    }
    auto sol = solve_mod_p(M, rhs, F->p());
    if (sol) {
      std::vector<RatFunc> y(vars.size(), RatFunc(F));
      for (std::size_t t = 0; t < unk.size(); ++t)
        if ((*sol)[t]) y[unk[t].var] += unk[t].y * RatFunc::constant(F, F->from_int((*sol)[t]));
      apply_shift(f, vars, y, cur, w.xTilde);
    }
  }
  w.uPrime = cur;
  return w;
}

std::vector<std::string> check_reduction(const AdditivePoly& f, const RatFunc& u, const ReductionWitness& w,
                                         long long Eord) {
  std::vector<std::string> bad;
  if (f.eval(w.xTilde) != w.uPrime - u) bad.push_back("f(x~) != u' - u");
  const RatFunc& up = w.uPrime;
  for (auto& [Q, k] : factor(up.den())) {
    if (!u.den().divisible_by(Q)) bad.push_back("new pole at " + Q.str());
    if (k > Eord) bad.push_back("pole order " + std::to_string(k) + " at " + Q.str() + " exceeds E_ord");
  }
  long long inf = up.num().deg() - static_cast<long long>(up.den().deg());
  if (!up.is_zero() && inf > 0) {
    if (u.num().deg() <= u.den().deg()) bad.push_back("new pole at infinity");
    if (inf > Eord) bad.push_back("pole order " + std::to_string(inf) + " at infinity exceeds E_ord");
  }
  for (auto& st : w.progress)
    if (st.after >= st.before) bad.push_back("no progress at " + st.place);
  return bad;
}

// ---------------------------------------------------------------- image decomposition

ImageDecomposition image_decomposition(const AdditivePoly& f, const RatFunc& u, const Localization& L) {
  auto rep = e_ord(f);
  ImageDecomposition out;
  out.e = L.e();
  out.N = static_cast<unsigned>(rep.Eord);
  auto w = reduce_mod_image(f, u, L, rep);
  for (auto& [name, v] : w.xTilde) out.x[name] = -v;
  RatFunc scaled = w.uPrime * RatFunc(out.e.pow(out.N));
  if (!scaled.is_poly()) throw InvariantError("residual is not a polynomial after clearing e^N");
  const std::size_t top = static_cast<std::size_t>(out.N) * (1 + static_cast<std::size_t>(std::max(0, out.e.deg())));
  if (scaled.num().deg() > static_cast<int>(top)) throw InvariantError("residual degree exceeds N(1 + deg e)");
  out.alpha.assign(top + 1, 0);
  for (std::size_t i = 0; i <= top; ++i) out.alpha[i] = scaled.num().coeff(i);
  if (recombine(f, out) != u) throw InvariantError("image decomposition does not recombine");
  return out;
}

RatFunc recombine(const AdditivePoly& f, const ImageDecomposition& d) {
  const FieldPtr& F = f.field();
  Poly r(F, d.alpha);
  return f.eval(d.x) + RatFunc(r, d.e.pow(d.N));
}

// ---------------------------------------------------------------- pole orders and heights

long long pole_order_bound(const std::vector<RatFunc>& b, unsigned s, long long denDeg) {
  if (b.empty()) throw DomainError("pole_order_bound needs at least one coefficient");
  auto eps = wronskian_certificate(b, s);
  if (!eps) throw DomainError("leading coefficients are dependent");
  RatFunc W = wronskian(b, *eps);
  const FieldPtr& F = W.field();
  const long long q = static_cast<long long>(ipow(F->p(), s));
  const long long dW = W.num().deg();
  long long second = ceil_div(1 - q - dW - denDeg, q);
  if (s == 0) return std::min<long long>(second, 0);
  const long long pq = static_cast<long long>(ipow(F->p(), s - 1));
  long long first = ceil_div(1 - q - dW, q - pq);
  return std::min({first, second, 0LL});
}

long long pole_order_bound(const AdditivePoly& f, long long denDeg) {
  require_r_only(f, "pole_order_bound");
  auto cl = classify(f);
  if (!cl.all_same_s) throw DomainError("pole_order_bound needs all variables of the same degree");
  std::vector<RatFunc> b;
  for (auto& v : f.vars()) b.push_back(RatFunc(f.leading(v.name)));
  return pole_order_bound(b, f.s(), denDeg);
}

HeightBoundReport height_bound(const AdditivePoly& f, long long ell, const Localization& L) {
  require_r_only(f, "height_bound");
  if (f.is_zero()) throw DomainError("height_bound of the zero polynomial");
  if (ell < 0) throw DomainError("ell must be nonnegative");
  const FieldPtr& F = f.field();
  HeightBoundReport rep;
  rep.C_finite = pole_order_bound(f, ell);
  // z -> 1/(z - eta), then clear denominators with (z - eta)^M.
  std::vector<const Poly*> all;
  for (auto& en : f.entries())
    for (auto& c : en.c)
      if (!c.is_zero()) all.push_back(&c);
  bool found = false;
  for (Elem eta : F->elements()) {
    bool ok = true;
    for (auto* c : all)
      if (c->eval(eta) == 0) {
        ok = false;
        break;
      }
    if (ok) {
      rep.eta = eta;
      found = true;
      break;
    }
  }
  if (!found) throw DomainError("no admissible eta in " + F->spec_string() + "; extend the field");
  for (auto* c : all) rep.M = std::max<unsigned>(rep.M, static_cast<unsigned>(c->deg()));
  Poly zeta = Poly::z(F) - Poly::constant(F, rep.eta);
  std::vector<RatFunc> bt;
  for (auto& v : f.vars()) {
    const Poly& c = f.leading(v.name);
    Poly acc(F);
    for (int k = 0; k <= c.deg(); ++k)
      acc += zeta.pow(rep.M - static_cast<unsigned>(k)).scale(c.coeff(static_cast<std::size_t>(k)));
    bt.push_back(RatFunc(acc));
  }
  rep.C_inf = pole_order_bound(bt, f.s(), ell);
  rep.h = -rep.C_inf;
  for (auto& Q : L.S()) rep.h += static_cast<long long>(Q.deg()) * -rep.C_finite;
  return rep;
}

std::vector<std::vector<RatFunc>> inverse_image(const AdditivePoly& f, const RatFunc& y, const Localization& L,
                                                const PreimageCaps& caps) {
  L.require(y, "y");
  const FieldPtr& F = f.field();
  long long ell = y.is_zero() ? 0 : height(y);
  auto hb = height_bound(f, ell, L);
  Poly Dfull = one(F);
  for (auto& Q : L.S()) Dfull *= Q.pow(static_cast<std::uint64_t>(-hb.C_finite));
  const long long numDeg = Dfull.deg() - hb.C_inf;
  double count = 1;
  for (long long i = 0; i <= numDeg; ++i) count *= F->size();
  if (count > static_cast<double>(caps.maxCandidates)) throw ResourceError("preimage candidate space too large");
  auto vars = f.vars();
  const std::size_t n = vars.size();
  double tuples = 1;
  for (std::size_t j = 0; j + 1 < n; ++j) tuples *= count;
  if (tuples > static_cast<double>(caps.maxTuples)) throw ResourceError("preimage tuple space too large");

  std::vector<RatFunc> cand;
  {
    std::vector<Elem> c(static_cast<std::size_t>(numDeg + 1), 0);
    RatFunc Dr(Dfull);
    while (true) {
      cand.push_back(RatFunc(Poly(F, c)) / Dr);
      std::size_t i = 0;
      while (i < c.size() && ++c[i] == F->size()) c[i++] = 0;
      if (i == c.size()) break;
    }
  }
  // values[j][t] = f restricted to variable j at cand[t].
  std::vector<std::vector<RatFunc>> values(n);
  for (std::size_t j = 0; j < n; ++j) {
    AdditivePoly fj(F);
    const auto& cs = f.coeffs(vars[j].name);
    for (std::size_t k = 0; k < cs.size(); ++k) fj.add_term(vars[j], static_cast<unsigned>(k), cs[k]);
    for (auto& x : cand) values[j].push_back(fj.eval({{vars[j].name, x}}));
  }
  auto less = [](const RatFunc& a, const RatFunc& b) { return ratfunc_less(a, b); };
  std::multimap<RatFunc, std::size_t, decltype(less)> last(less);
  for (std::size_t t = 0; t < cand.size(); ++t) last.emplace(values[n - 1][t], t);

  std::vector<std::vector<RatFunc>> out;
  std::vector<std::size_t> idx(n, 0);
  std::function<void(std::size_t, const RatFunc&)> rec = [&](std::size_t j, const RatFunc& partial) {
    if (j + 1 == n) {
      auto range = last.equal_range(y - partial);
      for (auto it = range.first; it != range.second; ++it) {
        std::vector<RatFunc> x;
        for (std::size_t k = 0; k + 1 < n; ++k) x.push_back(cand[idx[k]]);
        x.push_back(cand[it->second]);
        out.push_back(std::move(x));
      }
      return;
    }
    for (std::size_t t = 0; t < cand.size(); ++t) {
      idx[j] = t;
      rec(j + 1, partial + values[j][t]);
    }
  };
  rec(0, RatFunc(F));
  for (auto& x : out) {
    Assignment a;
    for (std::size_t j = 0; j < n; ++j) a[vars[j].name] = x[j];
    if (f.eval(a) != y) throw InvariantError("inverse_image produced a non-solution");
  }
  std::sort(out.begin(), out.end(), [](const std::vector<RatFunc>& a, const std::vector<RatFunc>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), ratfunc_less);
  });
  return out;
}

}  // namespace frobq
