#include "frobq/poly.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "frobq/errors.hpp"

namespace frobq {

namespace {

const FieldPtr& pick_field(const Poly& a, const Poly& b) {
  if (!a.field()) return b.field();
  if (b.field() && a.field().get() != b.field().get() && !a.field()->same_as(*b.field()))
    throw DomainError("polynomials over different fields");
  return a.field();
}

}  // namespace

Poly::Poly(FieldPtr F, std::vector<Elem> c) : F_(std::move(F)), c_(std::move(c)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const FieldPtr& F, Elem c) { return Poly(F, {c}); }

Poly Poly::monomial(const FieldPtr& F, Elem c, std::size_t k) {
  std::vector<Elem> v(k + 1, 0);
  v[k] = c;
  return Poly(F, std::move(v));
}

Poly Poly::from_ints(const FieldPtr& F, const std::vector<long long>& c) {
  std::vector<Elem> v;
  v.reserve(c.size());
  for (long long x : c) v.push_back(F->from_int(x));
  return Poly(F, std::move(v));
}

bool Poly::over_prime_field() const {
  if (!F_) return true;
  return std::all_of(c_.begin(), c_.end(), [&](Elem a) { return F_->in_prime_field(a); });
}

Poly Poly::operator+(const Poly& o) const {
  const FieldPtr& F = pick_field(*this, o);
  if (c_.size() < o.c_.size()) return o + *this;
  std::vector<Elem> r = c_;
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = F->add(r[i], o.c_[i]);
  return Poly(F, std::move(r));
}

Poly Poly::operator-() const {
  if (!F_) return *this;
  std::vector<Elem> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = F_->neg(c_[i]);
  return Poly(F_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  const FieldPtr& F = pick_field(*this, o);
  if (c_.empty() || o.c_.empty()) return Poly(F);
  std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r[i + j] = F->add(r[i + j], F->mul(c_[i], o.c_[j]));
    }
  }
  return Poly(F, std::move(r));
}

Poly Poly::scale(Elem a) const {
  if (!F_) return *this;
  std::vector<Elem> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = F_->mul(c_[i], a);
  return Poly(F_, std::move(r));
}

Poly Poly::shift(std::size_t k) const {
  if (c_.empty()) return *this;
  std::vector<Elem> r(k, 0);
  r.insert(r.end(), c_.begin(), c_.end());
  return Poly(F_, std::move(r));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scale(F_->inv(lc()));
}

Poly Poly::pow(std::uint64_t e) const {
  Poly result = constant(F_, 1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Elem Poly::eval(Elem x) const {
  Elem r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = F_->add(F_->mul(r, x), c_[i]);
  return r;
}

Poly Poly::compose(const Poly& g) const {
  Poly r(pick_field(*this, g));
  for (std::size_t i = c_.size(); i-- > 0;) r = r * g + constant(r.field(), c_[i]);
  return r;
}

Poly Poly::map_coeffs_frob(long long k) const {
  if (!F_ || F_->m() == 1) return *this;
  std::vector<Elem> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = F_->frob_k(c_[i], k);
  return Poly(F_, std::move(r));
}

Poly Poly::inflate(std::size_t k) const {
  if (c_.empty() || k == 1) return *this;
  if (k == 0) {
    Elem s = 0;
    for (Elem a : c_) s = F_->add(s, a);
    return constant(F_, s);
  }
  std::vector<Elem> r((c_.size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
  return Poly(F_, std::move(r));
}

Poly Poly::frob_pow(unsigned k) const {
  if (c_.empty() || k == 0) return *this;
  std::size_t e = 1;
  for (unsigned i = 0; i < k; ++i) e *= F_->p();
  return map_coeffs_frob(k).inflate(e);
}

Poly Poly::pth_root() const {
  if (c_.empty()) return *this;
  const std::uint32_t p = F_->p();
  std::vector<Elem> r((c_.size() - 1) / p + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (i % p != 0) throw DomainError("polynomial is not a p-th power");
    r[i / p] = F_->frob_inv(c_[i]);
  }
  return Poly(F_, std::move(r));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(F_);
  std::vector<Elem> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = F_->mul(F_->from_int(static_cast<long long>(i % F_->p())), c_[i]);
  return Poly(F_, std::move(r));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  const FieldPtr& F = pick_field(a, b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.deg() < b.deg()) {
    q = Poly(F);
    r = a;
    if (!r.F_) r.F_ = F;
    return;
  }
  std::vector<Elem> rem = a.c_;
  std::vector<Elem> quo(a.c_.size() - b.c_.size() + 1, 0);
  const Elem inv_lc = F->inv(b.lc());
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    Elem c = F->mul(rem[k + db], inv_lc);
    quo[k] = c;
    if (c == 0) continue;
    Elem nc = F->neg(c);
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] = F->add(rem[k + i], F->mul(nc, b.c_[i]));
  }
  rem.resize(db);
  q = Poly(F, std::move(quo));
  r = Poly(F, std::move(rem));
}

Poly Poly::operator/(const Poly& b) const {
  Poly q, r;
  divmod(*this, b, q, r);
  return q;
}

Poly Poly::operator%(const Poly& b) const {
  Poly q, r;
  divmod(*this, b, q, r);
  return r;
}

Poly Poly::exact_div(const Poly& b) const {
  Poly q, r;
  divmod(*this, b, q, r);
  if (!r.is_zero()) throw InvariantError("inexact polynomial division");
  return q;
}

bool Poly::divisible_by(const Poly& b) const { return (*this % b).is_zero(); }

std::string Poly::str(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string cs = F_->str(c_[i]);
    bool compound = cs.find('+') != std::string::npos;
    if (i == 0) {
      out += compound ? "(" + cs + ")" : cs;
      continue;
    }
    if (c_[i] != 1) out += (compound ? "(" + cs + ")" : cs) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (std::size_t i = a.coeffs().size(); i-- > 0;)
    if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
  return false;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly ext_gcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
  const FieldPtr& F = pick_field(a, b);
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(F, 1), s1(F), t0(F), t1 = Poly::constant(F, 1);
  while (!r1.is_zero()) {
    Poly q, r;
    Poly::divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = Poly(F);
    t = Poly(F);
    return r0;
  }
  Elem inv = F->inv(r0.lc());
  s = s0.scale(inv);
  t = t0.scale(inv);
  return r0.scale(inv);
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& a, std::uint64_t e, const Poly& m) {
  Poly result = Poly::constant(m.field(), 1) % m, base = a % m;
  while (e) {
    if (e & 1) result = mulmod(result, base, m);
    e >>= 1;
    if (e) base = mulmod(base, base, m);
  }
  return result;
}

int multiplicity(const Poly& f, const Poly& g) {
  if (f.is_zero()) throw DomainError("multiplicity in the zero polynomial");
  if (g.deg() < 1) throw DomainError("multiplicity of a constant");
  int k = 0;
  Poly x = f;
  while (true) {
    Poly q, r;
    Poly::divmod(x, g, q, r);
    if (!r.is_zero()) return k;
    x = std::move(q);
    ++k;
  }
}

namespace {

std::vector<std::pair<Poly, int>> squarefree_parts(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  const int p = static_cast<int>(f.field()->p());
  std::function<void(const Poly&, int)> rec = [&](const Poly& g, int mult) {
    if (g.deg() < 1) return;
    Poly d = g.derivative();
    if (d.is_zero()) {
      rec(g.pth_root(), mult * p);
      return;
    }
    Poly c = gcd(g, d);
    Poly w = g.exact_div(c);
    int i = 1;
    while (w.deg() > 0) {
      Poly y = gcd(w, c);
      Poly fac = w.exact_div(y);
      if (fac.deg() > 0) out.emplace_back(fac.monic(), i * mult);
      w = y;
      c = c.exact_div(y);
      ++i;
    }
    if (c.deg() > 0) rec(c.monic().pth_root(), mult * p);
  };
  rec(f.monic(), 1);
  return out;
}

Poly random_poly(const FieldPtr& F, int deg_below, std::mt19937_64& rng) {
  std::vector<Elem> c(static_cast<std::size_t>(deg_below));
  for (auto& x : c) x = static_cast<Elem>(rng() % F->size());
  return Poly(F, std::move(c));
}

// Splits a squarefree monic g whose irreducible factors all have degree d.
void equal_degree_split(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.deg() == d) {
    out.push_back(g.monic());
    return;
  }
  const FieldPtr& F = g.field();
  const std::uint64_t q = F->size();
  while (true) {
    Poly a = random_poly(F, g.deg(), rng);
    if (a.deg() < 1) continue;
    Poly b(F);
    if (F->p() == 2) {
      // Absolute trace from F_{q^d} down to F_2.
      unsigned k = 0;
      for (std::uint64_t x = q; x > 1; x >>= 1) ++k;
      Poly t = a % g;
      b = t;
      for (unsigned i = 1; i < k * static_cast<unsigned>(d); ++i) {
        t = mulmod(t, t, g);
        b = b + t;
      }
    } else {
      // a^((q^d - 1)/2) = (prod_{i<d} a^{q^i})^((q-1)/2).
      Poly t = a % g, r = t;
      for (int i = 1; i < d; ++i) {
        t = powmod(t, q, g);
        r = mulmod(r, t, g);
      }
      b = powmod(r, (q - 1) / 2, g) - Poly::constant(F, 1);
    }
    Poly h = gcd(g, b);
    if (h.deg() > 0 && h.deg() < g.deg()) {
      equal_degree_split(h, d, rng, out);
      equal_degree_split(g.exact_div(h), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& f) {
  std::vector<std::pair<Poly, int>> result;
  if (f.deg() < 1) return result;
  const FieldPtr& F = f.field();
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(f.deg()));
  for (auto& [h, e] : squarefree_parts(f)) {
    Poly rest = h;
    Poly zz = Poly::z(F);
    Poly xq = zz;
    for (int i = 1; 2 * i <= rest.deg(); ++i) {
      xq = powmod(xq, F->size(), rest);
      Poly g = gcd(rest, xq - zz);
      if (g.deg() > 0) {
        std::vector<Poly> parts;
        equal_degree_split(g, i, rng, parts);
        for (auto& pp : parts) result.emplace_back(pp, e);
        rest = rest.exact_div(g);
        xq = xq % rest;
      }
    }
    if (rest.deg() > 0) result.emplace_back(rest.monic(), e);
  }
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  // Merge repeated factors (possible when squarefree parts share factors across p-th roots).
  std::vector<std::pair<Poly, int>> merged;
  for (auto& pr : result) {
    if (!merged.empty() && merged.back().first == pr.first) merged.back().second += pr.second;
    else merged.push_back(pr);
  }
  return merged;
}

bool is_irreducible(const Poly& f) {
  if (f.deg() < 1) return false;
  auto fs = factor(f);
  return fs.size() == 1 && fs[0].second == 1;
}

std::vector<Poly> irreducibles_of_degree(const FieldPtr& F, int d, std::size_t limit) {
  std::vector<Poly> out;
  const std::uint64_t q = F->size();
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) {
    count *= q;
    if (count > (1ULL << 40)) break;
  }
  for (std::uint64_t code = 0; code < count && out.size() < limit; ++code) {
    std::vector<Elem> c(static_cast<std::size_t>(d) + 1, 0);
    std::uint64_t x = code;
    for (int i = 0; i < d; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<Elem>(x % q);
      x /= q;
    }
    c[static_cast<std::size_t>(d)] = 1;
    Poly g(F, std::move(c));
    if (is_irreducible(g)) out.push_back(g);
  }
  return out;
}

}  // namespace frobq
