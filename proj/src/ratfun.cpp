#include "frobq/ratfun.hpp"

#include <algorithm>
#include <cctype>

#include "frobq/errors.hpp"

namespace frobq {

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(FieldPtr F) : num_(F), den_(Poly::constant(F, 1)) {}

RatFunc::RatFunc(const Poly& num) : num_(num), den_(Poly::constant(num.field(), 1)) {}

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) { normalize(); }

void RatFunc::normalize() {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(den_.field(), 1);
    if (!num_.field()) num_ = Poly(den_.field());
    return;
  }
  if (!den_.is_one()) {
    if (den_.deg() > 0) {
      Poly g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
      }
    }
    Elem inv = den_.field()->inv(den_.lc());
    if (inv != 1) {
      num_ = num_.scale(inv);
      den_ = den_.scale(inv);
    }
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o.field() ? o : *this;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero()) return *this;
  if (o.is_zero()) return o;
  if (den_.is_one() && o.den_.is_one()) return RatFunc(num_ * o.num_);
  // Cross-cancel before multiplying to keep degrees small.
  Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  RatFunc r;
  r.num_ = num_.exact_div(g1) * o.num_.exact_div(g2);
  r.den_ = den_.exact_div(g2) * o.den_.exact_div(g1);
  r.normalize();
  return r;
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw DomainError("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  RatFunc r;
  r.num_ = num_.pow(static_cast<std::uint64_t>(e));
  r.den_ = den_.pow(static_cast<std::uint64_t>(e));
  return r;
}

RatFunc RatFunc::scale(Elem a) const {
  RatFunc r = *this;
  r.num_ = num_.scale(a);
  if (r.num_.is_zero()) r.den_ = Poly::constant(field(), 1);
  return r;
}

RatFunc RatFunc::frob_pow(unsigned k) const {
  RatFunc r;
  r.num_ = num_.frob_pow(k);
  r.den_ = den_.frob_pow(k);
  return r;
}

RatFunc RatFunc::map_coeffs_frob(long long k) const {
  RatFunc r;
  r.num_ = num_.map_coeffs_frob(k);
  r.den_ = den_.map_coeffs_frob(k);
  return r;
}

RatFunc RatFunc::compose(const RatFunc& g) const {
  auto horner = [&](const Poly& P) {
    RatFunc acc(field());
    for (std::size_t i = P.coeffs().size(); i-- > 0;) acc = acc * g + RatFunc::constant(field(), P.coeffs()[i]);
    return acc;
  };
  return horner(num_) / horner(den_);
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool ratfunc_less(const RatFunc& a, const RatFunc& b) {
  if (a.den() != b.den()) return poly_less(a.den(), b.den());
  return poly_less(a.num(), b.num());
}

// ---------------------------------------------------------------- places

Place Place::at(const Poly& Q) {
  if (Q.deg() < 1 || Q.lc() != 1) throw DomainError("place must be a monic nonconstant polynomial");
  if (!is_irreducible(Q)) throw DomainError("place polynomial " + Q.str() + " is reducible");
  return Place{false, Q};
}

long long Ord::value() const {
  if (inf_) throw DomainError("order of zero is infinite");
  return v_;
}

Ord ord_at(const RatFunc& x, const Place& v) {
  if (x.is_zero()) return Ord::infinite();
  if (v.infinity) return Ord::finite(static_cast<long long>(x.den().deg()) - x.num().deg());
  return Ord::finite(static_cast<long long>(multiplicity(x.num(), v.Q)) - multiplicity(x.den(), v.Q));
}

int height(const RatFunc& x) {
  if (x.is_zero()) throw DomainError("The height of 0 is not defined");
  return std::max(x.num().deg(), x.den().deg());
}

// ---------------------------------------------------------------- localization

bool remains_irreducible(const Poly& q, const FieldPtr& F) {
  if (!q.over_prime_field()) throw DomainError("S element must have coefficients in F_p");
  std::vector<long long> ints(q.coeffs().begin(), q.coeffs().end());
  FieldPtr Fp = Field::prime(F->p());
  Poly qp = Poly::from_ints(Fp, ints);
  if (!is_irreducible(qp)) throw DomainError(qp.str() + " is reducible over F_" + std::to_string(F->p()));
  return is_irreducible(Poly::from_ints(F, ints));
}

Localization::Localization(FieldPtr F, std::vector<Poly> S) : F_(std::move(F)) {
  for (auto& s : S) {
    std::vector<long long> ints(s.coeffs().begin(), s.coeffs().end());
    Poly lifted = Poly::from_ints(F_, ints);
    if (!s.over_prime_field()) throw DomainError("S element " + s.str() + " is not in F_p[z]");
    if (lifted.deg() < 1 || lifted.lc() != 1) throw DomainError("S element " + s.str() + " must be monic and nonconstant");
    if (!remains_irreducible(lifted, F_))
      throw DomainError("S element " + s.str() + " does not remain irreducible over " + F_->spec_string());
    for (auto& t : S_)
      if (t == lifted) throw DomainError("S elements must be pairwise distinct");
    S_.push_back(lifted);
  }
  std::sort(S_.begin(), S_.end(), poly_less);
}

Localization Localization::parse(FieldPtr F, const std::string& text) {
  std::string t = text;
  t.erase(std::remove(t.begin(), t.end(), '{'), t.end());
  t.erase(std::remove(t.begin(), t.end(), '}'), t.end());
  std::vector<Poly> S;
  std::string cur;
  auto flush = [&]() {
    if (cur.find_first_not_of(" \t") != std::string::npos) S.push_back(parse_poly(cur, F));
    cur.clear();
  };
  for (char ch : t) {
    if (ch == ',' || ch == ';') flush();
    else cur += ch;
  }
  flush();
  return Localization(std::move(F), std::move(S));
}

Poly Localization::e() const {
  Poly r = Poly::constant(F_, 1);
  for (auto& s : S_) r = r * s;
  return r;
}

Poly Localization::strip_S(const Poly& c) const {
  if (c.is_zero()) return c;
  Poly x = c;
  for (auto& s : S_) {
    while (true) {
      Poly q, r;
      Poly::divmod(x, s, q, r);
      if (!r.is_zero()) break;
      x = std::move(q);
    }
  }
  return x;
}

bool Localization::contains(const RatFunc& x) const {
  if (x.is_zero()) return true;
  if (x.field() && !x.field()->same_as(*F_)) return false;
  return strip_S(x.den()).deg() == 0;
}

void Localization::require(const RatFunc& x, const char* what) const {
  if (!contains(x)) throw DomainError(std::string(what) + " = " + x.str() + " is not in R = " + str());
}

std::string Localization::str() const {
  std::string out = "F[z";
  for (auto& s : S_) out += ", 1/(" + s.str() + ")";
  return out + "] over " + F_->spec_string();
}

bool in_ring(const RatFunc& x, const Localization& L) { return L.contains(x); }

// ---------------------------------------------------------------- partial fractions

PartialFractionForm partial_fractions(const RatFunc& x) {
  PartialFractionForm pf;
  const FieldPtr& F = x.field();
  Poly rem;
  Poly::divmod(x.num(), x.den(), pf.polyPart, rem);
  if (rem.is_zero()) return pf;
  for (auto& [Q, k] : factor(x.den())) {
    Poly P = Q.pow(static_cast<std::uint64_t>(k));
    Poly C = x.den().exact_div(P);
    Poly s, t;
    ext_gcd(C % P, P, s, t);
    Poly A = mulmod(rem, s, P);
    // Base-Q digits of A give the numerators over Q^{k-j}.
    for (int j = 0; j < k && !A.is_zero(); ++j) {
      Poly q, d;
      Poly::divmod(A, Q, q, d);
      if (!d.is_zero()) pf.terms.push_back({Q, k - j, d});
      A = std::move(q);
    }
  }
  std::sort(pf.terms.begin(), pf.terms.end(), [](const PartialFractionTerm& a, const PartialFractionTerm& b) {
    if (a.Q != b.Q) return poly_less(a.Q, b.Q);
    return a.j < b.j;
  });
  (void)F;
  return pf;
}

RatFunc recombine(const PartialFractionForm& pf, const FieldPtr& F) {
  RatFunc acc(F);
  acc = acc + RatFunc(pf.polyPart.field() ? pf.polyPart : Poly(F));
  for (auto& t : pf.terms) acc = acc + RatFunc(t.d, t.Q.pow(static_cast<std::uint64_t>(t.j)));
  return acc;
}

// ---------------------------------------------------------------- division facts

DivisionResult divide_with_remainder(const RatFunc& u, const Poly& c, const Localization& L) {
  L.require(u, "dividend");
  if (c.deg() < 1) throw DomainError("divisor must have positive degree");
  const FieldPtr& F = L.field();
  Poly c0 = L.strip_S(c);
  RatFunc cS = RatFunc(c.exact_div(c0));
  if (c0.deg() == 0) return {u / RatFunc(c), Poly(F)};
  // Bezout: s*c0 + t*b = 1 with b = den(u), coprime to c0.
  const Poly& a = u.num();
  const Poly& b = u.den();
  Poly s, t;
  Poly g = ext_gcd(c0, b, s, t);
  if (!g.is_one()) throw InvariantError("denominator not coprime to the S-free part of the divisor");
  Poly k, r;
  Poly::divmod(a * t, c0, k, r);
  RatFunc v0 = RatFunc(a * s, b) + RatFunc(k);
  RatFunc v = v0 / cS;
  return {v, r};
}

BaseExpansion expand_base_c(const RatFunc& u, const Poly& c, int N, const Localization& L) {
  if (c.is_zero() || c.deg() < 1) throw DomainError("base must be a nonconstant polynomial");
  if (N < 0) throw DomainError("expansion depth must be nonnegative");
  BaseExpansion out;
  RatFunc cur = u;
  for (int i = 0; i <= N; ++i) {
    auto dr = divide_with_remainder(cur, c, L);
    out.digits.push_back(dr.r);
    cur = dr.v;
  }
  out.v = cur;
  return out;
}

std::vector<Poly> q_power_decomposition(const Poly& g, unsigned s) {
  const FieldPtr& F = g.field();
  std::size_t q = 1;
  for (unsigned i = 0; i < s; ++i) q *= F->p();
  std::vector<std::vector<Elem>> parts(q);
  for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
    Elem a = g.coeffs()[k];
    if (a == 0) continue;
    auto& v = parts[k % q];
    if (v.size() <= k / q) v.resize(k / q + 1, 0);
    v[k / q] = F->frob_k(a, -static_cast<long long>(s));
  }
  std::vector<Poly> out;
  out.reserve(q);
  for (auto& v : parts) out.emplace_back(F, std::move(v));
  return out;
}

std::vector<RatFunc> q_power_decomposition(const RatFunc& g, unsigned s) {
  const FieldPtr& F = g.field();
  std::size_t q = 1;
  for (unsigned i = 0; i < s; ++i) q *= F->p();
  // g = a b^{q-1} / b^q.
  Poly N = g.num() * g.den().pow(q - 1);
  auto parts = q_power_decomposition(N, s);
  std::vector<RatFunc> out;
  out.reserve(q);
  for (auto& P : parts) out.emplace_back(P, g.den());
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& s, const FieldPtr& F) : s_(s), F_(F) {}

  RatFunc parse() {
    RatFunc r = expr();
    ws();
    if (i_ < s_.size()) throw ParseError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
    return r;
  }

 private:
  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  long long integer() {
    ws();
    std::size_t start = i_;
    long long v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_] - '0');
      if (v > (1LL << 40)) throw ParseError("integer too large", start);
      ++i_;
    }
    if (i_ == start) throw ParseError("expected integer", start);
    return v;
  }
  RatFunc expr() {
    RatFunc acc(F_);
    bool first = true;
    while (true) {
      int sign = 1;
      if (eat('-')) sign = -1;
      else if (eat('+')) sign = 1;
      else if (!first) break;
      RatFunc t = term();
      acc = sign > 0 ? acc + t : acc - t;
      first = false;
    }
    return acc;
  }
  RatFunc term() {
    RatFunc acc = power();
    while (true) {
      if (eat('*')) acc = acc * power();
      else if (eat('/')) {
        std::size_t at = i_;
        RatFunc d = power();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc / d;
      } else break;
    }
    return acc;
  }
  RatFunc power() {
    RatFunc b = atom();
    if (eat('^')) {
      bool neg = eat('-');
      long long e = integer();
      if (e > 100000) throw ParseError("exponent too large", i_);
      if (neg && b.is_zero()) throw ParseError("negative power of zero", i_);
      b = b.pow(neg ? -e : e);
    }
    return b;
  }
  RatFunc atom() {
    ws();
    if (i_ >= s_.size()) throw ParseError("unexpected end of expression", i_);
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      RatFunc r = expr();
      if (!eat(')')) throw ParseError("expected ')'", i_);
      return r;
    }
    if (c == '-') {
      ++i_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc::constant(F_, F_->from_int(integer() % F_->p()));
    if (c == 'z') {
      ++i_;
      return RatFunc::z(F_);
    }
    if (c == 't') {
      ++i_;
      return RatFunc::constant(F_, F_->gen());
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", i_);
  }

  const std::string& s_;
  const FieldPtr& F_;
  std::size_t i_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text, const FieldPtr& F) { return ExprParser(text, F).parse(); }

Poly parse_poly(const std::string& text, const FieldPtr& F) {
  RatFunc r = parse_ratfunc(text, F);
  if (!r.is_poly()) throw ParseError("expected a polynomial, got " + r.str(), 0);
  return r.num();
}

}  // namespace frobq
