#include "frobq/gf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "frobq/errors.hpp"

namespace frobq {

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Conway polynomials, ascending coefficients.
const std::map<std::pair<std::uint32_t, std::uint32_t>, Coeffs>& conway_table() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, Coeffs> t = {
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
      {{5, 1}, {3, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}},
      {{7, 1}, {4, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
  };
  return t;
}

// Remainder of a by b over F_p; b monic.
Coeffs mod_fp(Coeffs a, const Coeffs& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint32_t c = a.back();
    std::size_t shift = a.size() - 1 - db;
    if (c != 0)
      for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
    a.pop_back();
  }
  return a;
}

bool irreducible_fp(const Coeffs& f, std::uint32_t p) {
  const std::size_t d = f.size() - 1;
  if (d <= 1) return d == 1;
  // Trial division by every monic polynomial of degree 1..d/2.
  for (std::size_t k = 1; k <= d / 2; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Coeffs g(k + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < k; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[k] = 1;
      Coeffs r = mod_fp(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; })) return false;
    }
  }
  return true;
}

struct Lexer {
  const std::string& s;
  std::size_t i = 0;
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool at_end() {
    ws();
    return i >= s.size();
  }
  long long number() {
    ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("expected integer", i);
    long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > (1LL << 40)) throw ParseError("integer too large", i);
      ++i;
    }
    return v;
  }
};

// Parses a sum of terms c*t^k with integer c into ascending coefficients mod p.
Coeffs parse_tpoly(const std::string& s, std::uint32_t p) {
  Lexer lx{s};
  Coeffs out;
  auto add = [&](std::size_t k, long long c) {
    if (out.size() <= k) out.resize(k + 1, 0);
    long long v = (static_cast<long long>(out[k]) + c) % static_cast<long long>(p);
    if (v < 0) v += p;
    out[k] = static_cast<std::uint32_t>(v);
  };
  lx.eat('(');
  bool first = true;
  while (true) {
    int sign = 1;
    if (lx.eat('-')) sign = -1;
    else if (!first && !lx.eat('+')) break;
    else if (first) lx.eat('+');
    first = false;
    lx.ws();
    long long c = 1;
    bool have_c = false;
    if (lx.i < s.size() && std::isdigit(static_cast<unsigned char>(s[lx.i]))) {
      c = lx.number();
      have_c = true;
      if (!lx.eat('*')) {
        add(0, sign * (c % p));
        continue;
      }
    }
    if (!lx.eat('t')) {
      if (have_c) throw ParseError("expected 't' after '*'", lx.i);
      throw ParseError("expected term", lx.i);
    }
    std::size_t k = 1;
    if (lx.eat('^')) k = static_cast<std::size_t>(lx.number());
    add(k, sign * (c % p));
  }
  lx.eat(')');
  if (!lx.at_end()) throw ParseError("unexpected character in field literal", lx.i);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t binom_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  while (n > 0 || k > 0) {
    std::uint64_t ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    // C(ni, ki) mod p for digits below p, by direct multiplicative formula.
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t j = 0; j < ki; ++j) {
      num = num * ((ni - j) % p) % p;
      den = den * ((j + 1) % p) % p;
    }
    // den is invertible since ki < p.
    std::uint64_t inv = 1, b = den, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * b % p;
      b = b * b % p;
      e >>= 1;
    }
    result = result * (num * inv % p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(result);
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m) {
  auto it = conway_table().find({p, m});
  if (it != conway_table().end()) return it->second;
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Coeffs g(m + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < m; ++i) {
      g[i] = c % p;
      c /= p;
    }
    g[m] = 1;
    if (irreducible_fp(g, p)) return g;
  }
  throw InvariantError("no irreducible polynomial found");
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw DomainError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxSize) throw ResourceError("field size exceeds supported maximum 65536");
  }
  if (modulus.empty()) modulus = default_modulus(p, m);
  for (auto& c : modulus) c %= p;
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() != m + 1 || modulus.back() != 1)
    throw DomainError("modulus must be monic of degree " + std::to_string(m));
  if (!irreducible_fp(modulus, p)) throw DomainError("modulus is reducible over F_" + std::to_string(p));
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->m_ = m;
  f->q_ = static_cast<std::uint32_t>(q);
  f->modulus_ = std::move(modulus);
  f->build();
  return f;
}

FieldPtr Field::parse(const std::string& spec) {
  std::uint32_t p = 0, m = 1;
  std::string mod;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in field spec", 0);
    std::string k = item.substr(0, eq), v = item.substr(eq + 1);
    k.erase(std::remove_if(k.begin(), k.end(), ::isspace), k.end());
    try {
      if (k == "p") p = static_cast<std::uint32_t>(std::stoul(v));
      else if (k == "m") m = static_cast<std::uint32_t>(std::stoul(v));
      else if (k == "mod") mod = v;
      else throw ParseError("unknown field spec key '" + k + "'", 0);
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const ParseError*>(&e)) throw;
      throw ParseError("bad number in field spec", 0);
    }
  }
  if (p == 0) throw ParseError("field spec needs p", 0);
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  std::vector<std::uint32_t> modulus;
  if (!mod.empty()) modulus = parse_tpoly(mod, p);
  return make(p, m, modulus);
}

void Field::build() {
  const std::uint32_t q = q_;
  auto to_c = [&](Elem a) {
    Coeffs c(m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  };
  auto from_c = [&](const Coeffs& c) {
    Elem a = 0;
    for (std::size_t i = c.size(); i-- > 0;) a = a * p_ + c[i];
    return a;
  };
  auto raw_mul = [&](Elem a, Elem b) {
    Coeffs ca = to_c(a), cb = to_c(b), r(2 * m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i)
      for (std::uint32_t j = 0; j < m_; ++j) r[i + j] = (r[i + j] + ca[i] * cb[j]) % p_;
    r = mod_fp(r, modulus_, p_);
    r.resize(m_, 0);
    return from_c(r);
  };
  neg_.resize(q);
  for (Elem a = 0; a < q; ++a) {
    Coeffs c = to_c(a);
    for (auto& x : c) x = (p_ - x) % p_;
    neg_[a] = from_c(c);
  }
  if (p_ != 2 && q <= 1024) {
    add_.resize(static_cast<std::size_t>(q) * q);
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) add_[a * q + b] = add_slow(a, b);
  }
  // Find a primitive element and build exp/log tables.
  log_.assign(q, 0);
  exp_.assign(2 * (q - 1), 0);
  bool found = false;
  for (Elem g = 1; g < q && !found; ++g) {
    Elem x = 1;
    std::uint32_t order = 0;
    do {
      x = raw_mul(x, g);
      ++order;
    } while (x != 1 && order < q);
    if (order != q - 1) continue;
    x = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      exp_[i] = exp_[i + q - 1] = x;
      log_[x] = i;
      x = raw_mul(x, g);
    }
    found = true;
  }
  if (!found) throw InvariantError("no primitive element");
  frob_.resize(q);
  frob_inv_.resize(q);
  for (Elem a = 0; a < q; ++a) frob_[a] = pow(a, p_);
  for (Elem a = 0; a < q; ++a) frob_inv_[frob_[a]] = a;
}

Elem Field::add_slow(Elem a, Elem b) const {
  Elem r = 0, w = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((a % p_ + b % p_) % p_) * w;
    a /= p_;
    b /= p_;
    w *= p_;
  }
  return r;
}

Elem Field::gen() const {
  if (m_ == 1) return neg_[modulus_[0] % p_];
  return p_;
}

Elem Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DomainError("division by zero in " + spec_string());
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

Elem Field::frob_k(Elem a, long long k) const {
  long long kk = k % static_cast<long long>(m_);
  if (kk < 0) kk += m_;
  for (long long i = 0; i < kk; ++i) a = frob_[a];
  return a;
}

std::vector<std::uint32_t> Field::coords(Elem a) const {
  std::vector<std::uint32_t> c(m_, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Elem Field::from_coords(const std::vector<std::uint32_t>& c) const {
  if (c.size() != m_) throw DomainError("coordinate vector has wrong length");
  Elem a = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw DomainError("coordinate out of range");
    a = a * p_ + c[i];
  }
  return a;
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> v(q_);
  for (Elem a = 0; a < q_; ++a) v[a] = a;
  return v;
}

std::string Field::str(Elem a) const {
  if (m_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  auto c = coords(a);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]) + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Elem Field::parse_elem(const std::string& s) const {
  Coeffs c = parse_tpoly(s, p_);
  Elem r = 0, g = gen(), pw = 1;
  for (std::size_t k = 0; k < c.size(); ++k) {
    r = add(r, mul(from_int(c[k]), pw));
    pw = mul(pw, g);
  }
  return r;
}

std::string Field::spec_string() const {
  std::string mod;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    if (modulus_[i] == 0) continue;
    if (!mod.empty()) mod += "+";
    if (i == 0) {
      mod += std::to_string(modulus_[i]);
      continue;
    }
    if (modulus_[i] != 1) mod += std::to_string(modulus_[i]) + "*";
    mod += "t";
    if (i > 1) mod += "^" + std::to_string(i);
  }
  return "p=" + std::to_string(p_) + ",m=" + std::to_string(m_) + ",mod=" + mod;
}

}  // namespace frobq
