#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobq/poly.hpp"

namespace frobq {

// Element of F(z) in canonical form: gcd(num, den) = 1, den monic; 0 is 0/1.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(FieldPtr F);
  RatFunc(const Poly& num);  // NOLINT: polynomials embed implicitly
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc constant(const FieldPtr& F, Elem c) { return RatFunc(Poly::constant(F, c)); }
  static RatFunc z(const FieldPtr& F) { return RatFunc(Poly::z(F)); }

  const FieldPtr& field() const { return num_.field() ? num_.field() : den_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc inv() const;
  RatFunc pow(long long e) const;
  RatFunc scale(Elem a) const;
  // this^(p^k).
  RatFunc frob_pow(unsigned k) const;
  // Coefficient-wise Frobenius applied k times to numerator and denominator.
  RatFunc map_coeffs_frob(long long k) const;
  // Substitutes z by g.
  RatFunc compose(const RatFunc& g) const;

  std::string str() const;

 private:
  void normalize();
  Poly num_, den_;
};

bool ratfunc_less(const RatFunc& a, const RatFunc& b);

// Place of F(z): a monic irreducible Q of F[z], or the place at infinity.
struct Place {
  bool infinity = false;
  Poly Q;

  static Place at(const Poly& Q);
  static Place inf() { return Place{true, Poly()}; }
  std::string str() const { return infinity ? "inf" : Q.str(); }
};

// Order value; the order of 0 is the distinguished infinite marker.
class Ord {
 public:
  static Ord infinite() { return Ord(true, 0); }
  static Ord finite(long long v) { return Ord(false, v); }
  bool is_infinite() const { return inf_; }
  // Throws DomainError on the infinite marker.
  long long value() const;
  bool operator==(const Ord& o) const { return inf_ == o.inf_ && (inf_ || v_ == o.v_); }
  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

 private:
  Ord(bool inf, long long v) : inf_(inf), v_(v) {}
  bool inf_;
  long long v_;
};

Ord ord_at(const RatFunc& x, const Place& v);
// max(deg num, deg den); throws DomainError for 0.
int height(const RatFunc& x);

// R = F[z, S^-1]; S holds monic irreducibles of F_p[z] that remain irreducible over F.
class Localization {
 public:
  Localization(FieldPtr F, std::vector<Poly> S);
  static Localization parse(FieldPtr F, const std::string& text);

  const FieldPtr& field() const { return F_; }
  const std::vector<Poly>& S() const { return S_; }
  // Product of the elements of S.
  Poly e() const;
  bool contains(const RatFunc& x) const;
  // Throws DomainError when x lies outside R.
  void require(const RatFunc& x, const char* what) const;
  // Removes every S-factor from c.
  Poly strip_S(const Poly& c) const;
  std::string str() const;

 private:
  FieldPtr F_;
  std::vector<Poly> S_;
};

bool in_ring(const RatFunc& x, const Localization& L);

// True iff q (irreducible over F_p) stays irreducible over F.
bool remains_irreducible(const Poly& q_over_fp, const FieldPtr& F);

struct PartialFractionTerm {
  Poly Q;
  int j;
  Poly d;
};

struct PartialFractionForm {
  Poly polyPart;
  std::vector<PartialFractionTerm> terms;  // sorted by (Q, j)
};

PartialFractionForm partial_fractions(const RatFunc& x);
RatFunc recombine(const PartialFractionForm& pf, const FieldPtr& F);

struct DivisionResult {
  RatFunc v;
  Poly r;
};

// u = v*c + r with v in R and deg r < deg c.
DivisionResult divide_with_remainder(const RatFunc& u, const Poly& c, const Localization& L);

struct BaseExpansion {
  std::vector<Poly> digits;  // r_0..r_N
  RatFunc v;
};

// u = r_0 + r_1 c + ... + r_N c^N + v c^{N+1}.
BaseExpansion expand_base_c(const RatFunc& u, const Poly& c, int N, const Localization& L);

// g = sum_{i<q} g_i^q z^i with q = p^s.
std::vector<RatFunc> q_power_decomposition(const RatFunc& g, unsigned s);
std::vector<Poly> q_power_decomposition(const Poly& g, unsigned s);

// Parses expressions in z and t built from integers, + - * / ^ and parentheses.
RatFunc parse_ratfunc(const std::string& text, const FieldPtr& F);
Poly parse_poly(const std::string& text, const FieldPtr& F);

}  // namespace frobq
