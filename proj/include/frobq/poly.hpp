#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frobq/gf.hpp"

namespace frobq {

// Univariate polynomial over a finite field, ascending coefficients, no
// trailing zeros. The zero polynomial has an empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr F) : F_(std::move(F)) {}
  Poly(FieldPtr F, std::vector<Elem> c);

  static Poly constant(const FieldPtr& F, Elem c);
  static Poly monomial(const FieldPtr& F, Elem c, std::size_t k);
  static Poly z(const FieldPtr& F) { return monomial(F, 1, 1); }
  // Embeds integer coefficients (taken mod p).
  static Poly from_ints(const FieldPtr& F, const std::vector<long long>& c);

  const FieldPtr& field() const { return F_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  Elem lc() const { return c_.empty() ? 0 : c_.back(); }
  Elem coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  // True when every coefficient lies in the prime field.
  bool over_prime_field() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  Poly scale(Elem a) const;
  Poly shift(std::size_t k) const;  // multiply by z^k
  Poly monic() const;
  Poly pow(std::uint64_t e) const;
  Elem eval(Elem x) const;
  Poly compose(const Poly& g) const;  // this(g(z))
  // Coefficient-wise Frobenius applied k times (k may be negative).
  Poly map_coeffs_frob(long long k) const;
  // z -> z^k.
  Poly inflate(std::size_t k) const;
  // this^(p^k), computed as coefficient Frobenius plus inflation.
  Poly frob_pow(unsigned k) const;
  // Exact p-th root; throws DomainError when this is not a p-th power.
  Poly pth_root() const;
  // Formal derivative d/dz.
  Poly derivative() const;

  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  Poly operator/(const Poly& b) const;  // quotient
  Poly operator%(const Poly& b) const;  // remainder
  // Exact division; throws InvariantError when b does not divide this.
  Poly exact_div(const Poly& b) const;
  bool divisible_by(const Poly& b) const;

  std::string str(char var = 'z') const;

 private:
  void trim();
  FieldPtr F_;
  std::vector<Elem> c_;
};

// Total order used for canonical sorting (degree, then coefficients from the top).
bool poly_less(const Poly& a, const Poly& b);

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
// Returns monic g = s*a + t*b.
Poly ext_gcd(const Poly& a, const Poly& b, Poly& s, Poly& t);
// (a * b) mod m.
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& a, std::uint64_t e, const Poly& m);

// Factorization into monic irreducibles with multiplicities, sorted by
// poly_less. The leading coefficient is dropped.
std::vector<std::pair<Poly, int>> factor(const Poly& f);
bool is_irreducible(const Poly& f);
// Largest k with g^k | f (g nonconstant, f nonzero).
int multiplicity(const Poly& f, const Poly& g);

// Monic irreducibles of the given degree over the field, in canonical order.
// Intended for small searches only.
std::vector<Poly> irreducibles_of_degree(const FieldPtr& F, int d, std::size_t limit = 64);

}  // namespace frobq
