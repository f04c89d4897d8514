#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace frobq {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Elements are encoded as integers: coordinates c_0..c_{m-1} in the power
// basis of the modulus root map to sum c_i p^i. Prime-field elements are
// therefore exactly the codes below p.
using Elem = std::uint32_t;

// Finite field F_{p^m} = F_p[t]/(modulus). Immutable once built.
class Field {
 public:
  // Largest supported field size.
  static constexpr std::uint32_t kMaxSize = 1u << 16;

  // Builds F_{p^m}. An empty modulus selects the default table entry
  // (Conway polynomial where tabulated, else the least irreducible).
  // modulus holds ascending coefficients and must be monic of degree m.
  static FieldPtr make(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus = {});
  static FieldPtr prime(std::uint32_t p) { return make(p, 1); }
  // Parses "p=2,m=2,mod=t^2+t+1"; m and mod are optional.
  static FieldPtr parse(const std::string& spec);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t size() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string spec_string() const;
  bool same_as(const Field& o) const { return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  // Root t of the modulus.
  Elem gen() const;
  Elem from_int(long long v) const;
  bool in_prime_field(Elem a) const { return a < p_; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (!add_.empty()) return add_[a * q_ + b];
    return add_slow(a, b);
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frob(Elem a) const { return frob_[a]; }
  Elem frob_inv(Elem a) const { return frob_inv_[a]; }
  // Applies the Frobenius k times; negative k applies the inverse.
  Elem frob_k(Elem a, long long k) const;

  std::vector<std::uint32_t> coords(Elem a) const;
  Elem from_coords(const std::vector<std::uint32_t>& c) const;

  // Elements 0, 1, ..., q-1 in code order.
  std::vector<Elem> elements() const;

  // Integers for prime fields, t-polynomials such as "t+1" otherwise.
  std::string str(Elem a) const;
  Elem parse_elem(const std::string& s) const;

 private:
  Field() = default;
  Elem add_slow(Elem a, Elem b) const;
  void build();

  std::uint32_t p_ = 2, m_ = 1, q_ = 2;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;           // length 2(q-1)
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<Elem> neg_, frob_, frob_inv_;
  std::vector<Elem> add_;  // q*q table for small odd-characteristic fields
};

// Binomial coefficient C(n, k) mod p via Lucas's theorem.
std::uint32_t binom_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

bool is_prime(std::uint64_t n);

// The default modulus used by Field::make for (p, m).
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m);

}  // namespace frobq
