#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "frobq/ratfun.hpp"

namespace frobq {

enum class Sort { R, F };

struct Var {
  std::string name;
  Sort sort = Sort::R;
  bool operator==(const Var& o) const { return name == o.name && sort == o.sort; }
  bool operator!=(const Var& o) const { return !(*this == o); }
};

// Orders names by their alphabetic prefix and then numerically (x2 < x10).
bool var_name_less(const std::string& a, const std::string& b);

// Values for variables. F-sorted variables take constant values.
using Assignment = std::map<std::string, RatFunc>;

// sum_i sum_k c_{i,k} x_i^{p^k} with c_{i,k} in F_p[z]. Variables whose
// coefficients are all zero are dropped, so vars() lists exactly the
// variables that occur.
class AdditivePoly {
 public:
  struct Entry {
    Var var;
    std::vector<Poly> c;  // c[k] multiplies var^{p^k}; trimmed, nonempty
  };

  AdditivePoly() = default;
  explicit AdditivePoly(FieldPtr F) : F_(std::move(F)) {}
  // coeff * v^{p^k}.
  static AdditivePoly term(const FieldPtr& F, const Var& v, const Poly& coeff, unsigned k = 0);
  static AdditivePoly variable(const FieldPtr& F, const Var& v) { return term(F, v, Poly::constant(F, 1)); }
  // Parses "poly{z}*x1^2 + x1 + poly{1+z}*a1"; names starting with 'a' are F-sorted.
  static AdditivePoly parse(const std::string& text, const FieldPtr& F);

  const FieldPtr& field() const { return F_; }
  const std::vector<Entry>& entries() const { return e_; }
  std::vector<Var> vars() const;
  bool is_zero() const { return e_.empty(); }
  bool has_var(const std::string& name) const { return find(name) != nullptr; }
  // Coefficient list of a variable (empty when it does not occur).
  const std::vector<Poly>& coeffs(const std::string& name) const;
  // s(i) for a variable that occurs.
  unsigned s_of(const std::string& name) const;
  // Leading coefficient b_i.
  const Poly& leading(const std::string& name) const;
  // max s(i), 0 for the zero polynomial.
  unsigned s() const;
  // p^{s()}.
  std::uint64_t degree() const;

  void add_term(const Var& v, unsigned k, const Poly& coeff);
  AdditivePoly operator+(const AdditivePoly& o) const;
  AdditivePoly operator-(const AdditivePoly& o) const;
  AdditivePoly operator-() const;
  AdditivePoly& operator+=(const AdditivePoly& o) { return *this = *this + o; }
  // Multiplies every coefficient by c in F_p[z].
  AdditivePoly scale(const Poly& c) const;
  // this^{p^k}: coefficients raised to p^k, exponents shifted by k.
  AdditivePoly frob_twist(unsigned k) const;
  // Replaces variables by additive polynomials; unmapped variables stay.
  AdditivePoly substitute(const std::map<std::string, AdditivePoly>& sub) const;
  // Keeps the variables of one sort.
  AdditivePoly restrict_sort(Sort s) const;
  // Renames variables; unmapped names stay.
  AdditivePoly rename(const std::map<std::string, std::string>& names) const;

  // Throws DomainError on a missing variable or a non-constant F value.
  RatFunc eval(const Assignment& a) const;

  // Equality as polynomials (independent of entry order).
  bool operator==(const AdditivePoly& o) const;
  bool operator!=(const AdditivePoly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  const Entry* find(const std::string& name) const;
  FieldPtr F_;
  std::vector<Entry> e_;
};

// (1/e^N) G(alpha) with G over F-variables.
struct BoundedTerm {
  Poly e;
  unsigned N = 0;
  AdditivePoly G;
  RatFunc eval(const Assignment& a) const;
};

struct Classification {
  bool normalized = false;
  bool p_basic = false;
  bool strongly_normalized = false;
  bool all_same_s = false;
  unsigned s = 0;
  std::size_t n = 0;
};

// Flags for the R-sorted part of f.
Classification classify(const AdditivePoly& f);

// Surjective map R^m x F^mu -> R^n given by additive polynomials. Every
// instance carries a witness procedure that returns preimages.
class ProperTransformation {
 public:
  using Witness = std::function<Assignment(const std::vector<RatFunc>& target)>;

  // A pipeline step: targets[i] := components[i](domain). The witness is mandatory.
  static ProperTransformation step(std::vector<Var> targets, std::vector<AdditivePoly> components,
                                   std::vector<Var> domain, Witness witness);
  static ProperTransformation identity(const FieldPtr& F, const std::vector<Var>& vars);

  const std::vector<Var>& targets() const { return targets_; }
  const std::vector<Var>& domain() const { return domain_; }
  const std::vector<AdditivePoly>& components() const { return comps_; }
  // Substitution map target name -> component.
  std::map<std::string, AdditivePoly> as_substitution() const;

  std::vector<RatFunc> apply(const Assignment& point) const;
  // Returns a preimage and checks apply(preimage) == target exactly;
  // throws InvariantError when the witness fails.
  Assignment preimage(const std::vector<RatFunc>& target) const;

  // this o inner: inner's targets must be among this transformation's domain.
  ProperTransformation after(const ProperTransformation& inner) const;

 private:
  ProperTransformation() = default;
  std::vector<Var> targets_;
  std::vector<AdditivePoly> comps_;
  std::vector<Var> domain_;
  Witness witness_;
};

}  // namespace frobq
