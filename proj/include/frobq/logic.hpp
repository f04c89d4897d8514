#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "frobq/additive.hpp"
#include "frobq/bounds.hpp"
#include "frobq/normalize.hpp"

namespace frobq {

// A term of L_p(z) in normal form: an additive polynomial in the variables
// plus a constant of F_p[z]. Every term built from variables, 0, 1, +, the
// Frobenius and multiplication by z has exactly one such form.
class LinTerm {
 public:
  LinTerm() = default;
  explicit LinTerm(FieldPtr F) : poly_(F), c_(F) {}
  LinTerm(AdditivePoly poly, Poly c) : poly_(std::move(poly)), c_(std::move(c)) {}
  static LinTerm var(const FieldPtr& F, const Var& v) { return LinTerm(AdditivePoly::variable(F, v), Poly(F)); }
  static LinTerm constant(const Poly& c) { return LinTerm(AdditivePoly(c.field()), c); }

  const FieldPtr& field() const { return poly_.field(); }
  const AdditivePoly& poly() const { return poly_; }
  const Poly& constant_part() const { return c_; }
  bool is_constant() const { return poly_.is_zero(); }
  bool is_zero() const { return poly_.is_zero() && c_.is_zero(); }
  std::vector<Var> vars() const { return poly_.vars(); }

  LinTerm operator+(const LinTerm& o) const { return LinTerm(poly_ + o.poly_, c_ + o.c_); }
  LinTerm operator-(const LinTerm& o) const { return LinTerm(poly_ - o.poly_, c_ - o.c_); }
  LinTerm operator-() const { return LinTerm(-poly_, -c_); }
  LinTerm& operator+=(const LinTerm& o) { return *this = *this + o; }
  // this^{p^k}.
  LinTerm frob(unsigned k) const { return LinTerm(poly_.frob_twist(k), c_.frob_pow(k)); }
  LinTerm scale(const Poly& c) const { return LinTerm(poly_.scale(c), c_ * c); }
  // Replaces variables by terms.
  LinTerm substitute(const std::map<std::string, LinTerm>& sub) const;
  // Split by a predicate on variables: (selected part, rest including the constant).
  std::pair<LinTerm, LinTerm> split(const std::function<bool(const Var&)>& pick) const;

  RatFunc eval(const Assignment& a) const { return poly_.eval(a) + RatFunc(c_); }
  bool operator==(const LinTerm& o) const { return poly_ == o.poly_ && c_ == o.c_; }
  bool operator!=(const LinTerm& o) const { return !(*this == o); }

 private:
  AdditivePoly poly_;
  Poly c_;
};

enum class FKind { True, False, Eq, InF, Pred, Not, And, Or, Implies, Exists, Forall };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// An L_p formula with named parameters; P_sigma(args) holds iff all args lie
// in F and sigma(args) is true in F.
struct Sigma {
  std::vector<std::string> params;
  FormulaPtr body;
};
using SigmaPtr = std::shared_ptr<const Sigma>;

struct Formula {
  FKind kind = FKind::True;
  LinTerm lhs, rhs;                // Eq; InF uses lhs
  SigmaPtr sigma;                  // Pred
  std::vector<LinTerm> args;       // Pred
  std::vector<FormulaPtr> kids;    // Not: 1, And/Or: n, Implies: 2, quantifiers: 1
  Var var;                         // quantifiers
};

FormulaPtr f_true();
FormulaPtr f_false();
FormulaPtr f_eq(const LinTerm& a, const LinTerm& b);
FormulaPtr f_neq(const LinTerm& a, const LinTerm& b);
FormulaPtr f_inF(const LinTerm& t);
FormulaPtr f_pred(SigmaPtr s, std::vector<LinTerm> args);
FormulaPtr f_not(FormulaPtr a);
FormulaPtr f_and(std::vector<FormulaPtr> kids);
FormulaPtr f_or(std::vector<FormulaPtr> kids);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr f_exists(const std::vector<Var>& vars, FormulaPtr body);
FormulaPtr f_forall(const std::vector<Var>& vars, FormulaPtr body);

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);
// Free variables, ordered by var_name_less.
std::vector<Var> free_vars(const FormulaPtr& f);
// All variable names, bound or free, including inside predicates.
std::set<std::string> all_var_names(const FormulaPtr& f);
// Capture-avoiding substitution of free variables.
FormulaPtr substitute(const FormulaPtr& f, const std::map<std::string, LinTerm>& sub);
bool is_quantifier_free(const FormulaPtr& f);
std::size_t formula_size(const FormulaPtr& f);

struct ParseOptions {
  FieldPtr F;
  // Sort of unannotated free variables.
  Sort defaultSort = Sort::R;
  // L_p mode: every variable is F-sorted and z is rejected.
  bool lp = false;
};

// Grammar: terms use + - * ^ frob(..) z poly{..} integers and variables
// (optionally annotated x:R or a:F); atoms are t = t, t != t, inF(t),
// P{a1, a2 | sigma}(t1, t2), true, false; connectives not, and, or, ->;
// quantifiers "exists x:R, a:F body" and "forall ...".
FormulaPtr parse_formula(const std::string& text, const ParseOptions& opt);
LinTerm parse_term(const std::string& text, const ParseOptions& opt);
std::string to_string(const FormulaPtr& f);
std::string to_string(const LinTerm& t, const std::set<std::string>& bound = {});

// ---------------------------------------------------------------- evaluation

struct EvalCaps {
  std::uint64_t maxBranch = 1ull << 26;  // assignments tried by one quantifier block
};

using FAssignment = std::map<std::string, Elem>;

// Exhaustive evaluation over finite F with linear pruning of quantifier blocks.
bool eval_sigma_over_F(const FormulaPtr& sigma, const FAssignment& a, const FieldPtr& F, const EvalCaps& caps = {});
bool eval_sigma_over_F(const Sigma& sigma, const std::vector<Elem>& args, const FieldPtr& F,
                       const EvalCaps& caps = {});

// Bounded semantics: R-sorted quantifiers range over {x in R : |x| <= cap} u {0},
// F-sorted ones over F. Exact on quantifier-free formulas.
bool eval_bounded_over_R(const FormulaPtr& phi, const Assignment& a, unsigned heightCap, const Localization& L,
                         const EvalCaps& caps = {});
// {x in R : |x| <= cap} u {0} in canonical order.
std::vector<RatFunc> bounded_elements(const Localization& L, unsigned cap);

// ---------------------------------------------------------------- transformations

// Smallest monic irreducible of F_p[z] outside S that stays irreducible over F.
Poly auxiliary_irreducible(const Localization& L);

// Negation normal form without implications, negated inF atoms, or inF
// applied to non-variables.
FormulaPtr eliminate_negations(const FormulaPtr& phi, const Localization& L);

struct PrenexForm {
  std::vector<std::pair<bool, Var>> prefix;  // true = exists
  FormulaPtr matrix;
  FormulaPtr to_formula() const;
};
// Prenex form of a formula in negation normal form; bound variables are
// renamed apart from each other and from the free variables.
PrenexForm prenex(const FormulaPtr& phi, const Localization& L);

struct Inequality {
  AdditivePoly e;  // over x
  AdditivePoly G;  // over alpha
  LinTerm v;       // free variables only
};

// exists x, alpha [f(x) + H(alpha) = u and_j e_j(x) + G_j(alpha) != v_j and P_sigma(alpha)]
struct EnfDisjunct {
  std::vector<Var> x;
  std::vector<Var> alpha;
  AdditivePoly f;
  AdditivePoly H;
  LinTerm u;
  std::vector<Inequality> ineqs;
  SigmaPtr sigma;               // params name F-variables (alpha or free)
  FormulaPtr to_formula() const;
};

struct ExistentialNormalForm {
  std::vector<EnfDisjunct> disjuncts;
  FormulaPtr to_formula() const;
};

// Throws DomainError when phi is not existential.
ExistentialNormalForm to_existential_normal_form(const FormulaPtr& phi, const Localization& L);

// Defines {x in R : |x| <= k} u {0}: exists alpha_0..alpha_k in F with
// b x = sum alpha_i z^i for some product b of elements of S, deg b <= k.
FormulaPtr bounded_height_formula(const Var& x, unsigned k, const Localization& L);

// Data for logic1: R = Im(f) + Im(h) + Im_F(G/e^N).
struct Logic1Instance {
  AdditivePoly f, h, G, H;
  Poly e;
  unsigned N = 0;
};

// h = completion of f, G = sum gamma_i z^i, N = E_ord(f + h), e = prod S.
Logic1Instance make_logic1_instance(const AdditivePoly& f, const AdditivePoly& H, const Localization& L);

struct Logic1Result {
  FormulaPtr phi1;        // free variables: those of u
  FormulaPtr antecedent;  // e^N u = e^N f(x) + e^N h(y) + G(gamma)
  FormulaPtr pi1Matrix;   // e^N f(w) + e^N h(y) + G(gamma) = e^N H(alpha)
  std::vector<Var> x, y, gamma, w, alpha;
};

Logic1Result logic1_transform(const Logic1Instance& inst, const LinTerm& u);

// Values use the names in Logic1Result. Forward: from u = f(x~) + H(alpha~)
// and an antecedent witness build a pi1 witness. Backward: the converse.
Assignment logic1_forward(const Logic1Result& r, const Assignment& decomposition, const Assignment& antecedent);
Assignment logic1_backward(const Logic1Result& r, const Assignment& antecedent, const Assignment& pi1Witness);

struct Logic2Result {
  FormulaPtr phi2;
  FormulaPtr membership;  // u in Im(f) + Im_F(H)
  FormulaPtr antecedent;  // f(w) + H(beta) = u
  FormulaPtr pi2Matrix;
  FormulaPtr psiMatrix;   // the original matrix over x, alpha
  std::vector<Var> w, beta, t, gamma;
};

Logic2Result logic2_transform(const EnfDisjunct& d, const Localization& L);
// t = x - w, gamma = alpha - beta.
Assignment logic2_forward(const Logic2Result& r, const EnfDisjunct& d, const Assignment& psiWitness,
                          const Assignment& wbeta);
// x = w + t, alpha = beta + gamma.
Assignment logic2_backward(const Logic2Result& r, const EnfDisjunct& d, const Assignment& wbeta,
                           const Assignment& pi2Witness);

// exists gamma [fEqs = 0 and lhs_i = rhs_i (R-equations) and lhs_j != rhs_j
// and fPart], where every lhs is a term over F-variables.
struct BoundedExistential {
  std::vector<Var> gamma;
  std::vector<LinTerm> fEqs;
  std::vector<std::pair<LinTerm, LinTerm>> rEqs;
  std::vector<std::pair<LinTerm, LinTerm>> ineqs;
  FormulaPtr fPart;  // L_p-level formula over F-variables, may contain predicates
  FormulaPtr to_formula() const;
};

struct UniversalizeInfo {
  Poly Q;
  unsigned M = 0;
  unsigned N = 0;
};

FormulaPtr universalize_bounded(const BoundedExistential& pi, const Localization& L,
                                UniversalizeInfo* info = nullptr);

// Existential formula -> equivalent universal formula.
FormulaPtr existential_to_universal(const FormulaPtr& phi, const Localization& L);
FormulaPtr model_complete_transform(const FormulaPtr& phi, const Localization& L);

// For a sentence phi returns sigma (an L_p sentence) true in F iff phi holds in R.
SigmaPtr sentence_to_sigma(const FormulaPtr& phi, const Localization& L);

}  // namespace frobq
