#include <algorithm>

#include "frobq/errors.hpp"
#include "frobq/independence.hpp"
#include "frobq/logic.hpp"

namespace frobq {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

Poly one(const FieldPtr& F) { return Poly::constant(F, 1); }

NameSupply supply_for(const FormulaPtr& f) {
  NameSupply names;
  for (auto& n : all_var_names(f)) names.reserve(n);
  return names;
}

LinTerm lin(const AdditivePoly& a) { return LinTerm(a, Poly(a.field())); }

LinTerm fvar(const FieldPtr& F, const std::string& name) { return LinTerm::var(F, Var{name, Sort::F}); }

int max_coeff_deg(const AdditivePoly& a) {
  int d = 0;
  for (auto& en : a.entries())
    for (auto& c : en.c) d = std::max(d, c.deg());
  return d;
}

bool is_single_var(const LinTerm& t) {
  if (!t.constant_part().is_zero() || t.poly().entries().size() != 1) return false;
  auto& c = t.poly().entries()[0].c;
  return c.size() == 1 && c[0].is_one();
}

// t = sum_i z^i L_i with every L_i an L_p term; t must be over F-variables.
// A term over F-variables with coefficients in F_p, so its value lies in F.
bool is_lp_term(const LinTerm& t) {
  for (auto& v : t.vars())
    if (v.sort != Sort::F) return false;
  if (t.constant_part().deg() > 0) return false;
  for (auto& en : t.poly().entries())
    for (auto& c : en.c)
      if (c.deg() > 0) return false;
  return true;
}

std::vector<LinTerm> z_coefficients(const LinTerm& t) {
  const FieldPtr& F = t.field();
  int top = t.constant_part().deg();
  for (auto& en : t.poly().entries()) {
    if (en.var.sort != Sort::F) throw DomainError("coefficient comparison needs F-sorted variables");
    for (auto& c : en.c) top = std::max(top, c.deg());
  }
  std::vector<LinTerm> out;
  for (int i = 0; i <= top; ++i) {
    AdditivePoly a(F);
    for (auto& en : t.poly().entries())
      for (unsigned k = 0; k < en.c.size(); ++k) {
        Elem c = en.c[k].coeff(static_cast<std::size_t>(i));
        if (c) a.add_term(en.var, k, Poly::constant(F, c));
      }
    out.emplace_back(a, Poly::constant(F, t.constant_part().coeff(static_cast<std::size_t>(i))));
  }
  return out;
}

FormulaPtr coeff_eq(const LinTerm& t) {
  std::vector<FormulaPtr> kids;
  for (auto& L : z_coefficients(t)) {
    if (L.is_zero()) continue;
    kids.push_back(f_eq(L, LinTerm(t.field())));
  }
  return f_and(std::move(kids));
}

FormulaPtr coeff_neq(const LinTerm& t) {
  std::vector<FormulaPtr> kids;
  for (auto& L : z_coefficients(t)) {
    if (L.is_zero()) continue;
    kids.push_back(f_neq(L, LinTerm(t.field())));
  }
  return f_or(std::move(kids));
}

// Rewrites an F-level formula into L_p: predicates are inlined and atoms
// with z-coefficients are compared coefficientwise.
FormulaPtr to_lp(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::True:
    case FKind::False:
      return f;
    case FKind::Eq:
      return coeff_eq(f->lhs - f->rhs);
    case FKind::InF:
      z_coefficients(f->lhs);
      return f_true();
    case FKind::Pred: {
      std::map<std::string, LinTerm> sub;
      for (std::size_t i = 0; i < f->args.size(); ++i) {
        if (f->args[i].constant_part().deg() > 0) throw DomainError("predicate argument outside F");
        for (auto& en : f->args[i].poly().entries())
          for (auto& c : en.c)
            if (c.deg() > 0) throw DomainError("predicate argument is not an L_p term");
        sub[f->sigma->params[i]] = f->args[i];
      }
      return to_lp(substitute(f->sigma->body, sub));
    }
    case FKind::Not:
      if (f->kids[0]->kind == FKind::Eq) return coeff_neq(f->kids[0]->lhs - f->kids[0]->rhs);
      return f_not(to_lp(f->kids[0]));
    case FKind::And:
    case FKind::Or: {
      std::vector<FormulaPtr> kids;
      for (auto& k : f->kids) kids.push_back(to_lp(k));
      return f->kind == FKind::And ? f_and(std::move(kids)) : f_or(std::move(kids));
    }
    case FKind::Implies:
      return f_implies(to_lp(f->kids[0]), to_lp(f->kids[1]));
    case FKind::Exists:
    case FKind::Forall:
      if (f->var.sort != Sort::F) throw DomainError("R-sorted quantifier inside an F-level formula");
      return f->kind == FKind::Exists ? f_exists({f->var}, to_lp(f->kids[0])) : f_forall({f->var}, to_lp(f->kids[0]));
  }
  return f;
}

// Packs an F-level formula into P_tau applied to its free variables.
FormulaPtr package(const FormulaPtr& body, const FieldPtr& F) {
  FormulaPtr lp = to_lp(body);
  auto fv = free_vars(lp);
  auto s = std::make_shared<Sigma>();
  std::vector<LinTerm> args;
  for (auto& v : fv) {
    s->params.push_back(v.name);
    args.push_back(fvar(F, v.name));
  }
  s->body = lp;
  return f_pred(s, std::move(args));
}

// e^{kQ} A(T/e^k): every variable of A is replaced by its bounded form.
LinTerm clear_bounded(const AdditivePoly& A, const std::map<std::string, LinTerm>& T, const Poly& e, unsigned k,
                      std::uint64_t Q) {
  const FieldPtr& F = A.field();
  LinTerm out(F);
  for (auto& en : A.entries()) {
    auto it = T.find(en.var.name);
    if (it == T.end()) throw DomainError("variable " + en.var.name + " has no bounded form");
    for (unsigned kk = 0; kk < en.c.size(); ++kk) {
      if (en.c[kk].is_zero()) continue;
      std::uint64_t pk = ipow(F->p(), kk);
      out += it->second.frob(kk).scale(en.c[kk] * e.pow(static_cast<std::uint64_t>(k) * (Q - pk)));
    }
  }
  return out;
}

// Bounded forms T_v = sum_{i <= D} z^i tau_{v,i} for variables of height <= k.
std::map<std::string, LinTerm> bounded_forms(const std::vector<Var>& vars, unsigned k, const Localization& L,
                                             NameSupply& names, std::vector<Var>& taus) {
  const FieldPtr& F = L.field();
  const unsigned D = k * (1 + static_cast<unsigned>(std::max(0, L.e().deg())));
  std::map<std::string, LinTerm> T;
  for (auto& v : vars) {
    LinTerm t(F);
    for (unsigned i = 0; i <= D; ++i) {
      Var tau{names.fresh("r"), Sort::F};
      taus.push_back(tau);
      t += LinTerm::var(F, tau).scale(Poly::monomial(F, 1, i));
    }
    T[v.name] = t;
  }
  return T;
}

AdditivePoly lift_additive(const AdditivePoly& f, const FieldPtr& F) {
  AdditivePoly out(F);
  for (auto& en : f.entries())
    for (unsigned k = 0; k < en.c.size(); ++k)
      if (!en.c[k].is_zero()) out.add_term(en.var, k, lift_to(en.c[k], F));
  return out;
}

// Height bound; when F has no admissible eta the place at infinity is
// handled over F_{p^{mk}}, which does not change the bound.
long long height_bound_any(const AdditivePoly& f, long long ell, const Localization& L) {
  try {
    return height_bound(f, ell, L).h;
  } catch (const DomainError& e) {
    if (std::string(e.what()).find("eta") == std::string::npos) throw;
  }
  const FieldPtr& F = L.field();
  for (unsigned k = 2; k <= 8; ++k) {
    if (ipow(F->p(), F->m() * k) > (1u << 16)) break;
    FieldPtr E = Field::make(F->p(), F->m() * k);
    try {
      auto rep = height_bound(lift_additive(f, E), ell, Localization(E, {}));
      long long h = -rep.C_inf;
      for (auto& Q : L.S()) h += static_cast<long long>(Q.deg()) * -rep.C_finite;
      return h;
    } catch (const DomainError& e) {
      if (std::string(e.what()).find("eta") == std::string::npos) throw;
    }
  }
  throw DomainError("no admissible eta in any small extension");
}

// ---------------------------------------------------------------- negations

struct NnfCtx {
  const Localization& L;
  NameSupply& names;
  std::optional<Poly> g;
  const Poly& aux() {
    if (!g) g = auxiliary_irreducible(L);
    return *g;
  }
};

FormulaPtr nnf(const FormulaPtr& f, bool neg, NnfCtx& cx) {
  const FieldPtr& F = cx.L.field();
  switch (f->kind) {
    case FKind::True:
      return neg ? f_false() : f;
    case FKind::False:
      return neg ? f_true() : f;
    case FKind::Eq:
      return neg ? f_not(f) : f;
    case FKind::InF: {
      const LinTerm& t = f->lhs;
      if (is_lp_term(t)) return neg ? f_false() : f_true();
      if (!neg) {
        if (is_single_var(t)) return f;
        Var a{cx.names.fresh("a"), Sort::F};
        return f_exists({a}, f_eq(t, LinTerm::var(F, a)));
      }
      // t = g y + sum_{i<d} alpha_i z^i with y != 0 or some alpha_i != 0 (i >= 1).
      const Poly& g = cx.aux();
      Var y{cx.names.fresh("y"), Sort::R};
      std::vector<Var> vars{y};
      LinTerm rhs = LinTerm::var(F, y).scale(g);
      std::vector<FormulaPtr> alts{f_neq(LinTerm::var(F, y), LinTerm(F))};
      for (int i = 0; i < g.deg(); ++i) {
        Var a{cx.names.fresh("a"), Sort::F};
        vars.push_back(a);
        rhs += LinTerm::var(F, a).scale(Poly::monomial(F, 1, static_cast<std::size_t>(i)));
        if (i >= 1) alts.push_back(f_neq(LinTerm::var(F, a), LinTerm(F)));
      }
      return f_exists(vars, f_and({f_eq(t, rhs), f_or(alts)}));
    }
    case FKind::Pred: {
      if (!neg) return f;
      // Fails when an argument leaves F or when the negated sigma holds.
      std::vector<FormulaPtr> alts;
      for (auto& a : f->args)
        if (!is_lp_term(a)) alts.push_back(nnf(f_inF(a), true, cx));
      auto s = std::make_shared<Sigma>();
      s->params = f->sigma->params;
      s->body = f_not(f->sigma->body);
      alts.push_back(f_pred(s, f->args));
      return f_or(std::move(alts));
    }
    case FKind::Not:
      return nnf(f->kids[0], !neg, cx);
    case FKind::And:
    case FKind::Or: {
      std::vector<FormulaPtr> kids;
      for (auto& k : f->kids) kids.push_back(nnf(k, neg, cx));
      bool conj = (f->kind == FKind::And) != neg;
      return conj ? f_and(std::move(kids)) : f_or(std::move(kids));
    }
    case FKind::Implies:
      if (neg) return f_and({nnf(f->kids[0], false, cx), nnf(f->kids[1], true, cx)});
      return f_or({nnf(f->kids[0], true, cx), nnf(f->kids[1], false, cx)});
    case FKind::Exists:
    case FKind::Forall: {
      bool ex = (f->kind == FKind::Exists) != neg;
      auto body = nnf(f->kids[0], neg, cx);
      return ex ? f_exists({f->var}, body) : f_forall({f->var}, body);
    }
  }
  return f;
}

// ---------------------------------------------------------------- prenex

FormulaPtr rename_apart(const FormulaPtr& f, std::set<std::string>& used, NameSupply& names, const FieldPtr& F) {
  switch (f->kind) {
    case FKind::Exists:
    case FKind::Forall: {
      Var v = f->var;
      FormulaPtr body = f->kids[0];
      if (!used.insert(v.name).second) {
        Var nv{names.fresh(v.name + "_"), v.sort};
        used.insert(nv.name);
        body = substitute(body, {{v.name, LinTerm::var(F, nv)}});
        v = nv;
      }
      body = rename_apart(body, used, names, F);
      return f->kind == FKind::Exists ? f_exists({v}, body) : f_forall({v}, body);
    }
    case FKind::And:
    case FKind::Or: {
      std::vector<FormulaPtr> kids;
      for (auto& k : f->kids) kids.push_back(rename_apart(k, used, names, F));
      return f->kind == FKind::And ? f_and(std::move(kids)) : f_or(std::move(kids));
    }
    case FKind::Not:
      return f_not(rename_apart(f->kids[0], used, names, F));
    case FKind::Implies:
      return f_implies(rename_apart(f->kids[0], used, names, F), rename_apart(f->kids[1], used, names, F));
    default:
      return f;
  }
}

using Prefix = std::vector<std::pair<bool, Var>>;

Prefix merge_prefixes(const Prefix& a, const Prefix& b) {
  Prefix out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    bool takeA;
    if (i == a.size())
      takeA = false;
    else if (j == b.size())
      takeA = true;
    else if (a[i].first == b[j].first)
      takeA = true;
    else if (!out.empty())
      takeA = a[i].first == out.back().first;
    else
      takeA = a[i].first;  // existential blocks first
    if (takeA) {
      bool k = a[i].first;
      while (i < a.size() && a[i].first == k) out.push_back(a[i++]);
    } else {
      bool k = b[j].first;
      while (j < b.size() && b[j].first == k) out.push_back(b[j++]);
    }
  }
  return out;
}

FormulaPtr pull(const FormulaPtr& f, Prefix& prefix) {
  switch (f->kind) {
    case FKind::Exists:
    case FKind::Forall: {
      Prefix inner;
      auto m = pull(f->kids[0], inner);
      prefix.push_back({f->kind == FKind::Exists, f->var});
      prefix.insert(prefix.end(), inner.begin(), inner.end());
      return m;
    }
    case FKind::And:
    case FKind::Or: {
      std::vector<FormulaPtr> kids;
      Prefix acc;
      for (auto& k : f->kids) {
        Prefix p;
        kids.push_back(pull(k, p));
        acc = merge_prefixes(acc, p);
      }
      prefix.insert(prefix.end(), acc.begin(), acc.end());
      return f->kind == FKind::And ? f_and(std::move(kids)) : f_or(std::move(kids));
    }
    case FKind::Implies:
      throw DomainError("prenex expects a formula without implications");
    case FKind::Not:
      if (!is_quantifier_free(f->kids[0])) throw DomainError("prenex expects negation normal form");
      return f;
    default:
      return f;
  }
}

// ---------------------------------------------------------------- DNF

using Clause = std::vector<FormulaPtr>;

std::vector<Clause> dnf(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::True:
      return {Clause{}};
    case FKind::False:
      return {};
    case FKind::Or: {
      std::vector<Clause> out;
      for (auto& k : f->kids) {
        auto d = dnf(k);
        out.insert(out.end(), d.begin(), d.end());
      }
      return out;
    }
    case FKind::And: {
      std::vector<Clause> acc{Clause{}};
      for (auto& k : f->kids) {
        auto d = dnf(k);
        std::vector<Clause> next;
        if (acc.size() * d.size() > (1u << 16)) throw ResourceError("disjunctive normal form too large");
        for (auto& a : acc)
          for (auto& b : d) {
            Clause c = a;
            c.insert(c.end(), b.begin(), b.end());
            next.push_back(std::move(c));
          }
        acc = std::move(next);
      }
      return acc;
    }
    default:
      return {Clause{f}};
  }
}

std::vector<Var> ordered(const std::map<std::string, Var>& m) {
  std::vector<Var> v;
  for (auto& [n, var] : m) v.push_back(var);
  std::sort(v.begin(), v.end(), [](const Var& a, const Var& b) { return var_name_less(a.name, b.name); });
  return v;
}

FormulaPtr sigma_atom(const SigmaPtr& s, const FieldPtr& F) {
  if (s->params.empty() && s->body->kind == FKind::True) return f_true();
  std::vector<LinTerm> args;
  for (auto& p : s->params) args.push_back(fvar(F, p));
  return f_pred(s, std::move(args));
}

}  // namespace

// ---------------------------------------------------------------- public API

Poly auxiliary_irreducible(const Localization& L) {
  const FieldPtr& F = L.field();
  FieldPtr Fp = Field::prime(F->p());
  for (int d = 1; d <= 16; ++d)
    for (auto& g : irreducibles_of_degree(Fp, d, 1u << 12)) {
      if (!remains_irreducible(g, F)) continue;
      Poly gl = lift_to(g, F);
      if (std::find(L.S().begin(), L.S().end(), gl) != L.S().end()) continue;
      return gl;
    }
  throw DomainError("no auxiliary irreducible found");
}

FormulaPtr eliminate_negations(const FormulaPtr& phi, const Localization& L) {
  NameSupply names = supply_for(phi);
  NnfCtx cx{L, names, std::nullopt};
  return nnf(phi, false, cx);
}

FormulaPtr PrenexForm::to_formula() const {
  FormulaPtr f = matrix;
  for (std::size_t i = prefix.size(); i-- > 0;)
    f = prefix[i].first ? f_exists({prefix[i].second}, f) : f_forall({prefix[i].second}, f);
  return f;
}

PrenexForm prenex(const FormulaPtr& phi, const Localization& L) {
  NameSupply names = supply_for(phi);
  std::set<std::string> used;
  for (auto& v : free_vars(phi)) used.insert(v.name);
  FormulaPtr apart = rename_apart(phi, used, names, L.field());
  PrenexForm pf;
  pf.matrix = pull(apart, pf.prefix);
  return pf;
}

FormulaPtr EnfDisjunct::to_formula() const {
  const FieldPtr& F = f.field();
  std::vector<FormulaPtr> kids;
  if (!(f + H).is_zero() || !u.is_zero()) kids.push_back(f_eq(lin(f + H), u));
  for (auto& q : ineqs) kids.push_back(f_neq(lin(q.e + q.G), q.v));
  kids.push_back(sigma_atom(sigma, F));
  std::vector<Var> vars = x;
  vars.insert(vars.end(), alpha.begin(), alpha.end());
  return f_exists(vars, f_and(std::move(kids)));
}

FormulaPtr ExistentialNormalForm::to_formula() const {
  std::vector<FormulaPtr> kids;
  for (auto& d : disjuncts) kids.push_back(d.to_formula());
  return f_or(std::move(kids));
}

ExistentialNormalForm to_existential_normal_form(const FormulaPtr& phi, const Localization& L) {
  const FieldPtr& F = L.field();
  PrenexForm pf = prenex(eliminate_negations(phi, L), L);
  for (auto& [ex, v] : pf.prefix)
    if (!ex) throw DomainError("formula is not existential");
  NameSupply names = supply_for(pf.to_formula());
  ExistentialNormalForm out;
  for (auto& clause : dnf(pf.matrix)) {
    std::map<std::string, Sort> bound;
    for (auto& [ex, v] : pf.prefix) bound[v.name] = v.sort;
    std::vector<LinTerm> eqs;
    std::vector<FormulaPtr> preds;
    std::vector<LinTerm> neqs;
    // inF on bound R-variables turns them into F-variables.
    std::map<std::string, LinTerm> reclass;
    for (auto& lit : clause) {
      if (lit->kind != FKind::InF) continue;
      const Var v = lit->lhs.vars().at(0);
      if (v.sort == Sort::F) continue;
      if (bound.count(v.name)) {
        bound[v.name] = Sort::F;
        reclass[v.name] = fvar(F, v.name);
      } else {
        Var a{names.fresh("a"), Sort::F};
        bound[a.name] = Sort::F;
        eqs.push_back(lit->lhs - LinTerm::var(F, a));
      }
    }
    for (auto& lit : clause) {
      switch (lit->kind) {
        case FKind::True:
        case FKind::InF:
          break;
        case FKind::Eq:
          eqs.push_back((lit->lhs - lit->rhs).substitute(reclass));
          break;
        case FKind::Not:
          if (lit->kids[0]->kind != FKind::Eq) throw InvariantError("unexpected literal in normal form");
          neqs.push_back((lit->kids[0]->lhs - lit->kids[0]->rhs).substitute(reclass));
          break;
        case FKind::Pred: {
          // Arguments that are not already F-valued get a fresh F-variable.
          std::vector<LinTerm> args;
          for (auto& a : lit->args) {
            LinTerm t = a.substitute(reclass);
            if (!is_lp_term(t)) {
              Var b{names.fresh("a"), Sort::F};
              bound[b.name] = Sort::F;
              eqs.push_back(t - LinTerm::var(F, b));
              t = LinTerm::var(F, b);
            }
            args.push_back(t);
          }
          preds.push_back(f_pred(lit->sigma, std::move(args)));
          break;
        }
        default:
          throw InvariantError("unexpected literal in normal form");
      }
    }
    auto isBound = [&](const Var& v) { return bound.count(v.name) > 0; };
    auto isBoundR = [&](const Var& v) { return bound.count(v.name) && bound.at(v.name) == Sort::R; };
    EnfDisjunct d;
    LinTerm merged(F);
    for (std::size_t i = 0; i < eqs.size(); ++i)
      merged = i == 0 ? eqs[0] : merged.frob(1) + eqs[i].frob(1).scale(Poly::z(F));
    auto [bpart, fpart] = merged.split(isBound);
    d.f = bpart.poly().restrict_sort(Sort::R);
    d.H = bpart.poly().restrict_sort(Sort::F);
    d.u = -fpart;
    for (auto& t : neqs) {
      auto [b, r] = t.split(isBound);
      d.ineqs.push_back({b.poly().restrict_sort(Sort::R), b.poly().restrict_sort(Sort::F), -r});
    }
    // One predicate over all F-variables the predicates mention.
    std::map<std::string, Var> fParams;
    std::vector<FormulaPtr> bodies;
    for (auto& p : preds) {
      std::map<std::string, LinTerm> sub;
      for (std::size_t i = 0; i < p->args.size(); ++i) {
        for (auto& v : p->args[i].vars()) {
          if (isBoundR(v) || (!isBound(v) && v.sort == Sort::R))
            throw DomainError("predicate argument is not F-sorted");
          fParams.emplace(v.name, Var{v.name, Sort::F});
        }
        sub[p->sigma->params[i]] = p->args[i];
      }
      bodies.push_back(to_lp(substitute(p->sigma->body, sub)));
    }
    auto s = std::make_shared<Sigma>();
    for (auto& v : ordered(fParams)) s->params.push_back(v.name);
    s->body = f_and(bodies);
    d.sigma = s;
    std::map<std::string, Var> xs, as;
    auto collect = [&](const AdditivePoly& a) {
      for (auto& v : a.vars())
        if (isBound(v)) (v.sort == Sort::R ? xs : as).emplace(v.name, v);
    };
    collect(d.f);
    collect(d.H);
    for (auto& q : d.ineqs) {
      collect(q.e);
      collect(q.G);
    }
    for (auto& [n, v] : fParams)
      if (isBound(v)) as.emplace(n, v);
    d.x = ordered(xs);
    d.alpha = ordered(as);
    if (d.f.field() == nullptr) d.f = AdditivePoly(F);
    out.disjuncts.push_back(std::move(d));
  }
  return out;
}

FormulaPtr bounded_height_formula(const Var& x, unsigned k, const Localization& L) {
  const FieldPtr& F = L.field();
  NameSupply names;
  names.reserve(x.name);
  // x = a / b with b a product of elements of S: |x| <= k iff some such b of
  // degree <= k has b x of degree <= k.
  std::vector<Poly> dens{one(F)};
  for (auto& s : L.S()) {
    std::vector<Poly> next;
    for (auto& d : dens)
      for (Poly q = d; q.deg() <= static_cast<int>(k); q = q * s) next.push_back(q);
    dens = std::move(next);
  }
  std::vector<Var> alphas;
  LinTerm rhs(F);
  for (unsigned i = 0; i <= k; ++i) {
    Var a{names.fresh("al"), Sort::F};
    alphas.push_back(a);
    rhs += LinTerm::var(F, a).scale(Poly::monomial(F, 1, i));
  }
  std::vector<FormulaPtr> cases;
  for (auto& d : dens) cases.push_back(f_eq(LinTerm::var(F, x).scale(d), rhs));
  return f_exists(alphas, f_or(std::move(cases)));
}

// ---------------------------------------------------------------- logic1

namespace {

Logic1Instance logic1_instance(const AdditivePoly& f, const AdditivePoly& H, const Localization& L,
                               NameSupply& names) {
  const FieldPtr& F = L.field();
  if (f.is_zero()) throw DomainError("logic1 needs a nonzero f");
  auto cls = classify(f);
  if (!cls.strongly_normalized || !cls.all_same_s) throw DomainError("logic1 needs a strongly normalized f");
  names.reserve(f);
  names.reserve(H);
  Logic1Instance inst;
  inst.f = f;
  inst.H = H;
  inst.h = p_basic_completion(f, names);
  inst.e = L.e();
  auto rep = e_ord(f + inst.h);
  inst.N = static_cast<unsigned>(std::max<long long>(0, rep.Eord));
  inst.G = AdditivePoly(F);
  const unsigned top = inst.N * (1 + static_cast<unsigned>(std::max(0, inst.e.deg())));
  for (unsigned i = 0; i <= top; ++i)
    inst.G.add_term(Var{names.fresh("c"), Sort::F}, 0, Poly::monomial(F, 1, i));
  return inst;
}

std::map<std::string, std::string> fresh_copies(const std::vector<Var>& vars, const std::string& prefix,
                                                NameSupply& names, std::vector<Var>& out) {
  std::map<std::string, std::string> m;
  for (auto& v : vars) {
    Var c{names.fresh(prefix), v.sort};
    m[v.name] = c.name;
    out.push_back(c);
  }
  return m;
}

}  // namespace

Logic1Instance make_logic1_instance(const AdditivePoly& f, const AdditivePoly& H, const Localization& L) {
  NameSupply names;
  return logic1_instance(f, H, L, names);
}

Logic1Result logic1_transform(const Logic1Instance& inst, const LinTerm& u) {
  Logic1Result r;
  r.x = inst.f.vars();
  r.y = inst.h.vars();
  r.gamma = inst.G.vars();
  r.alpha = inst.H.vars();
  NameSupply names;
  std::set<std::string> seen;
  for (auto* vs : {&r.x, &r.y, &r.gamma, &r.alpha})
    for (auto& v : *vs) {
      if (!seen.insert(v.name).second) throw DomainError("logic1 variable tuples must be disjoint");
      names.reserve(v.name);
    }
  for (auto& v : u.vars())
    if (seen.count(v.name)) throw DomainError("u shares a variable with the instance");
  for (auto& v : u.vars()) names.reserve(v.name);
  auto wmap = fresh_copies(r.x, "w", names, r.w);
  const Poly eN = inst.e.pow(inst.N);
  r.antecedent = f_eq(u.scale(eN), lin(inst.f.scale(eN) + inst.h.scale(eN) + inst.G));
  r.pi1Matrix = f_eq(lin(inst.f.rename(wmap).scale(eN) + inst.h.scale(eN) + inst.G), lin(inst.H.scale(eN)));
  std::vector<Var> inner = r.w;
  inner.insert(inner.end(), r.alpha.begin(), r.alpha.end());
  std::vector<Var> outer = r.x;
  outer.insert(outer.end(), r.y.begin(), r.y.end());
  outer.insert(outer.end(), r.gamma.begin(), r.gamma.end());
  r.phi1 = f_forall(outer, f_implies(r.antecedent, f_exists(inner, r.pi1Matrix)));
  return r;
}

Assignment logic1_forward(const Logic1Result& r, const Assignment& decomposition, const Assignment& antecedent) {
  Assignment out;
  for (std::size_t i = 0; i < r.x.size(); ++i)
    out[r.w[i].name] = antecedent.at(r.x[i].name) - decomposition.at(r.x[i].name);
  for (auto& a : r.alpha) out[a.name] = decomposition.at(a.name);
  return out;
}

Assignment logic1_backward(const Logic1Result& r, const Assignment& antecedent, const Assignment& pi1Witness) {
  Assignment out;
  for (std::size_t i = 0; i < r.x.size(); ++i)
    out[r.x[i].name] = antecedent.at(r.x[i].name) - pi1Witness.at(r.w[i].name);
  for (auto& a : r.alpha) out[a.name] = pi1Witness.at(a.name);
  return out;
}

// ---------------------------------------------------------------- logic2

Logic2Result logic2_transform(const EnfDisjunct& d, const Localization& L) {
  const FieldPtr& F = L.field();
  NameSupply names;
  names.reserve(d.f);
  names.reserve(d.H);
  for (auto& v : d.u.vars()) names.reserve(v.name);
  for (auto& q : d.ineqs) {
    names.reserve(q.e);
    names.reserve(q.G);
    for (auto& v : q.v.vars()) names.reserve(v.name);
  }
  for (auto& p : d.sigma->params) names.reserve(p);
  for (auto& n : all_var_names(d.sigma->body)) names.reserve(n);
  for (auto& v : d.x) names.reserve(v.name);
  for (auto& v : d.alpha) names.reserve(v.name);

  Logic2Result r;
  std::vector<Var> xp, ap;
  auto xpMap = fresh_copies(d.x, "xm", names, xp);
  auto apMap = fresh_copies(d.alpha, "am", names, ap);
  auto wMap = fresh_copies(d.x, "w", names, r.w);
  auto bMap = fresh_copies(d.alpha, "b", names, r.beta);
  auto tMap = fresh_copies(d.x, "t", names, r.t);
  auto gMap = fresh_copies(d.alpha, "g", names, r.gamma);

  std::vector<Var> mvars = xp;
  mvars.insert(mvars.end(), ap.begin(), ap.end());
  r.membership = f_exists(mvars, f_eq(lin(d.f.rename(xpMap) + d.H.rename(apMap)), d.u));
  r.antecedent = f_eq(lin(d.f.rename(wMap) + d.H.rename(bMap)), d.u);

  std::vector<FormulaPtr> kids{f_eq(lin(d.f.rename(tMap) + d.H.rename(gMap)), LinTerm(F))};
  for (auto& q : d.ineqs)
    kids.push_back(f_neq(lin(q.e.rename(tMap) + q.G.rename(gMap)), q.v - lin(q.e.rename(wMap) + q.G.rename(bMap))));
  if (!(d.sigma->params.empty() && d.sigma->body->kind == FKind::True)) {
    std::vector<LinTerm> args;
    for (auto& p : d.sigma->params) {
      auto bi = bMap.find(p);
      if (bi != bMap.end())
        args.push_back(fvar(F, bi->second) + fvar(F, gMap.at(p)));
      else
        args.push_back(fvar(F, p));
    }
    kids.push_back(f_pred(d.sigma, std::move(args)));
  }
  r.pi2Matrix = f_and(std::move(kids));
  {
    std::vector<FormulaPtr> m{f_eq(lin(d.f + d.H), d.u)};
    for (auto& q : d.ineqs) m.push_back(f_neq(lin(q.e + q.G), q.v));
    m.push_back(sigma_atom(d.sigma, F));
    r.psiMatrix = f_and(std::move(m));
  }
  std::vector<Var> inner = r.t;
  inner.insert(inner.end(), r.gamma.begin(), r.gamma.end());
  std::vector<Var> outer = r.w;
  outer.insert(outer.end(), r.beta.begin(), r.beta.end());
  r.phi2 = f_and({r.membership, f_forall(outer, f_implies(r.antecedent, f_exists(inner, r.pi2Matrix)))});
  return r;
}

Assignment logic2_forward(const Logic2Result& r, const EnfDisjunct& d, const Assignment& psiWitness,
                          const Assignment& wbeta) {
  Assignment out;
  for (std::size_t i = 0; i < d.x.size(); ++i)
    out[r.t[i].name] = psiWitness.at(d.x[i].name) - wbeta.at(r.w[i].name);
  for (std::size_t i = 0; i < d.alpha.size(); ++i)
    out[r.gamma[i].name] = psiWitness.at(d.alpha[i].name) - wbeta.at(r.beta[i].name);
  return out;
}

Assignment logic2_backward(const Logic2Result& r, const EnfDisjunct& d, const Assignment& wbeta,
                           const Assignment& pi2Witness) {
  Assignment out;
  for (std::size_t i = 0; i < d.x.size(); ++i)
    out[d.x[i].name] = wbeta.at(r.w[i].name) + pi2Witness.at(r.t[i].name);
  for (std::size_t i = 0; i < d.alpha.size(); ++i)
    out[d.alpha[i].name] = wbeta.at(r.beta[i].name) + pi2Witness.at(r.gamma[i].name);
  return out;
}

// ---------------------------------------------------------------- universalization

FormulaPtr BoundedExistential::to_formula() const {
  std::vector<FormulaPtr> kids;
  for (auto& t : fEqs) kids.push_back(f_eq(t, LinTerm(t.field())));
  for (auto& [l, r] : rEqs) kids.push_back(f_eq(l, r));
  for (auto& [l, r] : ineqs) kids.push_back(f_neq(l, r));
  if (fPart) kids.push_back(fPart);
  return f_exists(gamma, f_and(std::move(kids)));
}

FormulaPtr universalize_bounded(const BoundedExistential& pi, const Localization& L, UniversalizeInfo* info) {
  const FieldPtr& F = L.field();
  NameSupply names = supply_for(pi.to_formula());
  std::set<std::string> gammaNames;
  for (auto& g : pi.gamma) {
    if (g.sort != Sort::F) throw DomainError("universalize_bounded quantifies F-variables only");
    gammaNames.insert(g.name);
  }
  auto check_lhs = [&](const LinTerm& t) {
    for (auto& v : t.vars())
      if (v.sort != Sort::F) throw DomainError("left-hand sides must be over F-variables");
  };
  auto check_rhs = [&](const LinTerm& t) {
    for (auto& v : t.vars())
      if (gammaNames.count(v.name)) throw DomainError("right-hand side mentions a quantified variable");
  };
  for (auto& t : pi.fEqs) check_lhs(t);
  for (auto& [l, r] : pi.rEqs) {
    check_lhs(l);
    check_rhs(r);
  }
  for (auto& [l, r] : pi.ineqs) {
    check_lhs(l);
    check_rhs(r);
  }
  FormulaPtr fPart = pi.fPart ? pi.fPart : f_true();
  const std::size_t nr = pi.rEqs.size(), nj = pi.ineqs.size();
  if (nj > 12) throw ResourceError("too many inequalities to universalize");

  UniversalizeInfo inf;
  inf.Q = auxiliary_irreducible(L);
  int M = 0;
  for (auto& [l, r] : pi.rEqs) M = std::max(M, std::max(max_coeff_deg(l.poly()), l.constant_part().deg()));
  for (auto& [l, r] : pi.ineqs) M = std::max(M, std::max(max_coeff_deg(l.poly()), l.constant_part().deg()));
  inf.M = static_cast<unsigned>(M);
  inf.N = inf.M;
  if (info) *info = inf;

  if (nr + nj == 0) {
    std::vector<FormulaPtr> body;
    for (auto& t : pi.fEqs) body.push_back(f_eq(t, LinTerm(F)));
    body.push_back(fPart);
    return package(f_exists(pi.gamma, f_and(std::move(body))), F);
  }

  // t_i = sum_{a <= M} Q^a sum_{k < d} mu_{i,a,k} z^k.
  const int d = inf.Q.deg();
  std::vector<Var> mus, ys;
  std::vector<LinTerm> ts;
  for (std::size_t i = 0; i < nr + nj; ++i) {
    LinTerm t(F);
    Poly Qa = one(F);
    for (unsigned a = 0; a <= inf.M; ++a) {
      for (int k = 0; k < d; ++k) {
        Var mu{names.fresh("m"), Sort::F};
        mus.push_back(mu);
        t += LinTerm::var(F, mu).scale(Qa * Poly::monomial(F, 1, static_cast<std::size_t>(k)));
      }
      Qa *= inf.Q;
    }
    ts.push_back(t);
    ys.push_back(Var{names.fresh("y"), Sort::R});
  }
  const Poly QN1 = inf.Q.pow(inf.N + 1);
  std::vector<FormulaPtr> ant;
  for (std::size_t i = 0; i < nr + nj; ++i) {
    const LinTerm& rhs = i < nr ? pi.rEqs[i].second : pi.ineqs[i - nr].second;
    ant.push_back(f_eq(rhs, ts[i] + LinTerm::var(F, ys[i]).scale(QN1)));
  }
  const LinTerm zero(F);
  std::vector<FormulaPtr> cases;
  for (std::uint32_t K = 0; K < (1u << nj); ++K) {
    std::vector<FormulaPtr> c, tau;
    for (std::size_t i = 0; i < nr; ++i) {
      c.push_back(f_eq(LinTerm::var(F, ys[i]), zero));
      tau.push_back(coeff_eq(pi.rEqs[i].first - ts[i]));
    }
    for (std::size_t j = 0; j < nj; ++j) {
      LinTerm y = LinTerm::var(F, ys[nr + j]);
      if (K >> j & 1u) {
        c.push_back(f_neq(y, zero));
      } else {
        c.push_back(f_eq(y, zero));
        tau.push_back(coeff_neq(pi.ineqs[j].first - ts[nr + j]));
      }
    }
    for (auto& t : pi.fEqs) tau.push_back(coeff_eq(t));
    tau.push_back(fPart);
    c.push_back(package(f_exists(pi.gamma, f_and(std::move(tau))), F));
    cases.push_back(f_and(std::move(c)));
  }
  std::vector<Var> all = mus;
  all.insert(all.end(), ys.begin(), ys.end());
  return f_forall(all, f_implies(f_and(std::move(ant)), f_or(std::move(cases))));
}

// ---------------------------------------------------------------- pipeline

namespace {

// A disjunct after normalizing f and dropping inequalities that mention an
// R-variable outside fTilde (those hold for some value by infinitude of R).
struct NormDisjunct {
  AdditivePoly f, H;
  LinTerm u;
  std::vector<Inequality> ineqs;
  std::vector<Var> alpha;
  SigmaPtr sigma;
};

NormDisjunct normalize_disjunct(const EnfDisjunct& d, const Localization& L, NameSupply& names) {
  const FieldPtr& F = L.field();
  NormDisjunct nd;
  nd.u = d.u;
  nd.sigma = d.sigma;
  std::map<std::string, Var> alpha;
  for (auto& a : d.alpha) alpha.emplace(a.name, a);
  std::vector<Inequality> ineqs = d.ineqs;
  if (!d.f.is_zero()) {
    auto nr = normalize_full(d.f, L, names);
    auto sub = nr.xi.as_substitution();
    nd.f = nr.fTilde;
    nd.H = nr.G + d.H;
    for (auto& v : nr.xi.domain())
      if (v.sort == Sort::F) alpha.emplace(v.name, v);
    for (auto& v : nr.G.vars()) alpha.emplace(v.name, v);
    for (auto& q : ineqs) {
      AdditivePoly e = q.e.substitute(sub);
      q.G = q.G + e.restrict_sort(Sort::F);
      q.e = e.restrict_sort(Sort::R);
      for (auto& v : q.G.vars()) alpha.emplace(v.name, v);
    }
  } else {
    nd.f = AdditivePoly(F);
    nd.H = d.H;
  }
  std::set<std::string> fv;
  for (auto& v : nd.f.vars()) fv.insert(v.name);
  for (auto& q : ineqs) {
    bool outside = false;
    for (auto& v : q.e.vars()) outside |= !fv.count(v.name);
    if (!outside) nd.ineqs.push_back(q);
  }
  nd.alpha = ordered(alpha);
  return nd;
}

void reserve_all(NameSupply& names, const ExistentialNormalForm& enf) {
  auto f = enf.to_formula();
  for (auto& n : all_var_names(f)) names.reserve(n);
}

std::map<std::string, std::string> copy_names(const std::vector<Var>& vars, const std::string& prefix,
                                              NameSupply& names, std::vector<Var>& out) {
  return fresh_copies(vars, prefix, names, out);
}

AdditivePoly renamed(const AdditivePoly& a, const std::map<std::string, std::string>& m) { return a.rename(m); }

FormulaPtr universal_of_disjunct(const EnfDisjunct& d, const Localization& L, NameSupply& names) {
  const FieldPtr& F = L.field();
  NormDisjunct nd = normalize_disjunct(d, L, names);
  const Poly e = L.e();
  const unsigned degE = static_cast<unsigned>(std::max(0, e.deg()));
  FormulaPtr sigmaAtom = sigma_atom(nd.sigma, F);

  if (nd.f.is_zero()) {
    BoundedExistential be;
    be.gamma = nd.alpha;
    be.rEqs.push_back({lin(nd.H), nd.u});
    for (auto& q : nd.ineqs) be.ineqs.push_back({lin(q.G), q.v});
    be.fPart = sigmaAtom;
    return universalize_bounded(be, L);
  }

  const std::vector<Var> B = nd.f.vars();
  const std::uint64_t q = nd.f.degree();

  // Second conjunct: every decomposition u = f(w) + H(beta) extends.
  FormulaPtr C2;
  {
    std::vector<Var> w, beta, gamma;
    auto wMap = copy_names(B, "w", names, w);
    auto bMap = copy_names(nd.alpha, "b", names, beta);
    auto gMap = copy_names(nd.alpha, "g", names, gamma);
    const long long ell = max_coeff_deg(nd.H);
    const unsigned k = static_cast<unsigned>(std::max(0LL, height_bound_any(nd.f, ell, L)));
    std::vector<Var> taus;
    auto T = bounded_forms(B, k, L, names, taus);
    BoundedExistential be;
    be.gamma = taus;
    be.gamma.insert(be.gamma.end(), gamma.begin(), gamma.end());
    be.fEqs.push_back(clear_bounded(nd.f, T, e, k, q) + lin(renamed(nd.H, gMap)).scale(e.pow(k * q)));
    for (auto& iq : nd.ineqs) {
      const std::uint64_t qj = iq.e.degree();
      const Poly s = e.pow(k * qj);
      LinTerm lhs = clear_bounded(iq.e, T, e, k, qj) + lin(renamed(iq.G, gMap)).scale(s);
      LinTerm rhs = (iq.v - lin(renamed(iq.e, wMap) + renamed(iq.G, bMap))).scale(s);
      be.ineqs.push_back({lhs, rhs});
    }
    if (sigmaAtom->kind == FKind::Pred) {
      std::vector<LinTerm> args;
      for (auto& p : nd.sigma->params) {
        auto bi = bMap.find(p);
        args.push_back(bi != bMap.end() ? fvar(F, bi->second) + fvar(F, gMap.at(p)) : fvar(F, p));
      }
      be.fPart = f_pred(nd.sigma, std::move(args));
    }
    FormulaPtr chi2 = universalize_bounded(be, L);
    std::vector<Var> outer = w;
    outer.insert(outer.end(), beta.begin(), beta.end());
    C2 = f_forall(outer, f_implies(f_eq(lin(renamed(nd.f, wMap) + renamed(nd.H, bMap)), nd.u), chi2));
  }

  // First conjunct: u in Im(f) + Im_F(H).
  FormulaPtr C1;
  {
    Logic1Instance inst = logic1_instance(nd.f, nd.H, L, names);
    const AdditivePoly g = inst.f + inst.h;
    const Poly eN = e.pow(inst.N);
    std::vector<Var> x1;
    auto xMap = copy_names(B, "x", names, x1);
    const std::vector<Var> Y = inst.h.vars();
    const std::vector<Var> C = inst.G.vars();
    FormulaPtr ant = f_eq(nd.u.scale(eN), lin(renamed(nd.f, xMap).scale(eN) + inst.h.scale(eN) + inst.G));
    const long long ell = std::max<long long>(max_coeff_deg(nd.H) + static_cast<long long>(inst.N * degE),
                                              static_cast<long long>(inst.N * (1 + degE)));
    const unsigned k = static_cast<unsigned>(std::max(0LL, height_bound_any(g, ell, L)));
    std::vector<Var> wv;
    auto wMap = copy_names(B, "w", names, wv);
    std::vector<Var> taus;
    auto T = bounded_forms(wv, k, L, names, taus);
    std::vector<Var> rhoY;
    auto TY = bounded_forms(Y, k, L, names, rhoY);
    std::vector<Var> a1;
    auto aMap = copy_names(nd.alpha, "a", names, a1);
    BoundedExistential be;
    be.gamma = taus;
    be.gamma.insert(be.gamma.end(), rhoY.begin(), rhoY.end());
    be.gamma.insert(be.gamma.end(), a1.begin(), a1.end());
    const Poly ekq = e.pow(k * q);
    LinTerm E = clear_bounded(renamed(nd.f, wMap), T, e, k, q).scale(eN);
    if (!inst.h.is_zero()) E += clear_bounded(inst.h, TY, e, k, q).scale(eN);
    E += (lin(inst.G) - lin(renamed(nd.H, aMap)).scale(eN)).scale(ekq);
    be.fEqs.push_back(E);
    for (auto& y : Y) be.rEqs.push_back({TY.at(y.name), LinTerm::var(F, y).scale(e.pow(k))});
    FormulaPtr chi1 = universalize_bounded(be, L);
    std::vector<Var> outer = x1;
    outer.insert(outer.end(), Y.begin(), Y.end());
    outer.insert(outer.end(), C.begin(), C.end());
    C1 = f_forall(outer, f_implies(ant, chi1));
  }
  return f_and({C1, C2});
}

FormulaPtr universal_prenex(const FormulaPtr& f, const Localization& L) {
  PrenexForm pf = prenex(eliminate_negations(f, L), L);
  for (auto& [ex, v] : pf.prefix)
    if (ex) throw InvariantError("universal transform produced an existential quantifier");
  return pf.to_formula();
}

// The L_p sentence for an existential sentence.
FormulaPtr existential_sigma(const FormulaPtr& phi, const Localization& L) {
  auto enf = to_existential_normal_form(phi, L);
  NameSupply names;
  reserve_all(names, enf);
  const Poly e = L.e();
  std::vector<FormulaPtr> out;
  for (auto& d : enf.disjuncts) {
    if (!d.u.is_constant()) throw DomainError("sentence expected");
    NormDisjunct nd = normalize_disjunct(d, L, names);
    std::vector<FormulaPtr> body;
    std::vector<Var> vars;
    if (nd.f.is_zero()) {
      body.push_back(coeff_eq(lin(nd.H) - nd.u));
      for (auto& q : nd.ineqs) body.push_back(coeff_neq(lin(q.G) - q.v));
    } else {
      const long long ell = std::max<long long>(std::max(0, nd.u.constant_part().deg()), max_coeff_deg(nd.H));
      const unsigned k = static_cast<unsigned>(std::max(0LL, height_bound_any(nd.f, ell, L)));
      const std::uint64_t q = nd.f.degree();
      auto T = bounded_forms(nd.f.vars(), k, L, names, vars);
      body.push_back(coeff_eq(clear_bounded(nd.f, T, e, k, q) + (lin(nd.H) - nd.u).scale(e.pow(k * q))));
      for (auto& iq : nd.ineqs) {
        const std::uint64_t qj = iq.e.degree();
        body.push_back(coeff_neq(clear_bounded(iq.e, T, e, k, qj) + (lin(iq.G) - iq.v).scale(e.pow(k * qj))));
      }
    }
    body.push_back(nd.sigma->body);
    vars.insert(vars.end(), nd.alpha.begin(), nd.alpha.end());
    out.push_back(f_exists(vars, f_and(std::move(body))));
  }
  return f_or(std::move(out));
}

}  // namespace

FormulaPtr existential_to_universal(const FormulaPtr& phi, const Localization& L) {
  auto enf = to_existential_normal_form(phi, L);
  NameSupply names;
  reserve_all(names, enf);
  for (auto& v : free_vars(phi)) names.reserve(v.name);
  std::vector<FormulaPtr> parts;
  for (auto& d : enf.disjuncts) parts.push_back(universal_of_disjunct(d, L, names));
  return universal_prenex(f_or(std::move(parts)), L);
}

FormulaPtr model_complete_transform(const FormulaPtr& phi, const Localization& L) {
  PrenexForm pf = prenex(eliminate_negations(phi, L), L);
  bool anyExists = false;
  for (auto& [ex, v] : pf.prefix) anyExists |= ex;
  if (!anyExists) return phi;
  // Blocks from the inside out; cur stays existential.
  FormulaPtr cur = pf.matrix;
  std::size_t i = pf.prefix.size();
  while (i > 0) {
    const bool ex = pf.prefix[i - 1].first;
    std::vector<Var> block;
    while (i > 0 && pf.prefix[i - 1].first == ex) block.insert(block.begin(), pf.prefix[--i].second);
    if (ex) {
      cur = f_exists(block, cur);
      continue;
    }
    FormulaPtr U = is_quantifier_free(cur) ? cur : existential_to_universal(cur, L);
    FormulaPtr A = f_forall(block, U);
    if (i == 0) return universal_prenex(A, L);
    FormulaPtr negU = existential_to_universal(eliminate_negations(f_not(A), L), L);
    cur = prenex(eliminate_negations(f_not(negU), L), L).to_formula();
  }
  return existential_to_universal(cur, L);
}

SigmaPtr sentence_to_sigma(const FormulaPtr& phi, const Localization& L) {
  if (!free_vars(phi).empty()) throw DomainError("sentence_to_sigma needs a sentence");
  PrenexForm pf = prenex(eliminate_negations(phi, L), L);
  bool anyEx = false, anyAll = false;
  for (auto& [ex, v] : pf.prefix) (ex ? anyEx : anyAll) = true;
  auto s = std::make_shared<Sigma>();
  if (!anyAll) {
    s->body = existential_sigma(phi, L);
  } else if (!anyEx) {
    s->body = f_not(existential_sigma(f_not(phi), L));
  } else {
    FormulaPtr U = model_complete_transform(phi, L);
    s->body = f_not(existential_sigma(f_not(U), L));
  }
  return s;
}

}  // namespace frobq
