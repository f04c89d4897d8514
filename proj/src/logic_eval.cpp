#include <algorithm>
#include <mutex>

#include "frobq/errors.hpp"
#include "frobq/logic.hpp"

namespace frobq {

namespace {

// Dense linear system over F_p; the last column is the right-hand side.
class LinSys {
 public:
  LinSys(std::uint32_t p, std::size_t n) : p_(p), n_(n) {}

  void add_row(std::vector<std::uint32_t> row) {
    bool nz = false;
    for (auto v : row) nz |= v != 0;
    if (nz) rows_.push_back(std::move(row));
  }

  // Row-reduces; false when inconsistent.
  bool solve() {
    std::size_t r = 0;
    pivots_.clear();
    for (std::size_t c = 0; c < n_ && r < rows_.size(); ++c) {
      std::size_t piv = r;
      while (piv < rows_.size() && rows_[piv][c] == 0) ++piv;
      if (piv == rows_.size()) continue;
      std::swap(rows_[r], rows_[piv]);
      std::uint32_t inv = inverse(rows_[r][c]);
      for (auto& v : rows_[r]) v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * inv % p_);
      for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (k == r || rows_[k][c] == 0) continue;
        std::uint64_t f = rows_[k][c];
        for (std::size_t j = 0; j <= n_; ++j)
          rows_[k][j] = static_cast<std::uint32_t>((rows_[k][j] + (p_ - f) * rows_[r][j]) % p_);
      }
      pivots_.push_back(c);
      ++r;
    }
    for (std::size_t k = r; k < rows_.size(); ++k)
      if (rows_[k][n_] != 0) return false;
    rows_.resize(r);
    std::vector<bool> isPivot(n_, false);
    for (auto c : pivots_) isPivot[c] = true;
    free_.clear();
    for (std::size_t c = 0; c < n_; ++c)
      if (!isPivot[c]) free_.push_back(c);
    return true;
  }

  std::size_t num_free() const { return free_.size(); }

  // Solution for the given values of the free columns.
  std::vector<std::uint32_t> solution(const std::vector<std::uint32_t>& freeVals) const {
    std::vector<std::uint32_t> x(n_, 0);
    for (std::size_t i = 0; i < free_.size(); ++i) x[free_[i]] = freeVals[i];
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      std::uint64_t v = rows_[r][n_];
      for (std::size_t i = 0; i < free_.size(); ++i)
        v += (p_ - rows_[r][free_[i]]) * static_cast<std::uint64_t>(freeVals[i]);
      x[pivots_[r]] = static_cast<std::uint32_t>(v % p_);
    }
    return x;
  }

 private:
  std::uint32_t inverse(std::uint32_t a) const {
    std::uint64_t r = 1, b = a, e = p_ - 2;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t p_;
  std::size_t n_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_, free_;
};

// Counter over {0..p-1}^n; false once it wraps.
bool next_tuple(std::vector<std::uint32_t>& v, std::uint32_t p) {
  for (auto& x : v) {
    if (++x < p) return true;
    x = 0;
  }
  return false;
}

std::uint64_t checked_pow(std::uint64_t b, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (b != 0 && r > cap / b) return cap + 1;
    r *= b;
  }
  return r;
}

// Conjuncts of f, looking through double negation and negated or/implies.
void conjuncts(const FormulaPtr& f, bool neg, std::vector<FormulaPtr>& out) {
  if (!neg && f->kind == FKind::And) {
    for (auto& k : f->kids) conjuncts(k, false, out);
  } else if (neg && f->kind == FKind::Or) {
    for (auto& k : f->kids) conjuncts(k, true, out);
  } else if (neg && f->kind == FKind::Implies) {
    conjuncts(f->kids[0], false, out);
    conjuncts(f->kids[1], true, out);
  } else if (f->kind == FKind::Not) {
    conjuncts(f->kids[0], !neg, out);
  } else {
    out.push_back(neg ? f_not(f) : f);
  }
}

// Disjuncts of a literal, or empty when it is not a disjunction.
std::vector<FormulaPtr> disjuncts(const FormulaPtr& lit) {
  if (lit->kind == FKind::Or) return lit->kids;
  if (lit->kind == FKind::Implies) return {f_not(lit->kids[0]), lit->kids[1]};
  if (lit->kind == FKind::Not && lit->kids[0]->kind == FKind::And) {
    std::vector<FormulaPtr> out;
    for (auto& k : lit->kids[0]->kids) out.push_back(f_not(k));
    return out;
  }
  return {};
}

// Distributes a block over disjunctive literals so that every branch is a
// conjunction the linear pruning can use. Stops splitting past the budget.
std::vector<std::vector<FormulaPtr>> branches(const std::vector<FormulaPtr>& lits, std::size_t budget = 1u << 12) {
  struct Item {
    std::vector<FormulaPtr> conj, rest;
  };
  std::vector<std::vector<FormulaPtr>> done;
  std::vector<Item> work{{{}, lits}};
  while (!work.empty()) {
    Item it = std::move(work.back());
    work.pop_back();
    bool split = false;
    for (std::size_t i = 0; i < it.rest.size() && !split; ++i) {
      auto ds = disjuncts(it.rest[i]);
      // Splitting only pays when some branch gains an equation.
      bool gains = false;
      for (auto& d : ds) {
        std::vector<FormulaPtr> parts;
        conjuncts(d, false, parts);
        for (auto& q : parts) gains |= q->kind == FKind::Eq;
      }
      if (gains && ds.size() > 1 && done.size() + work.size() + ds.size() <= budget) {
        for (auto d = ds.rbegin(); d != ds.rend(); ++d) {
          Item n{it.conj, {}};
          conjuncts(*d, false, n.rest);
          n.rest.insert(n.rest.end(), it.rest.begin() + static_cast<std::ptrdiff_t>(i) + 1, it.rest.end());
          work.push_back(std::move(n));
        }
        split = true;
      } else {
        it.conj.push_back(it.rest[i]);
      }
    }
    if (!split) done.push_back(std::move(it.conj));
  }
  return done;
}

// Solves def for v (which it holds at k = 0 only) and substitutes into eq,
// clearing the denominator c^{p^K}.
LinTerm eliminate(const LinTerm& eq, const std::string& v, const LinTerm& def) {
  auto isV = [&](const Var& w) { return w.name == v; };
  auto [dv, rest] = def.split(isV);
  const Poly c = dv.poly().coeffs(v)[0];
  auto [ev, other] = eq.split(isV);
  const auto& a = ev.poly().coeffs(v);
  const std::uint64_t p = c.field()->p();
  std::vector<std::uint64_t> pk{1};
  while (pk.size() < a.size()) pk.push_back(pk.back() * p);
  const std::uint64_t top = pk.back();
  LinTerm out = other.scale(c.pow(top));
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero()) out += (-rest).frob(static_cast<unsigned>(k)).scale(a[k] * c.pow(top - pk[k]));
  return out;
}

// Block variables occurring in some literal; the others range over a
// nonempty domain and do not matter.
std::vector<Var> mentioned_vars(const std::vector<Var>& vars, const std::vector<FormulaPtr>& lits) {
  std::set<std::string> names;
  for (auto& v : free_vars(f_and(lits))) names.insert(v.name);
  std::vector<Var> out;
  for (auto& v : vars)
    if (names.count(v.name)) out.push_back(v);
  return out;
}

bool vars_within(const LinTerm& t, const std::function<bool(const std::string&)>& known) {
  for (auto& v : t.vars())
    if (!known(v.name)) return false;
  return true;
}

// ---------------------------------------------------------------- over F

class FEval {
 public:
  FEval(FieldPtr F, EvalCaps caps) : F_(std::move(F)), caps_(caps) {}

  Elem constant(const Poly& c) const {
    if (c.deg() > 0) throw DomainError("z occurs in an L_p formula");
    return c.coeff(0);
  }

  Elem term(const LinTerm& t, const FAssignment& env) const {
    Elem acc = constant(t.constant_part());
    for (auto& en : t.poly().entries()) {
      auto it = env.find(en.var.name);
      if (it == env.end()) throw DomainError("unassigned variable " + en.var.name);
      for (unsigned k = 0; k < en.c.size(); ++k) {
        Elem c = constant(en.c[k]);
        if (c) acc = F_->add(acc, F_->mul(c, F_->frob_k(it->second, k)));
      }
    }
    return acc;
  }

  bool eval(const FormulaPtr& f, FAssignment& env) {
    switch (f->kind) {
      case FKind::True:
        return true;
      case FKind::False:
        return false;
      case FKind::Eq:
        return term(f->lhs, env) == term(f->rhs, env);
      case FKind::InF:
        term(f->lhs, env);
        return true;
      case FKind::Pred: {
        std::vector<Elem> args;
        for (auto& a : f->args) args.push_back(term(a, env));
        return sigma(*f->sigma, args);
      }
      case FKind::Not:
        return !eval(f->kids[0], env);
      case FKind::And:
        for (auto& k : f->kids)
          if (!eval(k, env)) return false;
        return true;
      case FKind::Or:
        for (auto& k : f->kids)
          if (eval(k, env)) return true;
        return false;
      case FKind::Implies:
        return !eval(f->kids[0], env) || eval(f->kids[1], env);
      case FKind::Exists:
      case FKind::Forall: {
        std::vector<Var> vars;
        FormulaPtr body = f;
        while (body->kind == f->kind) {
          vars.push_back(body->var);
          body = body->kids[0];
        }
        std::vector<FormulaPtr> lits;
        conjuncts(body, f->kind == FKind::Forall, lits);
        bool found = false;
        for (auto& b : branches(lits))
          if ((found = exists_block(mentioned_vars(vars, b), b, env))) break;
        return f->kind == FKind::Exists ? found : !found;
      }
    }
    return false;
  }

  bool sigma(const Sigma& s, const std::vector<Elem>& args) {
    FAssignment env;
    for (std::size_t i = 0; i < s.params.size(); ++i) env[s.params[i]] = args[i];
    return eval(s.body, env);
  }

 private:
  bool exists_block(const std::vector<Var>& vars, const std::vector<FormulaPtr>& lits, FAssignment& env) {
    const std::uint32_t p = F_->p(), m = F_->m();
    std::map<std::string, std::optional<Elem>> saved;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      auto it = env.find(vars[i].name);
      saved[vars[i].name] = it == env.end() ? std::nullopt : std::optional<Elem>(it->second);
      index[vars[i].name] = i;
    }
    auto restore = [&] {
      for (auto& [n, v] : saved) {
        if (v)
          env[n] = *v;
        else
          env.erase(n);
      }
    };
    for (auto& v : vars) env[v.name] = 0;
    auto known = [&](const std::string& n) { return env.count(n) > 0; };

    const std::size_t n = vars.size() * m;
    LinSys sys(p, n);
    std::vector<bool> used(lits.size(), false);
    for (std::size_t li = 0; li < lits.size(); ++li) {
      const auto& L = lits[li];
      if (L->kind != FKind::Eq) continue;
      LinTerm diff = L->lhs - L->rhs;
      if (!vars_within(diff, known)) continue;
      used[li] = true;
      Elem base = term(diff, env);
      auto bc = F_->coords(base);
      std::vector<std::vector<std::uint32_t>> cols(n);
      for (auto& var : diff.vars()) {
        auto it = index.find(var.name);
        if (it == index.end()) continue;
        for (std::uint32_t c = 0; c < m; ++c) {
          std::vector<std::uint32_t> unit(m, 0);
          unit[c] = 1;
          env[var.name] = F_->from_coords(unit);
          cols[it->second * m + c] = F_->coords(F_->sub(term(diff, env), base));
          env[var.name] = 0;
        }
      }
      for (std::uint32_t r = 0; r < m; ++r) {
        std::vector<std::uint32_t> row(n + 1, 0);
        for (std::size_t j = 0; j < n; ++j)
          if (!cols[j].empty()) row[j] = cols[j][r];
        row[n] = (p - bc[r]) % p;
        sys.add_row(std::move(row));
      }
    }
    if (!sys.solve()) {
      restore();
      return false;
    }
    if (checked_pow(p, sys.num_free(), caps_.maxBranch) > caps_.maxBranch) {
      restore();
      throw ResourceError("quantifier block over F exceeds the branch cap");
    }
    std::vector<std::uint32_t> freeVals(sys.num_free(), 0);
    do {
      auto x = sys.solution(freeVals);
      for (std::size_t i = 0; i < vars.size(); ++i)
        env[vars[i].name] = F_->from_coords(std::vector<std::uint32_t>(x.begin() + i * m, x.begin() + (i + 1) * m));
      bool ok = true;
      for (std::size_t li = 0; li < lits.size() && ok; ++li)
        if (!used[li]) ok = eval(lits[li], env);
      if (ok) {
        restore();
        return true;
      }
    } while (next_tuple(freeVals, p));
    restore();
    return false;
  }

  FieldPtr F_;
  EvalCaps caps_;
};

// ---------------------------------------------------------------- bounded over R

Poly inverse_mod(const Poly& a, const Poly& m) {
  Poly s, t;
  Poly g = ext_gcd(a % m, m, s, t);
  if (g.deg() != 0) throw InvariantError("denominator not invertible modulo the definer coefficient");
  return (s * Poly::constant(a.field(), a.field()->inv(g.coeff(0)))) % m;
}

class REval {
 public:
  REval(const Localization& L, unsigned cap, EvalCaps caps)
      : L_(L), F_(L.field()), cap_(cap), caps_(caps), fe_(L.field(), caps), domain_(bounded_elements(L, cap)) {}

  bool eval(const FormulaPtr& f, Assignment& env) {
    switch (f->kind) {
      case FKind::True:
        return true;
      case FKind::False:
        return false;
      case FKind::Eq:
        return f->lhs.eval(env) == f->rhs.eval(env);
      case FKind::InF:
        return f->lhs.eval(env).is_constant();
      case FKind::Pred: {
        std::vector<Elem> args;
        for (auto& a : f->args) {
          RatFunc v = a.eval(env);
          if (!v.is_constant()) return false;
          args.push_back(v.num().coeff(0));
        }
        return fe_.sigma(*f->sigma, args);
      }
      case FKind::Not:
        return !eval(f->kids[0], env);
      case FKind::And:
        for (auto& k : f->kids)
          if (!eval(k, env)) return false;
        return true;
      case FKind::Or:
        for (auto& k : f->kids)
          if (eval(k, env)) return true;
        return false;
      case FKind::Implies:
        return !eval(f->kids[0], env) || eval(f->kids[1], env);
      case FKind::Exists:
      case FKind::Forall: {
        std::vector<Var> vars;
        FormulaPtr body = f;
        while (body->kind == f->kind) {
          vars.push_back(body->var);
          body = body->kids[0];
        }
        std::vector<FormulaPtr> lits;
        conjuncts(body, f->kind == FKind::Forall, lits);
        bool found = false;
        for (auto& b : branches(lits))
          if ((found = exists_block(mentioned_vars(vars, b), b, env))) break;
        return f->kind == FKind::Exists ? found : !found;
      }
    }
    return false;
  }

 private:
  bool in_domain(const RatFunc& v) const { return v.is_zero() || (L_.contains(v) && height(v) <= static_cast<int>(cap_)); }

  // Adds rows expressing value == 0 (mod == nullptr) or value == 0 mod *mod,
  // where value is affine in the F-unknowns with the given base and columns.
  void add_rows(LinSys& sys, std::size_t n, const RatFunc& base, const std::vector<std::optional<Poly>>& cols,
                const Poly* mod) const {
    const std::uint32_t p = F_->p(), m = F_->m();
    Poly b0(F_);
    std::vector<std::optional<Poly>> c = cols;
    int top = 0;
    if (mod) {
      b0 = (base.num() * inverse_mod(base.den(), *mod)) % *mod;
      for (auto& x : c)
        if (x) x = *x % *mod;
      top = mod->deg() - 1;
    } else {
      b0 = base.num();
      for (auto& x : c)
        if (x) x = *x * base.den();
      top = b0.deg();
      for (auto& x : c)
        if (x) top = std::max(top, x->deg());
    }
    for (int r = 0; r <= top; ++r) {
      auto bc = F_->coords(b0.coeff(static_cast<std::size_t>(r)));
      std::vector<std::vector<std::uint32_t>> cc(n);
      for (std::size_t j = 0; j < n; ++j)
        if (c[j]) cc[j] = F_->coords(c[j]->coeff(static_cast<std::size_t>(r)));
      for (std::uint32_t k = 0; k < m; ++k) {
        std::vector<std::uint32_t> row(n + 1, 0);
        for (std::size_t j = 0; j < n; ++j)
          if (c[j]) row[j] = cc[j][k];
        row[n] = (p - bc[k]) % p;
        sys.add_row(std::move(row));
      }
    }
  }

  bool exists_block(const std::vector<Var>& vars, const std::vector<FormulaPtr>& lits, Assignment& env) {
    const std::uint32_t m = F_->m();
    std::map<std::string, std::optional<RatFunc>> saved;
    for (auto& v : vars) {
      auto it = env.find(v.name);
      saved[v.name] = it == env.end() ? std::nullopt : std::optional<RatFunc>(it->second);
      env.erase(v.name);
    }
    auto restore = [&] {
      for (auto& [n, v] : saved) {
        if (v)
          env[n] = *v;
        else
          env.erase(n);
      }
    };
    std::set<std::string> blockNames;
    std::vector<Var> fvars, rvars;
    for (auto& v : vars) {
      blockNames.insert(v.name);
      (v.sort == Sort::F ? fvars : rvars).push_back(v);
    }
    auto known = [&](const std::string& n) { return env.count(n) || blockNames.count(n); };

    // Pick R-variables that some equation determines linearly and eliminate
    // them from the other equations.
    struct Definer {
      std::size_t lit;
      Var var;
    };
    std::vector<std::optional<LinTerm>> eqs(lits.size());
    for (std::size_t li = 0; li < lits.size(); ++li) {
      const auto& L = lits[li];
      if (L->kind != FKind::Eq) continue;
      LinTerm diff = L->lhs - L->rhs;
      if (vars_within(diff, known)) eqs[li] = diff;
    }
    std::vector<Definer> definers;
    std::set<std::string> chosen;
    for (std::size_t li = 0; li < lits.size(); ++li) {
      if (!eqs[li]) continue;
      const LinTerm& diff = *eqs[li];
      for (auto& v : diff.vars()) {
        if (v.sort != Sort::R || !blockNames.count(v.name) || chosen.count(v.name)) continue;
        if (diff.poly().coeffs(v.name).size() != 1) continue;
        definers.push_back({li, v});
        chosen.insert(v.name);
        for (std::size_t lj = 0; lj < lits.size(); ++lj)
          if (lj != li && eqs[lj] && eqs[lj]->poly().has_var(v.name)) eqs[lj] = eliminate(*eqs[lj], v.name, diff);
        break;
      }
    }
    std::vector<Var> enumR;
    for (auto& v : rvars)
      if (!chosen.count(v.name)) enumR.push_back(v);
    std::map<std::string, std::size_t> findex;
    for (std::size_t i = 0; i < fvars.size(); ++i) findex[fvars[i].name] = i;
    std::map<std::size_t, std::size_t> definerOf;  // literal -> definer
    for (std::size_t d = 0; d < definers.size(); ++d) definerOf[definers[d].lit] = d;

    const std::uint64_t outer = checked_pow(domain_.size(), enumR.size(), caps_.maxBranch);
    if (outer > caps_.maxBranch) {
      restore();
      throw ResourceError("quantifier block over R exceeds the branch cap");
    }
    std::vector<std::uint32_t> ridx(enumR.size(), 0);
    const std::size_t n = fvars.size() * m;
    std::uint64_t work = 0;
    for (;;) {
      for (std::size_t i = 0; i < enumR.size(); ++i) env[enumR[i].name] = domain_[ridx[i]];
      for (auto& v : fvars) env[v.name] = RatFunc(F_);
      auto isKnown = [&](const std::string& nm) { return env.count(nm) > 0; };
      LinSys sys(F_->p(), n);
      std::vector<bool> used(lits.size(), false);
      for (std::size_t li = 0; li < lits.size(); ++li) {
        if (!eqs[li]) continue;
        LinTerm diff = *eqs[li];
        const Poly* mod = nullptr;
        Poly modPoly;
        auto dit = definerOf.find(li);
        if (dit != definerOf.end()) {
          const Definer& d = definers[dit->second];
          modPoly = L_.strip_S(diff.poly().coeffs(d.var.name)[0]);
          if (modPoly.deg() <= 0) continue;
          modPoly = modPoly.monic();
          mod = &modPoly;
          diff = diff.split([&](const Var& v) { return v.name == d.var.name; }).second;
        }
        if (!vars_within(diff, isKnown)) continue;
        if (!mod) used[li] = true;
        RatFunc base = diff.eval(env);
        std::vector<std::optional<Poly>> cols(n);
        for (auto& var : diff.vars()) {
          auto it = findex.find(var.name);
          if (it == findex.end()) continue;
          for (std::uint32_t c = 0; c < m; ++c) {
            std::vector<std::uint32_t> unit(m, 0);
            unit[c] = 1;
            env[var.name] = RatFunc::constant(F_, F_->from_coords(unit));
            RatFunc col = diff.eval(env) - base;
            env[var.name] = RatFunc(F_);
            if (!col.is_poly()) throw InvariantError("F-linear column is not a polynomial");
            cols[it->second * m + c] = col.num();
          }
        }
        add_rows(sys, n, base, cols, mod);
      }
      if (sys.solve()) {
        work += checked_pow(F_->p(), sys.num_free(), caps_.maxBranch);
        if (work > caps_.maxBranch) {
          restore();
          throw ResourceError("quantifier block exceeds the branch cap");
        }
        std::vector<std::uint32_t> freeVals(sys.num_free(), 0);
        do {
          auto x = sys.solution(freeVals);
          for (std::size_t i = 0; i < fvars.size(); ++i)
            env[fvars[i].name] = RatFunc::constant(
                F_, F_->from_coords(std::vector<std::uint32_t>(x.begin() + i * m, x.begin() + (i + 1) * m)));
          bool ok = true;
          // Each definer equation mentions no other definer.
          for (auto& d : definers) {
            const LinTerm& diff = *eqs[d.lit];
            LinTerm rest = diff.split([&](const Var& v) { return v.name == d.var.name; }).second;
            RatFunc val = -rest.eval(env) / RatFunc(diff.poly().coeffs(d.var.name)[0]);
            if (!in_domain(val)) {
              ok = false;
              break;
            }
            env[d.var.name] = val;
          }
          for (std::size_t li = 0; li < lits.size() && ok; ++li)
            if (!used[li]) ok = eval(lits[li], env);
          for (auto& d : definers) env.erase(d.var.name);
          if (ok) {
            restore();
            return true;
          }
        } while (next_tuple(freeVals, F_->p()));
      }
      bool more = false;
      for (auto& x : ridx) {
        if (++x < domain_.size()) {
          more = true;
          break;
        }
        x = 0;
      }
      if (!more) break;
    }
    restore();
    return false;
  }

  const Localization& L_;
  FieldPtr F_;
  unsigned cap_;
  EvalCaps caps_;
  FEval fe_;
  std::vector<RatFunc> domain_;
};

std::vector<Poly> s_products(const Localization& L, unsigned cap) {
  std::vector<Poly> out{Poly::constant(L.field(), 1)};
  for (auto& Q : L.S()) {
    std::vector<Poly> next;
    for (auto& b : out)
      for (Poly c = b; c.deg() <= static_cast<int>(cap); c *= Q) next.push_back(c);
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<RatFunc> bounded_elements(const Localization& L, unsigned cap) {
  static std::mutex mu;
  static std::map<std::string, std::vector<RatFunc>> cache;
  const FieldPtr& F = L.field();
  std::string key = F->spec_string() + "|" + L.str() + "|" + std::to_string(cap);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const std::uint64_t count = checked_pow(F->size(), cap + 1, 1ull << 22);
  if (count > (1ull << 22)) throw ResourceError("bounded domain too large");
  auto dens = s_products(L, cap);
  auto elems = F->elements();
  std::vector<RatFunc> out;
  std::vector<std::uint32_t> idx(cap + 1, 0);
  do {
    std::vector<Elem> c(cap + 1);
    for (unsigned i = 0; i <= cap; ++i) c[i] = elems[idx[i]];
    Poly a(F, c);
    for (auto& d : dens) {
      RatFunc x(a, d);
      if (x.is_zero() || height(x) <= static_cast<int>(cap)) out.push_back(x);
    }
  } while (next_tuple(idx, F->size()));
  std::sort(out.begin(), out.end(), ratfunc_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  cache[key] = out;
  return out;
}

bool eval_sigma_over_F(const FormulaPtr& sigma, const FAssignment& a, const FieldPtr& F, const EvalCaps& caps) {
  FEval ev(F, caps);
  FAssignment env = a;
  return ev.eval(sigma, env);
}

bool eval_sigma_over_F(const Sigma& sigma, const std::vector<Elem>& args, const FieldPtr& F, const EvalCaps& caps) {
  if (args.size() != sigma.params.size()) throw DomainError("predicate arity mismatch");
  FEval ev(F, caps);
  return ev.sigma(sigma, args);
}

bool eval_bounded_over_R(const FormulaPtr& phi, const Assignment& a, unsigned heightCap, const Localization& L,
                         const EvalCaps& caps) {
  REval ev(L, heightCap, caps);
  Assignment env = a;
  return ev.eval(phi, env);
}

}  // namespace frobq
