#include "frobq/normalize.hpp"

#include <algorithm>

#include "frobq/errors.hpp"
#include "frobq/independence.hpp"

namespace frobq {

void NameSupply::reserve(const AdditivePoly& f) {
  for (auto& v : f.vars()) used_.insert(v.name);
}

std::string NameSupply::fresh(const std::string& prefix) {
  for (std::size_t i = 1;; ++i) {
    std::string n = prefix + std::to_string(i);
    if (used_.insert(n).second) return n;
  }
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void require_r_sorted(const AdditivePoly& f, const char* what) {
  for (auto& v : f.vars())
    if (v.sort != Sort::R) throw DomainError(std::string(what) + " expects R-sorted variables only");
}

std::vector<Var> r_vars(const AdditivePoly& f) { return f.restrict_sort(Sort::R).vars(); }

// Checks f o xi == fTilde + G.
void check_identity(const AdditivePoly& f, const NormalizationResult& r, const char* stage) {
  if (f.substitute(r.xi.as_substitution()) != r.fTilde + r.G)
    throw InvariantError(std::string(stage) + ": f o xi differs from fTilde + G");
}

struct BElem {
  std::size_t var;
  std::uint64_t j;
};

// B and its index map.
std::vector<RatFunc> build_B(const AdditivePoly& f, const std::vector<Var>& vars, std::vector<BElem>& idx) {
  const FieldPtr& F = f.field();
  const unsigned s = f.s();
  std::vector<RatFunc> B;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    unsigned si = f.s_of(vars[i].name);
    std::uint64_t step = ipow(F->p(), si), count = ipow(F->p(), s - si);
    for (std::uint64_t j = 0; j < count; ++j) {
      B.push_back(RatFunc(f.leading(vars[i].name).shift(static_cast<std::size_t>(j * step))));
      idx.push_back({i, j});
    }
  }
  return B;
}

std::uint64_t degree_sum(const AdditivePoly& f) {
  std::uint64_t d = 0;
  for (auto& v : f.vars()) d += ipow(f.field()->p(), f.s_of(v.name));
  return d;
}

}  // namespace

bool is_p_free(const AdditivePoly& f) {
  auto vars = r_vars(f);
  if (vars.empty()) return true;
  AdditivePoly r = f.restrict_sort(Sort::R);
  std::vector<BElem> idx;
  auto B = build_B(r, vars, idx);
  if (B.size() > ipow(f.field()->p(), r.s())) return false;
  return rank_oracle(B, r.s()) == B.size();
}

NormalizationResult eliminate_dependence(const AdditivePoly& f, const Localization& L, NameSupply& names) {
  require_r_sorted(f, "eliminate_dependence");
  names.reserve(f);
  const FieldPtr& F = L.field();
  NormalizationResult res{ProperTransformation::identity(F, f.vars()), f, AdditivePoly(F)};
  while (true) {
    AdditivePoly cur = res.fTilde;
    auto vars = cur.vars();
    if (vars.empty()) break;
    const unsigned s = cur.s();
    std::vector<BElem> idx;
    auto B = build_B(cur, vars, idx);
    auto dep = dependency_oracle(B, s);
    if (!dep) break;
    // c_{i,j} with c_{i,j}^{p^s} = lambda_{i,j}(z^{p^s}).
    std::vector<Poly> cij;
    for (auto& lam : *dep) cij.push_back(lam.map_coeffs_frob(-static_cast<long long>(s)));
    // Pivot: a variable with a nonzero c_{i,j} and maximal s_i, lowest position on ties.
    std::size_t piv = vars.size();
    for (std::size_t t = 0; t < idx.size(); ++t) {
      if (cij[t].is_zero()) continue;
      std::size_t i = idx[t].var;
      if (piv == vars.size() || cur.s_of(vars[i].name) > cur.s_of(vars[piv].name) ||
          (cur.s_of(vars[i].name) == cur.s_of(vars[piv].name) && i < piv))
        piv = i;
    }
    const unsigned s1 = cur.s_of(vars[piv].name);
    // c = sum_mu c_{1,mu}^{p^{s-s1}} z^mu, and the shifts for the other variables.
    Poly c(F);
    std::vector<Poly> shift(vars.size(), Poly(F));
    for (std::size_t t = 0; t < idx.size(); ++t) {
      if (cij[t].is_zero()) continue;
      std::size_t i = idx[t].var;
      unsigned si = cur.s_of(vars[i].name);
      Poly term = cij[t].frob_pow(s - si).shift(static_cast<std::size_t>(idx[t].j));
      if (i == piv) c += term;
      else shift[i] += term;
    }
    if (c.is_zero()) throw InvariantError("eliminate_dependence: pivot multiplier vanished");
    const int ell = c.deg();
    std::vector<Var> alphas;
    for (int k = 0; k < ell; ++k) alphas.push_back(Var{names.fresh("a"), Sort::F});
    std::vector<AdditivePoly> comps;
    const std::string y1 = vars[piv].name;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      AdditivePoly comp(F);
      if (i == piv) {
        comp.add_term(vars[i], 0, c);
        for (int k = 0; k < ell; ++k) comp.add_term(alphas[static_cast<std::size_t>(k)], 0, Poly::monomial(F, 1, static_cast<std::size_t>(k)));
      } else {
        comp.add_term(vars[i], 0, Poly::constant(F, 1));
        if (!shift[i].is_zero()) comp.add_term(vars[piv], s1 - cur.s_of(vars[i].name), shift[i]);
      }
      comps.push_back(comp);
    }
    std::vector<Var> domain = vars;
    domain.insert(domain.end(), alphas.begin(), alphas.end());
    std::vector<unsigned> sdiff;
    for (auto& v : vars) sdiff.push_back(s1 - std::min(s1, cur.s_of(v.name)));
    auto witness = [vars, piv, c, shift, alphas, sdiff, L](const std::vector<RatFunc>& X) {
      const FieldPtr& F = L.field();
      Assignment a;
      RatFunc y1v;
      if (c.deg() == 0) {
        y1v = X[piv] / RatFunc(c);
      } else {
        auto d = divide_with_remainder(X[piv], c, L);
        y1v = d.v;
        for (std::size_t k = 0; k < alphas.size(); ++k) a[alphas[k].name] = RatFunc::constant(F, d.r.coeff(k));
      }
      a[vars[piv].name] = y1v;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i == piv) continue;
        RatFunc v = X[i];
        if (!shift[i].is_zero()) v -= RatFunc(shift[i]) * y1v.frob_pow(sdiff[i]);
        a[vars[i].name] = v;
      }
      return a;
    };
    auto step = ProperTransformation::step(vars, comps, domain, witness);
    AdditivePoly next = cur.substitute(step.as_substitution());
    AdditivePoly nextR = next.restrict_sort(Sort::R);
    if (degree_sum(nextR) >= degree_sum(cur)) throw InvariantError("eliminate_dependence: degree sum did not decrease");
    if (nextR.has_var(y1) && nextR.s_of(y1) >= s1) throw InvariantError("eliminate_dependence: pivot degree did not drop");
    res.xi = res.xi.after(step);
    res.fTilde = nextR;
    res.G += next.restrict_sort(Sort::F);
  }
  check_identity(f, res, "eliminate_dependence");
  return res;
}

NormalizationResult equalize_degrees(const AdditivePoly& f, const Localization& L, NameSupply& names) {
  require_r_sorted(f, "equalize_degrees");
  if (!is_p_free(f)) throw DomainError("equalize_degrees expects a p-free polynomial");
  names.reserve(f);
  const FieldPtr& F = L.field();
  const unsigned s = f.s();
  auto vars = f.vars();
  std::vector<AdditivePoly> comps;
  std::vector<Var> domain;
  std::vector<std::vector<std::string>> parts(vars.size());
  std::vector<unsigned> splits(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    unsigned d = s - f.s_of(vars[i].name);
    splits[i] = d;
    if (d == 0) {
      comps.push_back(AdditivePoly::variable(F, vars[i]));
      domain.push_back(vars[i]);
      parts[i].push_back(vars[i].name);
      continue;
    }
    AdditivePoly comp(F);
    std::uint64_t cnt = ipow(F->p(), d);
    for (std::uint64_t k = 0; k < cnt; ++k) {
      Var v{names.fresh(vars[i].name + "_"), Sort::R};
      comp.add_term(v, d, Poly::monomial(F, 1, static_cast<std::size_t>(k)));
      domain.push_back(v);
      parts[i].push_back(v.name);
    }
    comps.push_back(comp);
  }
  auto witness = [parts, splits](const std::vector<RatFunc>& X) {
    Assignment a;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (splits[i] == 0) {
        a[parts[i][0]] = X[i];
        continue;
      }
      auto q = q_power_decomposition(X[i], splits[i]);
      for (std::size_t k = 0; k < parts[i].size(); ++k) a[parts[i][k]] = q[k];
    }
    return a;
  };
  NormalizationResult res{ProperTransformation::step(vars, comps, domain, witness), AdditivePoly(F), AdditivePoly(F)};
  res.fTilde = f.substitute(res.xi.as_substitution());
  check_identity(f, res, "equalize_degrees");
  if (!classify(res.fTilde).normalized) throw InvariantError("equalize_degrees: result is not normalized");
  return res;
}

NormalizationResult strongly_normalize(const AdditivePoly& f, const Localization& L, NameSupply& names) {
  require_r_sorted(f, "strongly_normalize");
  if (!classify(f).normalized) throw DomainError("strongly_normalize expects a normalized polynomial");
  names.reserve(f);
  const FieldPtr& F = L.field();
  NormalizationResult res{ProperTransformation::identity(F, f.vars()), f, AdditivePoly(F)};
  const std::uint64_t q = f.degree();
  while (true) {
    const AdditivePoly& cur = res.fTilde;
    auto vars = cur.vars();
    std::size_t lo = vars.size(), hi = vars.size();
    for (std::size_t a = 0; a < vars.size() && lo == vars.size(); ++a)
      for (std::size_t b = a + 1; b < vars.size(); ++b) {
        int da = cur.leading(vars[a].name).deg(), db = cur.leading(vars[b].name).deg();
        if (static_cast<std::uint64_t>(da) % q != static_cast<std::uint64_t>(db) % q) continue;
        lo = da <= db ? a : b;
        hi = da <= db ? b : a;
        break;
      }
    if (lo == vars.size()) break;
    const Poly& bl = cur.leading(vars[lo].name);
    const Poly& bh = cur.leading(vars[hi].name);
    std::size_t k = static_cast<std::size_t>(static_cast<std::uint64_t>(bh.deg() - bl.deg()) / q);
    Elem lambda = F->neg(F->div(bh.lc(), bl.lc()));
    Poly mult = Poly::monomial(F, lambda, k);
    std::vector<AdditivePoly> comps;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      AdditivePoly comp = AdditivePoly::variable(F, vars[i]);
      if (i == lo) comp.add_term(vars[hi], 0, mult);
      comps.push_back(comp);
    }
    auto witness = [vars, lo, hi, mult](const std::vector<RatFunc>& X) {
      Assignment a;
      for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i].name] = X[i];
      a[vars[lo].name] = X[lo] - RatFunc(mult) * X[hi];
      return a;
    };
    auto step = ProperTransformation::step(vars, comps, vars, witness);
    AdditivePoly next = cur.substitute(step.as_substitution());
    int before = bh.deg();
    if (!next.has_var(vars[hi].name) || next.s_of(vars[hi].name) != cur.s() || next.leading(vars[hi].name).deg() >= before)
      throw InvariantError("strongly_normalize: leading degree did not drop");
    res.xi = res.xi.after(step);
    res.fTilde = next;
  }
  check_identity(f, res, "strongly_normalize");
  auto cls = classify(res.fTilde);
  if (!cls.strongly_normalized) throw InvariantError("strongly_normalize: result is not strongly normalized");
  return res;
}

AdditivePoly p_basic_completion(const AdditivePoly& f, NameSupply& names) {
  auto cls = classify(f);
  if (!cls.strongly_normalized) throw DomainError("p_basic_completion expects a strongly normalized polynomial");
  names.reserve(f);
  const FieldPtr& F = f.field();
  AdditivePoly r = f.restrict_sort(Sort::R);
  const std::uint64_t q = r.degree();
  std::vector<bool> seen(q, false);
  for (auto& v : r.vars()) seen[static_cast<std::uint64_t>(r.leading(v.name).deg()) % q] = true;
  AdditivePoly h(F);
  for (std::uint64_t res = 0; res < q; ++res)
    if (!seen[res]) h.add_term(Var{names.fresh("v"), Sort::R}, r.s(), Poly::monomial(F, 1, static_cast<std::size_t>(res)));
  return h;
}

NormalizationResult normalize_full(const AdditivePoly& f, const Localization& L) {
  NameSupply names(f);
  return normalize_full(f, L, names);
}

NormalizationResult normalize_full(const AdditivePoly& f, const Localization& L, NameSupply& names) {
  names.reserve(f);
  const FieldPtr& F = L.field();
  AdditivePoly fr = f.restrict_sort(Sort::R);
  auto r1 = eliminate_dependence(fr, L, names);
  auto r2 = equalize_degrees(r1.fTilde, L, names);
  auto r3 = strongly_normalize(r2.fTilde, L, names);
  NormalizationResult res{r1.xi.after(r2.xi).after(r3.xi), r3.fTilde, f.restrict_sort(Sort::F) + r1.G + r2.G + r3.G};
  if (fr.vars().empty()) res.xi = ProperTransformation::identity(F, {});
  check_identity(f, res, "normalize_full");
  return res;
}

}  // namespace frobq
