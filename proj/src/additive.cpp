#include "frobq/additive.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "frobq/errors.hpp"
#include "frobq/independence.hpp"

namespace frobq {

bool var_name_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i])), db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      unsigned long long x = std::stoull(a.substr(i, i2 - i)), y = std::stoull(b.substr(j, j2 - j));
      if (x != y) return x < y;
      i = i2;
      j = j2;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  return a.size() - i < b.size() - j;
}

namespace {

void trim(std::vector<Poly>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

const std::vector<Poly>& empty_coeffs() {
  static const std::vector<Poly> e;
  return e;
}

}  // namespace

AdditivePoly AdditivePoly::term(const FieldPtr& F, const Var& v, const Poly& coeff, unsigned k) {
  AdditivePoly f(F);
  f.add_term(v, k, coeff);
  return f;
}

const AdditivePoly::Entry* AdditivePoly::find(const std::string& name) const {
  for (auto& e : e_)
    if (e.var.name == name) return &e;
  return nullptr;
}

std::vector<Var> AdditivePoly::vars() const {
  std::vector<Var> out;
  for (auto& e : e_) out.push_back(e.var);
  return out;
}

const std::vector<Poly>& AdditivePoly::coeffs(const std::string& name) const {
  const Entry* e = find(name);
  return e ? e->c : empty_coeffs();
}

unsigned AdditivePoly::s_of(const std::string& name) const {
  const Entry* e = find(name);
  if (!e) throw DomainError("variable " + name + " does not occur");
  return static_cast<unsigned>(e->c.size() - 1);
}

const Poly& AdditivePoly::leading(const std::string& name) const {
  const Entry* e = find(name);
  if (!e) throw DomainError("variable " + name + " does not occur");
  return e->c.back();
}

unsigned AdditivePoly::s() const {
  unsigned s = 0;
  for (auto& e : e_) s = std::max(s, static_cast<unsigned>(e.c.size() - 1));
  return s;
}

std::uint64_t AdditivePoly::degree() const {
  std::uint64_t d = 1;
  for (unsigned i = 0; i < s(); ++i) d *= F_->p();
  return d;
}

void AdditivePoly::add_term(const Var& v, unsigned k, const Poly& coeff) {
  if (coeff.is_zero()) return;
  if (!F_) F_ = coeff.field();
  if (!coeff.over_prime_field()) throw DomainError("additive polynomial coefficients must lie in F_p[z]");
  for (auto it = e_.begin(); it != e_.end(); ++it) {
    if (it->var.name != v.name) continue;
    if (it->var.sort != v.sort) throw DomainError("variable " + v.name + " used with two sorts");
    if (it->c.size() <= k) it->c.resize(k + 1, Poly(F_));
    it->c[k] += coeff;
    trim(it->c);
    if (it->c.empty()) e_.erase(it);
    return;
  }
  Entry e{v, std::vector<Poly>(k + 1, Poly(F_))};
  e.c[k] = coeff;
  e_.push_back(std::move(e));
}

AdditivePoly AdditivePoly::operator+(const AdditivePoly& o) const {
  AdditivePoly r = *this;
  if (!r.F_) r.F_ = o.F_;
  for (auto& e : o.e_)
    for (std::size_t k = 0; k < e.c.size(); ++k) r.add_term(e.var, static_cast<unsigned>(k), e.c[k]);
  return r;
}

AdditivePoly AdditivePoly::operator-() const {
  AdditivePoly r = *this;
  for (auto& e : r.e_)
    for (auto& c : e.c) c = -c;
  return r;
}

AdditivePoly AdditivePoly::operator-(const AdditivePoly& o) const { return *this + (-o); }

AdditivePoly AdditivePoly::scale(const Poly& c) const {
  AdditivePoly r(F_ ? F_ : c.field());
  for (auto& e : e_)
    for (std::size_t k = 0; k < e.c.size(); ++k) r.add_term(e.var, static_cast<unsigned>(k), e.c[k] * c);
  return r;
}

AdditivePoly AdditivePoly::frob_twist(unsigned k) const {
  AdditivePoly r(F_);
  for (auto& e : e_)
    for (std::size_t i = 0; i < e.c.size(); ++i) r.add_term(e.var, static_cast<unsigned>(i) + k, e.c[i].frob_pow(k));
  return r;
}

AdditivePoly AdditivePoly::substitute(const std::map<std::string, AdditivePoly>& sub) const {
  AdditivePoly r(F_);
  for (auto& e : e_) {
    auto it = sub.find(e.var.name);
    if (it == sub.end()) {
      for (std::size_t k = 0; k < e.c.size(); ++k) r.add_term(e.var, static_cast<unsigned>(k), e.c[k]);
      continue;
    }
    for (std::size_t k = 0; k < e.c.size(); ++k)
      if (!e.c[k].is_zero()) r += it->second.frob_twist(static_cast<unsigned>(k)).scale(e.c[k]);
  }
  return r;
}

AdditivePoly AdditivePoly::restrict_sort(Sort s) const {
  AdditivePoly r(F_);
  for (auto& e : e_)
    if (e.var.sort == s) r.e_.push_back(e);
  return r;
}

AdditivePoly AdditivePoly::rename(const std::map<std::string, std::string>& names) const {
  AdditivePoly r(F_);
  for (auto& e : e_) {
    Var v = e.var;
    auto it = names.find(v.name);
    if (it != names.end()) v.name = it->second;
    for (std::size_t k = 0; k < e.c.size(); ++k) r.add_term(v, static_cast<unsigned>(k), e.c[k]);
  }
  return r;
}

RatFunc AdditivePoly::eval(const Assignment& a) const {
  RatFunc acc(F_);
  for (auto& e : e_) {
    auto it = a.find(e.var.name);
    if (it == a.end()) throw DomainError("no value for variable " + e.var.name);
    if (e.var.sort == Sort::F && !it->second.is_constant())
      throw DomainError("F-variable " + e.var.name + " needs a constant value");
    RatFunc x = it->second;
    for (std::size_t k = 0; k < e.c.size(); ++k) {
      if (!e.c[k].is_zero()) acc += RatFunc(e.c[k]) * x;
      if (k + 1 < e.c.size()) x = x.frob_pow(1);
    }
  }
  return acc;
}

bool AdditivePoly::operator==(const AdditivePoly& o) const {
  if (e_.size() != o.e_.size()) return false;
  for (auto& e : e_) {
    const Entry* x = o.find(e.var.name);
    if (!x || x->var.sort != e.var.sort || x->c != e.c) return false;
  }
  return true;
}

std::string AdditivePoly::str() const {
  if (e_.empty()) return "0";
  std::string out;
  for (auto& e : e_) {
    for (std::size_t k = e.c.size(); k-- > 0;) {
      const Poly& c = e.c[k];
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      if (!c.is_one()) out += c.is_constant() ? c.str() + "*" : "poly{" + c.str() + "}*";
      out += e.var.name;
      if (k > 0) {
        std::uint64_t d = 1;
        for (std::size_t i = 0; i < k; ++i) d *= F_->p();
        out += "^" + std::to_string(d);
      }
    }
  }
  return out;
}

AdditivePoly AdditivePoly::parse(const std::string& text, const FieldPtr& F) {
  AdditivePoly f(F);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& msg) -> void { throw ParseError(msg, i); };
  skip();
  if (text.substr(i) == "0") return f;
  bool first = true;
  while (true) {
    skip();
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (first && text[i] == '+') fail("unexpected '+'");
      neg = text[i] == '-';
      ++i;
      skip();
    } else if (!first) {
      if (i >= text.size()) break;
      fail("expected '+' or '-'");
    }
    first = false;
    Poly coeff = Poly::constant(F, 1);
    bool have_coeff = false;
    if (text.compare(i, 5, "poly{") == 0) {
      std::size_t close = text.find('}', i);
      if (close == std::string::npos) fail("unterminated poly{");
      coeff = parse_poly(text.substr(i + 5, close - i - 5), F);
      if (!coeff.over_prime_field()) fail("coefficient outside F_p[z]");
      i = close + 1;
      have_coeff = true;
    } else if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      coeff = Poly::constant(F, F->from_int(std::stoll(text.substr(i, j - i))));
      i = j;
      have_coeff = true;
    }
    if (have_coeff) {
      skip();
      if (i >= text.size() || text[i] != '*') fail("expected '*' after coefficient");
      ++i;
      skip();
    }
    std::size_t j = i;
    if (j >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[j])) || text[j] == '_')) fail("expected variable");
    while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
    std::string name = text.substr(i, j - i);
    if (name == "poly" || name == "z" || name == "t") fail("reserved name '" + name + "'");
    i = j;
    skip();
    unsigned k = 0;
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip();
      std::size_t d = i;
      while (d < text.size() && std::isdigit(static_cast<unsigned char>(text[d]))) ++d;
      if (d == i) fail("expected exponent");
      unsigned long long e = std::stoull(text.substr(i, d - i));
      unsigned long long pk = 1;
      while (pk < e) {
        pk *= F->p();
        ++k;
      }
      if (pk != e) fail("exponent " + std::to_string(e) + " is not a power of p");
      i = d;
    }
    Var v{name, name[0] == 'a' ? Sort::F : Sort::R};
    f.add_term(v, k, neg ? -coeff : coeff);
    skip();
    if (i >= text.size()) break;
  }
  return f;
}

RatFunc BoundedTerm::eval(const Assignment& a) const {
  return G.eval(a) / RatFunc(e.pow(N));
}

Classification classify(const AdditivePoly& f) {
  Classification c;
  AdditivePoly r = f.restrict_sort(Sort::R);
  auto vars = r.vars();
  c.n = vars.size();
  c.s = r.s();
  c.all_same_s = std::all_of(vars.begin(), vars.end(), [&](const Var& v) { return r.s_of(v.name) == c.s; });
  if (!c.all_same_s) return c;
  if (vars.empty()) {
    c.normalized = true;
    c.strongly_normalized = true;
    return c;
  }
  std::vector<RatFunc> b;
  for (auto& v : vars) b.push_back(RatFunc(r.leading(v.name)));
  c.normalized = rank_oracle(b, c.s) == b.size();
  if (!c.normalized) return c;
  std::uint64_t q = r.degree();
  c.p_basic = c.n == q;
  std::set<std::uint64_t> residues;
  for (auto& x : b) residues.insert(static_cast<std::uint64_t>(x.num().deg()) % q);
  c.strongly_normalized = residues.size() == b.size();
  return c;
}

ProperTransformation ProperTransformation::step(std::vector<Var> targets, std::vector<AdditivePoly> components,
                                                std::vector<Var> domain, Witness witness) {
  if (targets.size() != components.size()) throw DomainError("transformation arity mismatch");
  if (!witness) throw DomainError("proper transformation without a witness");
  ProperTransformation t;
  t.targets_ = std::move(targets);
  t.comps_ = std::move(components);
  t.domain_ = std::move(domain);
  t.witness_ = std::move(witness);
  return t;
}

ProperTransformation ProperTransformation::identity(const FieldPtr& F, const std::vector<Var>& vars) {
  std::vector<AdditivePoly> comps;
  for (auto& v : vars) comps.push_back(AdditivePoly::variable(F, v));
  std::vector<std::string> names;
  for (auto& v : vars) names.push_back(v.name);
  return step(vars, comps, vars, [names](const std::vector<RatFunc>& target) {
    Assignment a;
    for (std::size_t i = 0; i < names.size(); ++i) a[names[i]] = target[i];
    return a;
  });
}

std::map<std::string, AdditivePoly> ProperTransformation::as_substitution() const {
  std::map<std::string, AdditivePoly> m;
  for (std::size_t i = 0; i < targets_.size(); ++i) m[targets_[i].name] = comps_[i];
  return m;
}

std::vector<RatFunc> ProperTransformation::apply(const Assignment& point) const {
  std::vector<RatFunc> out;
  for (auto& c : comps_) out.push_back(c.eval(point));
  return out;
}

Assignment ProperTransformation::preimage(const std::vector<RatFunc>& target) const {
  if (target.size() != targets_.size()) throw DomainError("target has the wrong length");
  Assignment a = witness_(target);
  for (auto& v : domain_) {
    auto it = a.find(v.name);
    if (it == a.end()) throw InvariantError("witness left " + v.name + " unassigned");
    if (v.sort == Sort::F && !it->second.is_constant()) throw InvariantError("witness gave F-variable " + v.name + " a non-constant value");
  }
  auto back = apply(a);
  for (std::size_t i = 0; i < back.size(); ++i)
    if (back[i] != target[i]) throw InvariantError("witness does not map back onto the target");
  return a;
}

ProperTransformation ProperTransformation::after(const ProperTransformation& inner) const {
  std::set<std::string> inner_targets;
  for (auto& v : inner.targets_) inner_targets.insert(v.name);
  for (auto& v : inner.targets_) {
    bool found = std::any_of(domain_.begin(), domain_.end(), [&](const Var& d) { return d == v; });
    if (!found) throw DomainError("inner target " + v.name + " is not in the domain");
  }
  auto sub = inner.as_substitution();
  std::vector<AdditivePoly> comps;
  for (auto& c : comps_) comps.push_back(c.substitute(sub));
  std::vector<Var> domain;
  std::set<std::string> seen;
  for (auto& v : domain_)
    if (!inner_targets.count(v.name) && seen.insert(v.name).second) domain.push_back(v);
  for (auto& v : inner.domain_)
    if (seen.insert(v.name).second) domain.push_back(v);
  ProperTransformation outer = *this;
  ProperTransformation in = inner;
  return step(targets_, comps, domain, [outer, in](const std::vector<RatFunc>& target) {
    Assignment mid = outer.preimage(target);
    std::vector<RatFunc> t;
    for (auto& v : in.targets_) t.push_back(mid.at(v.name));
    Assignment low = in.preimage(t);
    for (auto& [k, v] : mid)
      if (!low.count(k)) low[k] = v;
    for (auto& v : in.targets_)
      if (!std::any_of(in.domain_.begin(), in.domain_.end(), [&](const Var& d) { return d.name == v.name; }))
        low.erase(v.name);
    return low;
  });
}

}  // namespace frobq
