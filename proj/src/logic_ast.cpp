#include <algorithm>
#include <cctype>

#include "frobq/errors.hpp"
#include "frobq/logic.hpp"

namespace frobq {

LinTerm LinTerm::substitute(const std::map<std::string, LinTerm>& sub) const {
  LinTerm out = LinTerm::constant(c_);
  for (auto& en : poly_.entries()) {
    auto it = sub.find(en.var.name);
    for (unsigned k = 0; k < en.c.size(); ++k) {
      if (en.c[k].is_zero()) continue;
      if (it == sub.end())
        out.poly_.add_term(en.var, k, en.c[k]);
      else
        out += it->second.frob(k).scale(en.c[k]);
    }
  }
  return out;
}

std::pair<LinTerm, LinTerm> LinTerm::split(const std::function<bool(const Var&)>& pick) const {
  const FieldPtr& F = field();
  LinTerm a(F), b = LinTerm::constant(c_);
  for (auto& en : poly_.entries())
    for (unsigned k = 0; k < en.c.size(); ++k)
      if (!en.c[k].is_zero()) (pick(en.var) ? a : b).poly_.add_term(en.var, k, en.c[k]);
  return {a, b};
}

// ---------------------------------------------------------------- builders

namespace {

FormulaPtr node(FKind k) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  return f;
}

}  // namespace

FormulaPtr f_true() {
  static FormulaPtr t = node(FKind::True);
  return t;
}

FormulaPtr f_false() {
  static FormulaPtr t = node(FKind::False);
  return t;
}

FormulaPtr f_eq(const LinTerm& a, const LinTerm& b) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Eq;
  f->lhs = a;
  f->rhs = b;
  return f;
}

FormulaPtr f_neq(const LinTerm& a, const LinTerm& b) { return f_not(f_eq(a, b)); }

FormulaPtr f_inF(const LinTerm& t) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::InF;
  f->lhs = t;
  return f;
}

FormulaPtr f_pred(SigmaPtr s, std::vector<LinTerm> args) {
  if (s->params.size() != args.size()) throw DomainError("predicate arity mismatch");
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Pred;
  f->sigma = std::move(s);
  f->args = std::move(args);
  return f;
}

FormulaPtr f_not(FormulaPtr a) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Not;
  f->kids.push_back(std::move(a));
  return f;
}

FormulaPtr f_and(std::vector<FormulaPtr> kids) {
  if (kids.empty()) return f_true();
  if (kids.size() == 1) return kids[0];
  auto f = std::make_shared<Formula>();
  f->kind = FKind::And;
  f->kids = std::move(kids);
  return f;
}

FormulaPtr f_or(std::vector<FormulaPtr> kids) {
  if (kids.empty()) return f_false();
  if (kids.size() == 1) return kids[0];
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Or;
  f->kids = std::move(kids);
  return f;
}

FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Implies;
  f->kids = {std::move(a), std::move(b)};
  return f;
}

namespace {

FormulaPtr quant(FKind k, const std::vector<Var>& vars, FormulaPtr body) {
  for (std::size_t i = vars.size(); i-- > 0;) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->var = vars[i];
    f->kids.push_back(std::move(body));
    body = f;
  }
  return body;
}

}  // namespace

FormulaPtr f_exists(const std::vector<Var>& vars, FormulaPtr body) { return quant(FKind::Exists, vars, std::move(body)); }
FormulaPtr f_forall(const std::vector<Var>& vars, FormulaPtr body) { return quant(FKind::Forall, vars, std::move(body)); }

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->kids.size() != b->kids.size()) return false;
  switch (a->kind) {
    case FKind::Eq:
      if (a->lhs != b->lhs || a->rhs != b->rhs) return false;
      break;
    case FKind::InF:
      if (a->lhs != b->lhs) return false;
      break;
    case FKind::Pred:
      if (a->args != b->args || a->sigma->params != b->sigma->params ||
          !formula_equal(a->sigma->body, b->sigma->body))
        return false;
      break;
    case FKind::Exists:
    case FKind::Forall:
      if (a->var != b->var) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!formula_equal(a->kids[i], b->kids[i])) return false;
  return true;
}

namespace {

void collect_free(const FormulaPtr& f, std::set<std::string>& bound, std::map<std::string, Var>& out) {
  auto term = [&](const LinTerm& t) {
    for (auto& v : t.vars())
      if (!bound.count(v.name)) out.emplace(v.name, v);
  };
  switch (f->kind) {
    case FKind::Eq:
      term(f->lhs);
      term(f->rhs);
      return;
    case FKind::InF:
      term(f->lhs);
      return;
    case FKind::Pred:
      for (auto& a : f->args) term(a);
      return;
    case FKind::Exists:
    case FKind::Forall: {
      bool added = bound.insert(f->var.name).second;
      collect_free(f->kids[0], bound, out);
      if (added) bound.erase(f->var.name);
      return;
    }
    default:
      for (auto& k : f->kids) collect_free(k, bound, out);
  }
}

void collect_names(const FormulaPtr& f, std::set<std::string>& out) {
  auto term = [&](const LinTerm& t) {
    for (auto& v : t.vars()) out.insert(v.name);
  };
  switch (f->kind) {
    case FKind::Eq:
      term(f->lhs);
      term(f->rhs);
      return;
    case FKind::InF:
      term(f->lhs);
      return;
    case FKind::Pred:
      for (auto& a : f->args) term(a);
      for (auto& p : f->sigma->params) out.insert(p);
      collect_names(f->sigma->body, out);
      return;
    case FKind::Exists:
    case FKind::Forall:
      out.insert(f->var.name);
      break;
    default:
      break;
  }
  for (auto& k : f->kids) collect_names(k, out);
}

}  // namespace

std::vector<Var> free_vars(const FormulaPtr& f) {
  std::set<std::string> bound;
  std::map<std::string, Var> out;
  collect_free(f, bound, out);
  std::vector<Var> v;
  for (auto& [n, var] : out) v.push_back(var);
  std::sort(v.begin(), v.end(), [](const Var& a, const Var& b) { return var_name_less(a.name, b.name); });
  return v;
}

std::set<std::string> all_var_names(const FormulaPtr& f) {
  std::set<std::string> out;
  collect_names(f, out);
  return out;
}

namespace {

FormulaPtr subst_rec(const FormulaPtr& f, std::map<std::string, LinTerm> sub, NameSupply& names) {
  if (sub.empty()) return f;
  switch (f->kind) {
    case FKind::True:
    case FKind::False:
      return f;
    case FKind::Eq:
      return f_eq(f->lhs.substitute(sub), f->rhs.substitute(sub));
    case FKind::InF:
      return f_inF(f->lhs.substitute(sub));
    case FKind::Pred: {
      std::vector<LinTerm> args;
      for (auto& a : f->args) args.push_back(a.substitute(sub));
      return f_pred(f->sigma, std::move(args));
    }
    case FKind::Not:
      return f_not(subst_rec(f->kids[0], sub, names));
    case FKind::And:
    case FKind::Or: {
      std::vector<FormulaPtr> kids;
      for (auto& k : f->kids) kids.push_back(subst_rec(k, sub, names));
      return f->kind == FKind::And ? f_and(std::move(kids)) : f_or(std::move(kids));
    }
    case FKind::Implies:
      return f_implies(subst_rec(f->kids[0], sub, names), subst_rec(f->kids[1], sub, names));
    case FKind::Exists:
    case FKind::Forall: {
      sub.erase(f->var.name);
      Var v = f->var;
      bool clash = false;
      for (auto& [n, t] : sub)
        if (t.poly().has_var(v.name)) clash = true;
      if (clash) {
        Var nv{names.fresh(v.name + "_"), v.sort};
        sub[v.name] = LinTerm::var(sub.begin()->second.field(), nv);
        v = nv;
      }
      auto body = subst_rec(f->kids[0], sub, names);
      return f->kind == FKind::Exists ? f_exists({v}, body) : f_forall({v}, body);
    }
  }
  return f;
}

}  // namespace

FormulaPtr substitute(const FormulaPtr& f, const std::map<std::string, LinTerm>& sub) {
  NameSupply names;
  for (auto& n : all_var_names(f)) names.reserve(n);
  for (auto& [n, t] : sub)
    for (auto& v : t.vars()) names.reserve(v.name);
  return subst_rec(f, sub, names);
}

bool is_quantifier_free(const FormulaPtr& f) {
  if (f->kind == FKind::Exists || f->kind == FKind::Forall) return false;
  for (auto& k : f->kids)
    if (!is_quantifier_free(k)) return false;
  return true;
}

std::size_t formula_size(const FormulaPtr& f) {
  std::size_t n = 1;
  if (f->kind == FKind::Pred) n += formula_size(f->sigma->body);
  for (auto& k : f->kids) n += formula_size(k);
  return n;
}

// ---------------------------------------------------------------- printing

namespace {

std::string int_or_poly(const Poly& c) {
  if (c.is_constant()) return std::to_string(c.coeff(0));
  return "poly{" + c.str() + "}";
}

struct Printer {
  Sort defaultSort = Sort::R;
  std::set<std::string> bound;

  std::string term(const LinTerm& t) const {
    const FieldPtr& F = t.field();
    std::vector<std::string> parts;
    auto vars = t.vars();
    for (auto& v : vars) {
      auto& c = t.poly().coeffs(v.name);
      for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) continue;
        std::string s;
        if (!c[k].is_one()) s += int_or_poly(c[k]) + "*";
        s += v.name;
        if (!bound.count(v.name) && v.sort != defaultSort) s += v.sort == Sort::F ? ":F" : ":R";
        if (k > 0) {
          std::uint64_t e = 1;
          for (std::size_t i = 0; i < k; ++i) e *= F->p();
          s += "^" + std::to_string(e);
        }
        parts.push_back(s);
      }
    }
    if (!t.constant_part().is_zero() || parts.empty()) parts.push_back(int_or_poly(t.constant_part()));
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
    return out;
  }

  static int level(const FormulaPtr& f) {
    switch (f->kind) {
      case FKind::Implies:
        return 0;
      case FKind::Or:
        return 1;
      case FKind::And:
        return 2;
      default:
        return 3;
    }
  }

  std::string formula(const FormulaPtr& f, int ctx) {
    std::string s = raw(f);
    return level(f) < ctx ? "(" + s + ")" : s;
  }

  std::string raw(const FormulaPtr& f) {
    switch (f->kind) {
      case FKind::True:
        return "true";
      case FKind::False:
        return "false";
      case FKind::Eq:
        return term(f->lhs) + " = " + term(f->rhs);
      case FKind::InF:
        return "inF(" + term(f->lhs) + ")";
      case FKind::Pred: {
        Printer inner;
        inner.defaultSort = Sort::F;
        inner.bound.insert(f->sigma->params.begin(), f->sigma->params.end());
        std::string s = "P{";
        for (std::size_t i = 0; i < f->sigma->params.size(); ++i) s += (i ? ", " : "") + f->sigma->params[i];
        s += " | " + inner.formula(f->sigma->body, 0) + "}(";
        for (std::size_t i = 0; i < f->args.size(); ++i) s += (i ? ", " : "") + term(f->args[i]);
        return s + ")";
      }
      case FKind::Not:
        if (f->kids[0]->kind == FKind::Eq) return term(f->kids[0]->lhs) + " != " + term(f->kids[0]->rhs);
        return "not " + formula(f->kids[0], 3);
      case FKind::And:
      case FKind::Or: {
        std::string s;
        const char* op = f->kind == FKind::And ? " and " : " or ";
        for (std::size_t i = 0; i < f->kids.size(); ++i) s += (i ? op : "") + formula(f->kids[i], level(f) + 1);
        return s;
      }
      case FKind::Implies:
        return formula(f->kids[0], 1) + " -> " + formula(f->kids[1], 0);
      case FKind::Exists:
      case FKind::Forall: {
        std::string s = f->kind == FKind::Exists ? "exists " : "forall ";
        s += f->var.name + (f->var.sort == Sort::F ? ":F " : ":R ");
        bool added = bound.insert(f->var.name).second;
        s += formula(f->kids[0], 3);
        if (added) bound.erase(f->var.name);
        return s;
      }
    }
    return "";
  }
};

}  // namespace

std::string to_string(const FormulaPtr& f) {
  Printer p;
  return p.formula(f, 0);
}

std::string to_string(const LinTerm& t, const std::set<std::string>& bound) {
  Printer p;
  p.bound = bound;
  return p.term(t);
}

// ---------------------------------------------------------------- parsing

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

const std::set<std::string>& reserved() {
  static const std::set<std::string> r = {"z",     "p",    "and",  "or",   "not", "exists", "forall",
                                          "true",  "false", "inF", "poly", "frob", "P"};
  return r;
}

std::string normalize_unicode(const std::string& s) {
  static const std::vector<std::pair<std::string, std::string>> repl = {
      {"∃", " exists "}, {"∀", " forall "}, {"∧", " and "}, {"∨", " or "},
      {"¬", " not "},    {"≠", " != "},    {"→", " -> "}};
  std::string out = s;
  for (auto& [a, b] : repl) {
    std::size_t pos = 0;
    while ((pos = out.find(a, pos)) != std::string::npos) {
      out.replace(pos, a.size(), b);
      pos += b.size();
    }
  }
  return out;
}

class Parser {
 public:
  Parser(std::string text, const ParseOptions& opt) : s_(normalize_unicode(text)), F_(opt.F), lp_(opt.lp) {
    if (!F_) throw DomainError("parser needs a field");
    default_ = lp_ ? Sort::F : opt.defaultSort;
  }

  FormulaPtr formula_top() {
    auto f = implies();
    ws();
    if (i_ != s_.size()) fail("unexpected input");
    return f;
  }

  LinTerm term_top() {
    auto t = term();
    ws();
    if (i_ != s_.size()) fail("unexpected input");
    return t;
  }

 private:
  struct State {
    std::size_t i;
    std::map<std::string, Sort> freeSorts;
  };

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool peek_sym(const std::string& sym) {
    ws();
    return s_.compare(i_, sym.size(), sym) == 0;
  }

  bool eat_sym(const std::string& sym) {
    if (!peek_sym(sym)) return false;
    i_ += sym.size();
    return true;
  }

  void expect(const std::string& sym) {
    if (!eat_sym(sym)) fail("expected '" + sym + "'");
  }

  std::string peek_ident() {
    ws();
    if (i_ >= s_.size() || !is_ident_start(s_[i_])) return "";
    std::size_t j = i_;
    while (j < s_.size() && is_ident_char(s_[j])) ++j;
    return s_.substr(i_, j - i_);
  }

  bool eat_keyword(const std::string& kw) {
    if (peek_ident() != kw) return false;
    i_ += kw.size();
    return true;
  }

  std::string ident() {
    std::string id = peek_ident();
    if (id.empty()) fail("expected an identifier");
    i_ += id.size();
    return id;
  }

  Sort sort_annotation(Sort dflt) {
    if (!eat_sym(":")) return dflt;
    std::string s = ident();
    if (s == "R") {
      if (lp_) fail("R-sorted variable inside an L_p formula");
      return Sort::R;
    }
    if (s == "F") return Sort::F;
    fail("unknown sort '" + s + "'");
  }

  // ---- formulas
  FormulaPtr implies() {
    auto a = disj();
    if (eat_sym("->")) return f_implies(a, implies());
    return a;
  }

  FormulaPtr disj() {
    std::vector<FormulaPtr> kids{conj()};
    while (eat_keyword("or")) kids.push_back(conj());
    return f_or(std::move(kids));
  }

  FormulaPtr conj() {
    std::vector<FormulaPtr> kids{unary()};
    while (eat_keyword("and")) kids.push_back(unary());
    return f_and(std::move(kids));
  }

  FormulaPtr unary() {
    if (eat_keyword("not")) return f_not(unary());
    bool ex = peek_ident() == "exists";
    if (ex || peek_ident() == "forall") {
      ident();
      std::vector<Var> vars;
      do {
        std::string n = ident();
        if (reserved().count(n)) fail("reserved word used as a variable");
        vars.push_back(Var{n, sort_annotation(lp_ ? Sort::F : Sort::R)});
      } while (eat_sym(","));
      for (auto& v : vars) scopes_.push_back({v.name, v.sort});
      auto body = unary();
      scopes_.resize(scopes_.size() - vars.size());
      return ex ? f_exists(vars, body) : f_forall(vars, body);
    }
    return primary();
  }

  FormulaPtr primary() {
    if (eat_keyword("true")) return f_true();
    if (eat_keyword("false")) return f_false();
    if (peek_ident() == "inF") {
      ident();
      expect("(");
      auto t = term();
      expect(")");
      return f_inF(t);
    }
    if (peek_ident() == "P") {
      std::size_t save = i_;
      ident();
      if (peek_sym("{")) return predicate();
      i_ = save;
    }
    if (peek_sym("(")) {
      State st{i_, freeSorts_};
      try {
        return comparison();
      } catch (const ParseError&) {
        i_ = st.i;
        freeSorts_ = st.freeSorts;
      }
      expect("(");
      auto f = implies();
      expect(")");
      return f;
    }
    return comparison();
  }

  FormulaPtr comparison() {
    auto a = term();
    if (eat_sym("!=")) return f_neq(a, term());
    if (eat_sym("=")) return f_eq(a, term());
    fail("expected '=' or '!='");
  }

  FormulaPtr predicate() {
    expect("{");
    // Optional explicit parameter list "a1, a2 |".
    std::vector<std::string> params;
    bool explicitParams = false;
    {
      std::size_t save = i_;
      std::vector<std::string> ids;
      bool ok = true;
      do {
        std::string id = peek_ident();
        if (id.empty() || reserved().count(id)) {
          ok = false;
          break;
        }
        ident();
        ids.push_back(id);
      } while (eat_sym(","));
      if (ok && eat_sym("|")) {
        params = ids;
        explicitParams = true;
      } else {
        i_ = save;
      }
    }
    // The body is a closed L_p formula over its parameters.
    auto savedScopes = std::move(scopes_);
    auto savedFree = std::move(freeSorts_);
    bool savedLp = lp_;
    Sort savedDefault = default_;
    scopes_.clear();
    freeSorts_.clear();
    lp_ = true;
    default_ = Sort::F;
    for (auto& p : params) scopes_.push_back({p, Sort::F});
    auto body = implies();
    expect("}");
    std::map<std::string, Sort> bodyFree = std::move(freeSorts_);
    scopes_ = std::move(savedScopes);
    freeSorts_ = std::move(savedFree);
    lp_ = savedLp;
    default_ = savedDefault;
    if (!explicitParams) {
      for (auto& [n, s] : bodyFree) params.push_back(n);
      std::sort(params.begin(), params.end(), var_name_less);
    } else if (!bodyFree.empty()) {
      fail("predicate body has a variable outside its parameter list");
    }
    expect("(");
    std::vector<LinTerm> args;
    if (!peek_sym(")")) {
      do args.push_back(term());
      while (eat_sym(","));
    }
    expect(")");
    if (args.size() != params.size()) fail("predicate arity mismatch");
    auto sg = std::make_shared<Sigma>();
    sg->params = params;
    sg->body = body;
    return f_pred(sg, std::move(args));
  }

  // ---- terms
  LinTerm term() {
    LinTerm acc(F_);
    bool neg = eat_sym("-");
    LinTerm t = product();
    acc = neg ? -t : t;
    for (;;) {
      if (peek_sym("->")) break;
      if (eat_sym("+"))
        acc += product();
      else if (eat_sym("-"))
        acc = acc - product();
      else
        break;
    }
    return acc;
  }

  LinTerm product() {
    LinTerm a = power();
    while (eat_sym("*")) {
      LinTerm b = power();
      if (a.is_constant())
        a = b.scale(a.constant_part());
      else if (b.is_constant())
        a = a.scale(b.constant_part());
      else
        fail("product of two variable terms is not additive");
    }
    return a;
  }

  LinTerm power() {
    LinTerm a = atom();
    while (eat_sym("^")) {
      std::uint64_t e;
      if (eat_keyword("p")) {
        e = F_->p();
      } else {
        ws();
        std::size_t j = i_;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
        if (j == i_) fail("expected an exponent");
        e = std::stoull(s_.substr(i_, j - i_));
        i_ = j;
      }
      if (a.is_constant()) {
        a = LinTerm::constant(a.constant_part().pow(e));
        continue;
      }
      unsigned k = 0;
      std::uint64_t q = 1;
      while (q < e) {
        q *= F_->p();
        ++k;
      }
      if (q != e) fail("exponent of a variable term must be a power of p");
      a = a.frob(k);
    }
    return a;
  }

  LinTerm atom() {
    ws();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      long long v = std::stoll(s_.substr(i_, j - i_));
      i_ = j;
      return LinTerm::constant(Poly::constant(F_, F_->from_int(v)));
    }
    if (c == '(') {
      ++i_;
      auto t = term();
      expect(")");
      return t;
    }
    std::string id = peek_ident();
    if (id.empty()) fail("expected a term");
    if (id == "z") {
      if (lp_) fail("z is not part of L_p");
      i_ += 1;
      return LinTerm::constant(Poly::z(F_));
    }
    if (id == "poly") {
      i_ += 4;
      expect("{");
      std::size_t j = s_.find('}', i_);
      if (j == std::string::npos) fail("unterminated poly{");
      std::size_t at = i_;
      Poly c(F_);
      try {
        c = parse_poly(s_.substr(i_, j - i_), F_);
      } catch (const ParseError& e) {
        throw ParseError(std::string("in poly{}: ") + e.what(), at);
      }
      i_ = j + 1;
      if (!c.over_prime_field()) throw ParseError("poly{} coefficients must lie in F_p", at);
      if (lp_ && !c.is_constant()) throw ParseError("z is not part of L_p", at);
      return LinTerm::constant(c);
    }
    if (id == "frob") {
      i_ += 4;
      expect("(");
      auto t = term();
      unsigned k = 1;
      if (eat_sym(",")) {
        ws();
        std::size_t j = i_;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
        if (j == i_) fail("expected a count");
        k = static_cast<unsigned>(std::stoul(s_.substr(i_, j - i_)));
        i_ = j;
      }
      expect(")");
      return t.frob(k);
    }
    if (reserved().count(id)) fail("unexpected keyword '" + id + "'");
    i_ += id.size();
    Sort s = resolve(id);
    return LinTerm::var(F_, Var{id, s});
  }

  Sort resolve(const std::string& id) {
    for (std::size_t k = scopes_.size(); k-- > 0;)
      if (scopes_[k].first == id) {
        if (peek_sym(":")) {
          Sort a = sort_annotation(scopes_[k].second);
          if (a != scopes_[k].second) fail("sort annotation contradicts the binder of " + id);
        }
        return scopes_[k].second;
      }
    Sort s = sort_annotation(default_);
    auto [it, ins] = freeSorts_.emplace(id, s);
    if (!ins && it->second != s) fail("variable " + id + " used with two sorts");
    return s;
  }

  std::string s_;
  std::size_t i_ = 0;
  FieldPtr F_;
  bool lp_;
  Sort default_ = Sort::R;
  std::vector<std::pair<std::string, Sort>> scopes_;
  std::map<std::string, Sort> freeSorts_;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, const ParseOptions& opt) { return Parser(text, opt).formula_top(); }

LinTerm parse_term(const std::string& text, const ParseOptions& opt) { return Parser(text, opt).term_top(); }

}  // namespace frobq
