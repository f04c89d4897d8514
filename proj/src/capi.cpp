#include "frobq/frobq.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "frobq/bounds.hpp"
#include "frobq/errors.hpp"
#include "frobq/hasse.hpp"
#include "frobq/independence.hpp"
#include "frobq/logic.hpp"
#include "frobq/normalize.hpp"
#include "internal/suites.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace frobq;

struct frobq_ctx {
  frobq_ctx(FieldPtr field, Localization loc) : F(std::move(field)), L(std::move(loc)) {}
  FieldPtr F;
  Localization L;
  unsigned heightCap = 3;
  EvalCaps evalCaps;
  PreimageCaps preimageCaps;
  std::string error;
};

namespace {

// Errors from calls that have no context to hold them.
thread_local std::string g_error;

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class Fn>
frobq_status guarded(std::string& err, Fn&& fn) {
  err.clear();
  try {
    fn();
    return FROBQ_OK;
  } catch (const ArgumentError& e) {
    err = e.what();
    return FROBQ_ERR_ARGUMENT;
  } catch (const ParseError& e) {
    err = e.what();
    return FROBQ_ERR_PARSE;
  } catch (const DomainError& e) {
    err = e.what();
    return FROBQ_ERR_DOMAIN;
  } catch (const ResourceError& e) {
    err = e.what();
    return FROBQ_ERR_RESOURCE;
  } catch (const InvariantError& e) {
    err = e.what();
    return FROBQ_ERR_INVARIANT;
  } catch (const std::bad_alloc&) {
    err = "out of memory";
    return FROBQ_ERR_INTERNAL;
  } catch (const std::exception& e) {
    err = e.what();
    return FROBQ_ERR_INTERNAL;
  } catch (...) {
    err = "unknown exception";
    return FROBQ_ERR_INTERNAL;
  }
}

template <class Fn>
frobq_status with_ctx(frobq_ctx* ctx, Fn&& fn) {
  if (!ctx) {
    g_error = "null context";
    return FROBQ_ERR_ARGUMENT;
  }
  return guarded(ctx->error, std::forward<Fn>(fn));
}

std::string need(const char* s, const char* what) {
  if (!s) throw ArgumentError(std::string(what) + " is null");
  return s;
}

void emit(const json& j, char** out) {
  if (!out) throw ArgumentError("output pointer is null");
  std::string s = j.dump(2);
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  *out = buf;
}

std::string join_S(const Localization& L) {
  std::string r;
  for (auto& s : L.S()) r += (r.empty() ? "" : ", ") + s.str();
  return r;
}

json header(const frobq_ctx* ctx) { return json{{"field", ctx->F->spec_string()}, {"S", join_S(ctx->L)}}; }

json assignment_json(const Assignment& a) {
  json j = json::object();
  for (auto& [k, v] : a) j[k] = v.str();
  return j;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (cur.find_first_not_of(" \t\n") != std::string::npos) out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n"), e = s.find_last_not_of(" \t\n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

AdditivePoly additive(const frobq_ctx* ctx, const char* f) { return AdditivePoly::parse(need(f, "f"), ctx->F); }

RatFunc ring_elem(const frobq_ctx* ctx, const char* x, const char* what) {
  RatFunc r = parse_ratfunc(need(x, what), ctx->F);
  if (!ctx->L.contains(r)) throw DomainError(std::string(what) + " = " + r.str() + " is not in R");
  return r;
}

}  // namespace

extern "C" {

const char* frobq_version(void) { return "1.0.0"; }

const char* frobq_status_name(frobq_status s) {
  switch (s) {
    case FROBQ_OK: return "ok";
    case FROBQ_ERR_ARGUMENT: return "argument";
    case FROBQ_ERR_PARSE: return "parse";
    case FROBQ_ERR_DOMAIN: return "domain";
    case FROBQ_ERR_RESOURCE: return "resource";
    case FROBQ_ERR_INVARIANT: return "invariant";
    case FROBQ_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

frobq_status frobq_ctx_new(const char* field, const char* S, frobq_ctx** out) {
  return guarded(g_error, [&] {
    if (!out) throw ArgumentError("output pointer is null");
    *out = nullptr;
    FieldPtr F = Field::parse(need(field, "field"));
    Localization L = Localization::parse(F, S ? S : "");
    *out = new frobq_ctx(F, std::move(L));
  });
}

void frobq_ctx_free(frobq_ctx* ctx) { delete ctx; }

const char* frobq_last_error(const frobq_ctx* ctx) { return ctx ? ctx->error.c_str() : g_error.c_str(); }

frobq_status frobq_ctx_set_cap(frobq_ctx* ctx, const char* key, uint64_t value) {
  return with_ctx(ctx, [&] {
    std::string k = need(key, "key");
    if (value == 0) throw ArgumentError("cap " + k + " must be positive");
    if (k == "height_cap") {
      if (value > 64) throw ArgumentError("height_cap above 64");
      ctx->heightCap = static_cast<unsigned>(value);
    } else if (k == "max_branch") {
      ctx->evalCaps.maxBranch = value;
    } else if (k == "preimage_candidates") {
      ctx->preimageCaps.maxCandidates = value;
    } else if (k == "preimage_tuples") {
      ctx->preimageCaps.maxTuples = value;
    } else {
      throw ArgumentError("unknown cap '" + k + "'");
    }
  });
}

void frobq_string_free(char* s) { std::free(s); }

frobq_status frobq_normalize(frobq_ctx* ctx, const char* f, char** out) {
  return with_ctx(ctx, [&] {
    auto g = additive(ctx, f);
    auto r = normalize_full(g, ctx->L);
    auto cls = classify(r.fTilde);
    json xi = json::object();
    for (auto& [name, comp] : r.xi.as_substitution()) xi[name] = comp.str();
    json j = header(ctx);
    j["f"] = g.str();
    j["fTilde"] = r.fTilde.str();
    j["G"] = r.G.str();
    j["xi"] = xi;
    j["classification"] = {{"normalized", cls.normalized},
                           {"stronglyNormalized", cls.strongly_normalized},
                           {"pBasic", cls.p_basic},
                           {"s", cls.s},
                           {"variables", cls.n}};
    emit(j, out);
  });
}

frobq_status frobq_wronskian(frobq_ctx* ctx, const char* family, unsigned s, char** out) {
  return with_ctx(ctx, [&] {
    std::vector<RatFunc> b;
    json fam = json::array();
    for (auto& t : split(need(family, "family"), ';')) {
      b.push_back(parse_ratfunc(t, ctx->F));
      fam.push_back(b.back().str());
    }
    if (b.empty()) throw ArgumentError("empty family");
    auto cert = wronskian_certificate(b, s);
    json j = header(ctx);
    j["family"] = fam;
    j["s"] = s;
    j["independent"] = cert.has_value();
    j["rankOracle"] = rank_oracle(b, s);
    if (cert) {
      j["epsilon"] = *cert;
      j["wronskian"] = wronskian(b, *cert).str();
    }
    emit(j, out);
  });
}

frobq_status frobq_hasse(frobq_ctx* ctx, const char* x, unsigned eps, char** out) {
  return with_ctx(ctx, [&] {
    RatFunc v = parse_ratfunc(need(x, "x"), ctx->F);
    json j = header(ctx);
    j["x"] = v.str();
    j["eps"] = eps;
    j["derivative"] = hasse_derivative(v, eps).str();
    emit(j, out);
  });
}

frobq_status frobq_eord(frobq_ctx* ctx, const char* f, char** out) {
  return with_ctx(ctx, [&] {
    auto g = additive(ctx, f);
    auto r = e_ord(g);
    json j = header(ctx);
    j["f"] = g.str();
    j["Delta"] = r.cob.Delta.str();
    j["m"] = r.m;
    j["m0"] = r.m0;
    j["Omega"] = r.Omega;
    j["Eord"] = r.Eord;
    j["C"] = r.C;
    j["wronskian"] = r.W.str();
    j["epsilon"] = r.eps;
    emit(j, out);
  });
}

frobq_status frobq_reduce(frobq_ctx* ctx, const char* f, const char* u, char** out) {
  return with_ctx(ctx, [&] {
    auto g = additive(ctx, f);
    RatFunc uv = ring_elem(ctx, u, "u");
    auto rep = e_ord(g);
    auto w = reduce_mod_image(g, uv, ctx->L, rep);
    auto bad = check_reduction(g, uv, w, rep.Eord);
    if (!bad.empty()) throw InvariantError("reduction witness fails: " + bad[0]);
    json steps = json::array();
    for (auto& p : w.progress) steps.push_back({{"place", p.place}, {"before", p.before}, {"after", p.after}});
    json j = header(ctx);
    j["f"] = g.str();
    j["u"] = uv.str();
    j["Eord"] = rep.Eord;
    j["uPrime"] = w.uPrime.str();
    j["xTilde"] = assignment_json(w.xTilde);
    j["progress"] = steps;
    j["cleanupAtInfinity"] = w.cleanupAtInfinity;
    emit(j, out);
  });
}

frobq_status frobq_hbound(frobq_ctx* ctx, const char* f, int64_t ell, char** out) {
  return with_ctx(ctx, [&] {
    auto g = additive(ctx, f);
    auto r = height_bound(g, ell, ctx->L);
    json j = header(ctx);
    j["f"] = g.str();
    j["ell"] = ell;
    j["C_finite"] = r.C_finite;
    j["C_inf"] = r.C_inf;
    j["eta"] = ctx->F->str(r.eta);
    j["M"] = r.M;
    j["h"] = r.h;
    emit(j, out);
  });
}

frobq_status frobq_preimage(frobq_ctx* ctx, const char* f, const char* y, char** out) {
  return with_ctx(ctx, [&] {
    auto g = additive(ctx, f);
    RatFunc yv = ring_elem(ctx, y, "y");
    auto sols = inverse_image(g, yv, ctx->L, ctx->preimageCaps);
    json vars = json::array();
    for (auto& v : g.vars()) vars.push_back(v.name);
    json rows = json::array();
    for (auto& x : sols) {
      json row = json::array();
      for (auto& c : x) row.push_back(c.str());
      rows.push_back(row);
    }
    json j = header(ctx);
    j["f"] = g.str();
    j["y"] = yv.str();
    j["variables"] = vars;
    j["solutions"] = rows;
    emit(j, out);
  });
}

frobq_status frobq_transform(frobq_ctx* ctx, const char* phi, char** out) {
  return with_ctx(ctx, [&] {
    auto f = parse_formula(need(phi, "formula"), ParseOptions{ctx->F});
    auto r = model_complete_transform(f, ctx->L);
    json j = header(ctx);
    j["input"] = to_string(f);
    j["universal"] = to_string(r);
    j["size"] = formula_size(r);
    emit(j, out);
  });
}

frobq_status frobq_to_sigma(frobq_ctx* ctx, const char* phi, char** out) {
  return with_ctx(ctx, [&] {
    auto f = parse_formula(need(phi, "sentence"), ParseOptions{ctx->F});
    if (!free_vars(f).empty()) throw DomainError("to-sigma needs a sentence (no free variables)");
    auto s = sentence_to_sigma(f, ctx->L);
    json j = header(ctx);
    j["input"] = to_string(f);
    j["sigma"] = to_string(s->body);
    j["truth"] = eval_sigma_over_F(*s, {}, ctx->F, ctx->evalCaps);
    emit(j, out);
  });
}

frobq_status frobq_eval_sigma(frobq_ctx* ctx, const char* sigma, int* truth) {
  return with_ctx(ctx, [&] {
    if (!truth) throw ArgumentError("output pointer is null");
    auto f = parse_formula(need(sigma, "sigma"), ParseOptions{ctx->F, Sort::F, true});
    if (!free_vars(f).empty()) throw DomainError("eval-sigma needs a sentence (no free variables)");
    *truth = eval_sigma_over_F(f, {}, ctx->F, ctx->evalCaps) ? 1 : 0;
  });
}

frobq_status frobq_eval_bounded(frobq_ctx* ctx, const char* phi, const char* assignment, unsigned cap, int* truth) {
  return with_ctx(ctx, [&] {
    if (!truth) throw ArgumentError("output pointer is null");
    auto f = parse_formula(need(phi, "formula"), ParseOptions{ctx->F});
    Assignment env;
    for (auto& item : split(assignment ? assignment : "", ';')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw ParseError("expected name = value in assignment", 0);
      std::string name = trim(item.substr(0, eq));
      env[name] = ring_elem(ctx, trim(item.substr(eq + 1)).c_str(), name.c_str());
    }
    for (auto& v : free_vars(f)) {
      auto it = env.find(v.name);
      if (it == env.end()) throw DomainError("no value for free variable " + v.name);
      if (v.sort == Sort::F && !it->second.is_constant())
        throw DomainError("F-sorted " + v.name + " needs a constant value");
    }
    *truth = eval_bounded_over_R(f, env, cap ? cap : ctx->heightCap, ctx->L, ctx->evalCaps) ? 1 : 0;
  });
}

frobq_status frobq_selftest(frobq_ctx* ctx, int quick, uint64_t seed, uint32_t mask, int* passed, char** out) {
  return with_ctx(ctx, [&] {
    if (!passed) throw ArgumentError("output pointer is null");
    suites::Options opt{quick != 0, seed};
    json rows = json::array();
    bool all = true;
    for (int id = 1; id <= suites::kCriteria; ++id) {
      if (mask && !(mask >> (id - 1) & 1u)) continue;
      auto r = suites::run(id, opt);
      all = all && r.pass;
      json counts = json::object();
      for (auto& [k, v] : r.counts) counts[k] = v;
      // Timings stay out of the record so equal seeds give equal output.
      rows.push_back({{"criterion", r.id},
                      {"name", r.name},
                      {"pass", r.pass},
                      {"counts", counts},
                      {"failureCount", r.failureCount},
                      {"failures", r.failures}});
    }
    *passed = all ? 1 : 0;
    json j{{"quick", quick != 0}, {"seed", seed}, {"passed", all}, {"criteria", rows}};
    if (out) emit(j, out);
  });
}

}  // extern "C"
