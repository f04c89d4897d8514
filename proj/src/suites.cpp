#include "internal/suites.hpp"

#include <chrono>
#include <exception>
#include <random>
#include <sstream>

#include "frobq/bounds.hpp"
#include "frobq/errors.hpp"
#include "frobq/hasse.hpp"
#include "frobq/independence.hpp"
#include "frobq/logic.hpp"
#include "frobq/normalize.hpp"
#include "internal/oracles.hpp"

namespace frobq::suites {

using namespace frobq::oracle;

namespace {

constexpr std::size_t kKeptFailures = 5;

class Recorder {
 public:
  explicit Recorder(Result& r) : r_(r) {}

  void count(const std::string& key, long long by = 1) {
    for (auto& [k, v] : r_.counts)
      if (k == key) {
        v += by;
        return;
      }
    r_.counts.emplace_back(key, by);
  }
  long long get(const std::string& key) const {
    for (auto& [k, v] : r_.counts)
      if (k == key) return v;
    return 0;
  }
  void fail(const std::string& msg) {
    ++r_.failureCount;
    if (r_.failures.size() < kKeptFailures) r_.failures.push_back(msg);
  }
  void require(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
  }
  // Minimum sample sizes only bind at full size.
  void at_least(const std::string& key, long long full, long long quick, bool isQuick) {
    long long need = isQuick ? quick : full;
    if (get(key) < need) fail(key + " = " + std::to_string(get(key)) + " < " + std::to_string(need));
  }

 private:
  Result& r_;
};

std::string fname(const FieldPtr& F) { return "F_" + std::to_string(F->size()); }

std::vector<FieldPtr> small_fields() { return {Field::prime(2), Field::prime(3), Field::make(2, 2)}; }

// ---------------------------------------------------------------- 1. Hasse identities

// D_eps(1/f) as the explicit sum over compositions of eps.
RatFunc quotient_rule(const RatFunc& f, unsigned eps) {
  const FieldPtr& F = f.field();
  RatFunc finv = f.inv();
  if (eps == 0) return finv;
  std::vector<RatFunc> D(eps + 1, RatFunc(F));
  for (unsigned i = 1; i <= eps; ++i) D[i] = hasse_derivative(f, i);
  // T[k][e]: sum over i_1 + .. + i_k = e, all i_j >= 1, of prod D_{i_j}(f).
  std::vector<std::vector<RatFunc>> T(eps + 1, std::vector<RatFunc>(eps + 1, RatFunc(F)));
  for (unsigned e = 1; e <= eps; ++e) T[1][e] = D[e];
  for (unsigned k = 2; k <= eps; ++k)
    for (unsigned e = k; e <= eps; ++e)
      for (unsigned i = 1; i + (k - 1) <= e; ++i) T[k][e] += D[i] * T[k - 1][e - i];
  RatFunc sum(F), pw = finv;
  for (unsigned k = 1; k <= eps; ++k) {
    pw = pw * finv;
    RatFunc term = T[k][eps] * pw;
    sum = k % 2 ? sum - term : sum + term;
  }
  return sum;
}

void hasse_identities(Recorder& rec, const Options& o, std::mt19937_64& rng) {
  const int per = o.quick ? 40 : 400;
  for (auto& F : small_fields())
    for (int i = 0; i < per; ++i) {
      RatFunc f = random_nonzero_ratfunc(F, 8, rng), g = random_ratfunc(F, 8, rng);
      unsigned eps = static_cast<unsigned>(rng() % 9);
      std::string at = fname(F) + " f=" + f.str() + " eps=" + std::to_string(eps);
      rec.count("samples");
      RatFunc Df = hasse_derivative(f, eps), Dg = hasse_derivative(g, eps);
      rec.require(Df == taylor_oracle(f, eps), "D vs Taylor oracle: " + at);
      rec.require(hasse_derivative(f + g, eps) == Df + Dg, "P1: " + at + " g=" + g.str());
      RatFunc leibniz(F);
      for (unsigned k = 0; k <= eps; ++k) leibniz += hasse_derivative(f, k) * hasse_derivative(g, eps - k);
      rec.require(hasse_derivative(f * g, eps) == leibniz, "P2: " + at + " g=" + g.str());
      unsigned m = static_cast<unsigned>(rng() % 3);
      try {
        check_p3(f, m, eps);
      } catch (const InvariantError& e) {
        rec.fail(std::string("P3: ") + e.what());
      }
      RatFunc oracleInv = taylor_oracle(f.inv(), eps);
      rec.require(quotient_rule(f, eps) == oracleInv, "P4 vs Taylor oracle: " + at);
      rec.require(hasse_derivative(f.inv(), eps) == oracleInv, "D(1/f) vs Taylor oracle: " + at);
      rec.count("identity checks", 6);
    }
  rec.at_least("samples", 1000, 120, o.quick);
}

// ---------------------------------------------------------------- 2. order inequality

void order_inequality(Recorder& rec, const Options& o, std::mt19937_64& rng) {
  const long long target = o.quick ? 150 : 1200;
  auto fields = small_fields();
  for (long long attempt = 0; rec.get("checked") < target && attempt < 20 * target; ++attempt) {
    const FieldPtr& F = fields[static_cast<std::size_t>(attempt) % fields.size()];
    RatFunc u = random_nonzero_ratfunc(F, 8, rng);
    unsigned eps = static_cast<unsigned>(rng() % 9);
    bool atInf = rng() % 3 == 0;
    Elem c = static_cast<Elem>(rng() % F->size());
    Place v = atInf ? Place::inf() : Place::at(Poly::z(F) - Poly::constant(F, c));
    Elem eta = static_cast<Elem>(rng() % F->size());
    auto sides = ord_inequality_sides(u, eps, v, eta);
    if (!sides) {
      rec.count("vacuous (D_eps u = 0)");
      continue;
    }
    rec.count("checked");
    rec.count(atInf ? "at infinity" : "at degree-1 places");
    rec.require(sides->lhs >= sides->rhs, fname(F) + " u=" + u.str() + " eps=" + std::to_string(eps) +
                                              " place=" + v.str() + ": " + std::to_string(sides->lhs) + " < " +
                                              std::to_string(sides->rhs));
    if (sides->lhs == sides->rhs && eps > 0) rec.count("equality cases (eps >= 1)");
  }
  rec.at_least("checked", 1000, 150, o.quick);
  rec.at_least("at infinity", 1, 1, o.quick);
  rec.at_least("equality cases (eps >= 1)", 10, 10, o.quick);
}

// ---------------------------------------------------------------- 3. Wronskian criterion

unsigned qpow(unsigned p, unsigned s) {
  unsigned q = 1;
  while (s--) q *= p;
  return q;
}

void wronskian_criterion(Recorder& rec, const Options& o, std::mt19937_64& rng) {
  const int per = o.quick ? 30 : 120;
  for (auto F : {Field::prime(2), Field::prime(3)})
    for (int i = 0; i < per; ++i) {
      unsigned s = 1 + static_cast<unsigned>(rng() % 2);
      unsigned q = qpow(F->p(), s);
      std::size_t n = 1 + rng() % std::min<unsigned>(q, 4);
      std::vector<RatFunc> b;
      for (std::size_t j = 0; j < n; ++j) {
        // Mixing in q-th power multiples makes dependent families common.
        RatFunc x = random_ratfunc(F, 3, rng);
        if (j > 0 && rng() % 3 == 0) x = b[0] * random_ratfunc(F, 2, rng).frob_pow(s);
        b.push_back(x);
      }
      std::ostringstream at;
      at << fname(F) << " s=" << s << " family=";
      for (auto& x : b) at << x.str() << ";";
      auto cert = wronskian_certificate(b, s);
      bool full = rank_oracle(b, s) == n;
      rec.count("random families");
      rec.require(cert.has_value() == full, "criterion vs rank oracle: " + at.str());
      if (cert) {
        rec.count("independent");
        rec.require(!wronskian(b, *cert).is_zero(), "certificate with zero Wronskian: " + at.str());
      } else {
        rec.count("dependent");
        auto dep = dependency_oracle(b, s);
        if (!dep) {
          rec.fail("no dependency found: " + at.str());
          continue;
        }
        RatFunc sum(F);
        for (std::size_t j = 0; j < n; ++j)
          sum += RatFunc((*dep)[j].map_coeffs_frob(-static_cast<long long>(s))).frob_pow(s) * b[j];
        rec.require(sum.is_zero(), "dependency does not vanish: " + at.str());
      }
    }
  auto F2 = Field::prime(2);
  for (unsigned s = 1; s <= 2; ++s) {
    unsigned q = qpow(2, s);
    for (unsigned mask = 1; mask < (1u << 7); ++mask) {
      std::vector<RatFunc> b;
      for (unsigned e = 0; e <= 6; ++e)
        if (mask >> e & 1) b.push_back(RatFunc(Poly::monomial(F2, 1, e)));
      if (b.size() > q) continue;
      rec.count("monomial families");
      rec.require(wronskian_certificate(b, s).has_value() == (rank_oracle(b, s) == b.size()),
                  "monomial family mask=" + std::to_string(mask) + " s=" + std::to_string(s));
    }
  }
  rec.at_least("random families", 200, 60, o.quick);
  rec.at_least("independent", 20, 5, o.quick);
  rec.at_least("dependent", 20, 5, o.quick);
}

// ---------------------------------------------------------------- 4. normalization

std::size_t r_vars(const AdditivePoly& f) {
  std::size_t n = 0;
  for (auto& v : f.vars()) n += v.sort == Sort::R;
  return n;
}

void normalization(Recorder& rec, const Options& o, std::mt19937_64& rng) {
  const int per = o.quick ? 20 : 100;
  const int targets = o.quick ? 5 : 20;
  for (auto F : {Field::prime(2), Field::prime(3)}) {
    Localization L(F, {Poly::z(F)});
    for (int i = 0; i < per; ++i) {
      auto f = random_additive(F, 1 + rng() % 3, 2, 4, rng);
      std::string at = fname(F) + " f=" + f.str();
      rec.count("polynomials");
      auto r = normalize_full(f, L);
      rec.require(expand_composition(f, r.xi.as_substitution()) == to_mpoly(r.fTilde + r.G),
                  "f o xi != fTilde + G: " + at);
      rec.require(classify(r.fTilde).strongly_normalized, "not strongly normalized: " + at);
      rec.require(r.fTilde.degree() <= f.degree(), "degree grew: " + at + " -> " + r.fTilde.str());
      if (r_vars(r.fTilde) > r_vars(f)) {
        rec.count("vars(fTilde) > vars(f)");
        rec.fail("variable count grew " + std::to_string(r_vars(f)) + " -> " + std::to_string(r_vars(r.fTilde)) +
                 ": " + at + " -> " + r.fTilde.str());
      }
      for (int t = 0; t < targets; ++t) {
        std::vector<RatFunc> target;
        for (std::size_t k = 0; k < r.xi.targets().size(); ++k) target.push_back(random_ring_elem(L, 4, 2, rng));
        try {
          rec.require(r.xi.apply(r.xi.preimage(target)) == target, "apply(preimage) != target: " + at);
        } catch (const InvariantError& e) {
          rec.fail(std::string("preimage: ") + e.what() + ": " + at);
        }
        rec.count("preimage checks");
      }
    }
  }
  rec.at_least("polynomials", 200, 40, o.quick);
}

// ---------------------------------------------------------------- 5. reduction

void reduction(Recorder& rec, const Options& o, std::mt19937_64& rng) {
  const int fs = o.quick ? 1 : 5, us = 5;
  for (auto F : {Field::prime(2), Field::make(2, 2)})
    for (int withZ1 = 0; withZ1 < 2; ++withZ1) {
      std::vector<Poly> S{Poly::z(F)};
      if (withZ1) S.push_back(Poly::from_ints(F, {1, 1}));
      Localization L(F, S);
      for (unsigned s = 1; s <= 2; ++s)
        for (int fi = 0; fi < fs; ++fi) {
          auto f = random_p_basic(F, s, 2, rng);
          auto rep = e_ord(f);
          for (int t = 0; t < us; ++t) {
            RatFunc u = random_ring_elem(L, 10, 6, rng);
            if (!u.is_zero() && height(u) > 12) {
              --t;
              continue;
            }
            auto w = reduce_mod_image(f, u, L, rep);
            auto bad = check_reduction(f, u, w, rep.Eord);
            for (auto& b : bad) rec.fail(fname(F) + " f=" + f.str() + " u=" + u.str() + ": " + b);
            rec.count("reductions");
            rec.count("progress steps", static_cast<long long>(w.progress.size()));
          }
        }
    }
  rec.at_least("reductions", 200, 40, o.quick);
  rec.at_least("progress steps", 1, 1, o.quick);
}

// ---------------------------------------------------------------- 6. image decomposition

void image_decomposition_suite(Recorder& rec, const Options& o, std::mt19937_64& rng) {
  const int per = o.quick ? 5 : 25;
  auto F2 = Field::prime(2);
  auto F4 = Field::make(2, 2);
  struct Config {
    Localization L;
    AdditivePoly f;
  };
  std::vector<Config> configs{
      {Localization::parse(F2, "z, z+1"), AdditivePoly::parse("x1^2 + poly{z}*x2^2 + poly{1+z}*x1", F2)},
      {Localization::parse(F2, "z"), random_p_basic(F2, 1, 2, rng)},
      {Localization::parse(F2, "z, z+1"), random_p_basic(F2, 2, 2, rng)},
      {Localization::parse(F4, "z"), random_p_basic(F4, 1, 3, rng)},
  };
  for (auto& c : configs)
    for (int t = 0; t < per; ++t) {
      RatFunc u = random_ring_elem(c.L, 10, 5, rng);
      auto d = image_decomposition(c.f, u, c.L);
      // Recombined here from the parts rather than through recombine().
      const FieldPtr& F = c.f.field();
      RatFunc bounded(Poly(F, d.alpha), c.L.e().pow(d.N));
      std::string at = fname(F) + " f=" + c.f.str() + " u=" + u.str();
      rec.require(c.f.eval(d.x) + bounded == u, "u != f(x) + (1/e^N) G(alpha): " + at);
      for (auto& [name, v] : d.x) rec.require(c.L.contains(v), "x outside R: " + at);
      rec.require(d.alpha.size() == d.N * (1 + static_cast<std::size_t>(std::max(0, d.e.deg()))) + 1,
                  "alpha length: " + at);
      rec.count("decompositions");
    }
  rec.at_least("decompositions", 100, 20, o.quick);
}

// ---------------------------------------------------------------- 7. height bound search

void height_bound_search(Recorder& rec, const Options&, std::mt19937_64&) {
  auto F2 = Field::prime(2);
  Localization L(F2, {Poly::z(F2)});
  auto f = AdditivePoly::parse("x1^2 + poly{z}*x2^2", F2);
  const long long ell = 3;
  auto hb = height_bound(f, ell, L);
  const long long poleMax = std::max(std::abs(hb.C_finite), std::abs(hb.C_inf)) + 2;
  const long long numMax = hb.h + 2;
  rec.count("h(f, 3)", hb.h);
  rec.count("max pole order", poleMax);
  rec.count("max numerator degree", numMax);
  // Every N / z^k in lowest terms: z does not divide N when k > 0.
  std::vector<RatFunc> xs{RatFunc(F2)};
  for (long long k = 0; k <= poleMax; ++k)
    for (std::uint32_t mask = 1; mask < (1u << (numMax + 1)); ++mask) {
      if (k > 0 && !(mask & 1)) continue;
      std::vector<Elem> c(static_cast<std::size_t>(numMax) + 1);
      for (long long i = 0; i <= numMax; ++i) c[static_cast<std::size_t>(i)] = (mask >> i) & 1;
      xs.push_back(RatFunc(Poly(F2, c), Poly::z(F2).pow(static_cast<unsigned>(k))));
    }
  rec.count("candidates per coordinate", static_cast<long long>(xs.size()));
  auto ht = [](const RatFunc& x) { return x.is_zero() ? 0 : height(x); };
  RatFunc z = RatFunc::z(F2);
  std::vector<RatFunc> sq;
  for (auto& x : xs) sq.push_back(x * x);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) {
      RatFunc y = sq[i] + z * sq[j];
      rec.count("pairs");
      if (ht(y) > ell) continue;
      rec.count("pairs with |f(x)| <= 3");
      long long hx = std::max(ht(xs[i]), ht(xs[j]));
      if (hx > hb.h)
        rec.fail("x = (" + xs[i].str() + ", " + xs[j].str() + ") has height " + std::to_string(hx) +
                 " > h with f(x) = " + y.str());
    }
  rec.at_least("pairs with |f(x)| <= 3", 2, 2, false);
}

// ---------------------------------------------------------------- 8. witness maps

RatFunc cst(const FieldPtr& F, Elem a) { return RatFunc::constant(F, a); }

void witness_maps(Recorder& rec, const Options& o, std::mt19937_64& rng) {
  auto F2 = Field::prime(2);
  Localization L = Localization::parse(F2, "z");
  const int per1 = o.quick ? 4 : 20;
  auto H = AdditivePoly::parse("poly{z^2}*a1 + poly{1+z}*a2", F2);
  for (auto ftext : {"x1^2 + poly{z}*x1", "x1^2 + poly{z}*x2^2 + x1", "x1^2 + x1"}) {
    auto f = AdditivePoly::parse(ftext, F2);
    NameSupply names(f);
    auto nf = strongly_normalize(f, L, names);
    auto inst = make_logic1_instance(nf.fTilde, H, L);
    auto r = logic1_transform(inst, LinTerm::var(F2, Var{"u", Sort::R}));
    for (int t = 0; t < per1; ++t) {
      Assignment dec;
      for (auto& v : r.x) dec[v.name] = random_ring_elem(L, 3, 2, rng);
      for (auto& v : r.alpha) dec[v.name] = cst(F2, static_cast<Elem>(rng() % 2));
      RatFunc u = inst.f.eval(dec) + inst.H.eval(dec);
      std::string at = std::string("logic1 f=") + ftext + " u=" + u.str();
      auto id = image_decomposition(inst.f + inst.h, u, L);
      Assignment env = id.x;
      for (auto& g : r.gamma) {
        std::size_t i = static_cast<std::size_t>(inst.G.coeffs(g.name)[0].deg());
        env[g.name] = cst(F2, id.alpha.at(i));
      }
      Assignment ant = env;
      env["u"] = u;
      rec.require(eval_bounded_over_R(r.antecedent, env, 0, L), "antecedent: " + at);
      auto wit = logic1_forward(r, dec, ant);
      Assignment fwd = env;
      for (auto& [n, v] : wit) fwd[n] = v;
      rec.require(eval_bounded_over_R(r.pi1Matrix, fwd, 0, L), "forward: " + at);
      auto back = logic1_backward(r, ant, wit);
      rec.require(inst.f.eval(back) + inst.H.eval(back) == u, "backward: " + at);
      rec.count("logic1 instances");
    }
  }

  const int per2 = o.quick ? 10 : 50;
  auto phi = parse_formula(
      "exists x1:R, x2:R, a1:F (x1^2 + z*x2^2 + x1 + z*a1 = u and x1 + a1 != z and P{b | b + 1 != 0}(a1))",
      ParseOptions{F2});
  auto enf = to_existential_normal_form(phi, L);
  const auto& d = enf.disjuncts.at(0);
  auto r = logic2_transform(d, L);
  for (int guard = 0; rec.get("logic2 instances") < per2 && guard < 100 * per2; ++guard) {
    Assignment psi;
    for (auto& v : d.x) psi[v.name] = random_ring_elem(L, 2, 2, rng);
    for (auto& v : d.alpha) psi[v.name] = cst(F2, static_cast<Elem>(rng() % 2));
    RatFunc u = d.f.eval(psi) + d.H.eval(psi);
    Assignment env = psi;
    env["u"] = u;
    if (!eval_bounded_over_R(r.psiMatrix, env, 0, L)) continue;
    rec.count("logic2 instances");
    std::string at = "logic2 u=" + u.str();
    // Every (w, beta) with f(w) + H(beta) = u.
    for (Elem b = 0; b < 2; ++b) {
      Assignment bet{{d.alpha[0].name, cst(F2, b)}};
      for (auto& w : inverse_image(d.f, u - d.H.eval(bet), L)) {
        Assignment wb{{"u", u}, {r.beta[0].name, cst(F2, b)}};
        for (std::size_t i = 0; i < d.x.size(); ++i) wb[r.w[i].name] = w[i];
        rec.require(eval_bounded_over_R(r.antecedent, wb, 0, L), "antecedent: " + at);
        auto wit = logic2_forward(r, d, psi, wb);
        Assignment fwd = wb;
        for (auto& [n, v] : wit) fwd[n] = v;
        rec.require(eval_bounded_over_R(r.pi2Matrix, fwd, 0, L), "forward: " + at);
        auto back = logic2_backward(r, d, wb, wit);
        back["u"] = u;
        rec.require(eval_bounded_over_R(r.psiMatrix, back, 0, L), "backward: " + at);
        rec.count("logic2 (w, beta) pairs");
      }
    }
  }
  rec.at_least("logic1 instances", 50, 12, o.quick);
  rec.at_least("logic2 instances", 50, 10, o.quick);
}

// ---------------------------------------------------------------- 9. universalization

std::vector<Assignment> assignments(const std::vector<Var>& vars, const std::vector<RatFunc>& dom,
                                    const FieldPtr& F) {
  std::vector<Assignment> out{{}};
  for (auto& v : vars) {
    std::vector<Assignment> next;
    for (auto& a : out) {
      if (v.sort == Sort::R) {
        for (auto& x : dom) {
          auto b = a;
          b[v.name] = x;
          next.push_back(std::move(b));
        }
      } else {
        for (Elem e = 0; e < F->size(); ++e) {
          auto b = a;
          b[v.name] = cst(F, e);
          next.push_back(std::move(b));
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

void universalization(Recorder& rec, const Options& o, std::mt19937_64&) {
  auto F2 = Field::prime(2);
  Localization L = Localization::parse(F2, "z");
  auto lt = [&](const char* s) { return parse_term(s, ParseOptions{F2, Sort::F}); };
  auto rt = [&](const char* s) { return parse_term(s, ParseOptions{F2}); };
  Var g1{"g1", Sort::F}, g2{"g2", Sort::F};
  using Pairs = std::vector<std::pair<LinTerm, LinTerm>>;
  // Right-hand sides are v or v + b, so the y in chi never needs a larger
  // height than the assignment has and the ball semantics is exact.
  std::vector<BoundedExistential> corpus{
      {{g1}, {}, Pairs{{lt("g1"), rt("v")}}, {}, nullptr},
      {{g1, g2}, {}, Pairs{{lt("z*g1 + g2"), rt("v")}}, {}, nullptr},
      {{g1}, {}, Pairs{{lt("g1^2 + z*g1"), rt("v")}}, {}, nullptr},
      {{g1}, {}, Pairs{{lt("z^2*g1"), rt("v")}}, Pairs{{lt("g1"), rt("b:F")}}, nullptr},
      {{g1}, {}, {}, Pairs{{lt("g1"), rt("v")}}, nullptr},
      {{g1, g2}, {}, Pairs{{lt("g1 + z*g2"), rt("v")}}, {}, parse_formula("g1 = b", ParseOptions{F2, Sort::F, true})},
      {{g1, g2}, {lt("g1 + g2 + b")}, Pairs{{lt("z*g1"), rt("v")}}, {}, nullptr},
      {{g1, g2}, {}, Pairs{{lt("g1 + g2"), rt("v")}, {lt("z*g1"), rt("v + b:F")}}, {}, nullptr},
      {{g1, g2}, {}, Pairs{{lt("z^3*g1 + 1"), rt("v")}}, Pairs{{lt("z*g2"), rt("v + 1")}}, nullptr},
      {{g1, g2}, {}, {}, Pairs{{lt("g1 + z*g2"), rt("v")}, {lt("g2"), rt("v + b:F")}}, nullptr},
  };
  const unsigned cap = o.quick ? 2 : 4;
  rec.count("height cap", cap);
  auto dom = bounded_elements(L, cap);
  for (auto& pi : corpus) {
    auto chi = universalize_bounded(pi, L);
    auto phi = pi.to_formula();
    FormulaPtr g = chi;
    while (g->kind == FKind::Forall) g = g->kids[0];
    rec.require(is_quantifier_free(g), "output is not universal: " + to_string(phi));
    for (auto& env : assignments(free_vars(phi), dom, F2)) {
      rec.count("assignments");
      if (eval_bounded_over_R(chi, env, cap, L) != eval_bounded_over_R(phi, env, cap, L)) {
        std::string where;
        for (auto& [n, v] : env) where += " " + n + "=" + v.str();
        rec.fail("pi and chi differ: " + to_string(phi) + " at" + where);
      }
    }
    rec.count("corpus cases");
  }
}

// ---------------------------------------------------------------- 10. sentences

void sentences(Recorder& rec, const Options&, std::mt19937_64&) {
  struct Case {
    const char* field;
    const char* S;
    const char* phi;
    bool truth;
  };
  // Truth values argued by hand.
  const Case corpus[] = {
      {"p=2", "z", "exists x:R (x + x = 0 and x != 0)", true},
      {"p=3", "z", "exists x:R (x + x = 0 and x != 0)", false},
      {"p=2", "z", "exists a:F (a^2 = a and a != 0 and a != 1)", false},
      {"p=2,m=2", "z", "exists a:F (a^4 = a and a != 0 and a != 1)", true},
      {"p=2,m=2", "z", "exists a:R (inF(a) and a^2 = a and a != 0 and a != 1)", false},
      {"p=2", "z", "forall a:F (a^2 = a)", true},
      {"p=2,m=2", "z", "forall a:F (a^2 = a)", false},
      {"p=2", "z", "exists x:R (x^2 = z)", false},
      {"p=2", "z", "exists x:R (x^2 + z*x = 0 and x != 0)", true},
      {"p=2", "z", "exists x:R (z*x = 1)", true},
      {"p=2", "{}", "exists x:R (z*x = 1)", false},
      {"p=2", "z", "exists x:R (x^2 + x = z^2 + z and x != z and x != z + 1)", false},
      {"p=2", "z", "exists x:R (inF(x) and x^2 + x + 1 = 0)", false},
      {"p=2,m=2", "z", "exists x:R (inF(x) and x^2 + x + 1 = 0)", true},
      {"p=2", "z", "forall x:R (x^2 = x -> inF(x))", true},
      {"p=2", "z", "exists x:R (not inF(x) and x^2 + x = 0)", false},
      {"p=2", "z", "exists x:R (not inF(x) and x^2 + x = z^2 + z)", true},
      {"p=3", "z", "forall x:R exists y:R (y + y = x)", true},
      {"p=2", "z", "forall x:R exists y:R (y + y = x)", false},
      {"p=2", "z", "exists x:R forall a:F (x != a)", true},
  };
  for (auto& c : corpus) {
    auto F = Field::parse(c.field);
    Localization L = Localization::parse(F, c.S);
    std::string at = std::string(c.phi) + " over " + c.field + " S={" + c.S + "}";
    auto s = sentence_to_sigma(parse_formula(c.phi, ParseOptions{F}), L);
    rec.require(s->params.empty(), "sigma has parameters: " + at);
    rec.require(eval_sigma_over_F(*s, {}, F) == c.truth, "wrong truth value: " + at);
    rec.count("sentences");
  }
  rec.at_least("sentences", 10, 10, false);
}

struct Spec {
  const char* name;
  double limit;
  void (*body)(Recorder&, const Options&, std::mt19937_64&);
};

const Spec kSpecs[kCriteria] = {
    {"Hasse identities P1-P4", 30, hasse_identities},
    {"order inequality", 30, order_inequality},
    {"Wronskian criterion", 60, wronskian_criterion},
    {"normalization pipeline", 300, normalization},
    {"reduction witnesses", 300, reduction},
    {"image decomposition", 120, image_decomposition_suite},
    {"height bound search", 600, height_bound_search},
    {"logic witness maps", 120, witness_maps},
    {"universalization", 600, universalization},
    {"sentence translation", 300, sentences},
};

}  // namespace

Result run(int id, const Options& opt) {
  if (id < 1 || id > kCriteria) throw DomainError("no criterion " + std::to_string(id));
  const Spec& spec = kSpecs[id - 1];
  Result r;
  r.id = id;
  r.name = spec.name;
  r.limitSeconds = spec.limit;
  Recorder rec(r);
  std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(id));
  auto start = std::chrono::steady_clock::now();
  try {
    spec.body(rec, opt, rng);
  } catch (const std::exception& e) {
    rec.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.seconds > r.limitSeconds) rec.fail("time limit exceeded");
  r.pass = r.failureCount == 0;
  return r;
}

}  // namespace frobq::suites
