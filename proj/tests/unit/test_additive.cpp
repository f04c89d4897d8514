#include <random>

#include "doctest.h"
#include "frobq/additive.hpp"
#include "frobq/errors.hpp"
#include "helpers.hpp"

using namespace frobq;
using testutil::random_poly;
using testutil::random_ratfunc;

namespace {

RatFunc R(const std::string& s, const FieldPtr& F) { return parse_ratfunc(s, F); }

AdditivePoly random_additive(const FieldPtr& F, std::size_t nvars, unsigned max_s, int max_deg, std::mt19937_64& rng) {
  AdditivePoly f(F);
  auto Fp = Field::prime(F->p());
  for (std::size_t i = 1; i <= nvars; ++i) {
    unsigned s = static_cast<unsigned>(rng() % (max_s + 1));
    for (unsigned k = 0; k <= s; ++k) {
      Poly c = random_poly(Fp, max_deg, rng);
      f.add_term(Var{"x" + std::to_string(i), Sort::R}, k, Poly(F, c.coeffs()));
    }
  }
  return f;
}

}  // namespace

TEST_CASE("evaluation examples") {
  auto F2 = Field::prime(2);
  auto f = AdditivePoly::parse("poly{z}*x1^2 + x1", F2);
  CHECK(f.eval({{"x1", R("z", F2)}}) == R("z^3+z", F2));
  CHECK(f.eval({{"x1", RatFunc(F2)}}).is_zero());
  CHECK(f.degree() == 2);
  CHECK(AdditivePoly::parse("x^2 + y", F2).degree() == 2);
  CHECK(AdditivePoly::parse("x", F2).degree() == 1);
  CHECK_THROWS_AS(f.eval({}), DomainError);
  auto g = AdditivePoly::parse("x1 + a1", F2);
  CHECK_THROWS_AS(g.eval({{"x1", R("z", F2)}, {"a1", R("z", F2)}}), DomainError);
}

TEST_CASE("parser and printer") {
  auto F3 = Field::prime(3);
  auto f = AdditivePoly::parse("poly{z}*x1^9 + 2*x1^3 - x2 + poly{1+z}*a1", F3);
  CHECK(f.s_of("x1") == 2);
  CHECK(f.s_of("x2") == 0);
  CHECK(f.vars().size() == 3);
  CHECK(f.vars()[2].sort == Sort::F);
  CHECK(AdditivePoly::parse(f.str(), F3) == f);
  CHECK_THROWS_AS(AdditivePoly::parse("x1^2", F3), ParseError);
  CHECK_THROWS_AS(AdditivePoly::parse("poly{t}*x1", Field::make(3, 2)), ParseError);
  CHECK_THROWS_AS(AdditivePoly::parse("x1 +", F3), ParseError);
  CHECK(AdditivePoly::parse("0", F3).is_zero());
  CHECK(AdditivePoly::parse("x1 - x1", F3).is_zero());
}

TEST_CASE("additivity and F_p-linearity") {
  std::mt19937_64 rng(301);
  for (auto F : {Field::prime(2), Field::prime(3), Field::make(2, 2)}) {
    for (int i = 0; i < 60; ++i) {
      auto f = random_additive(F, 2, 2, 3, rng);
      Assignment a, b, ab, la;
      Elem lambda = static_cast<Elem>(rng() % F->p());
      for (auto& v : f.vars()) {
        a[v.name] = random_ratfunc(F, 3, rng);
        b[v.name] = random_ratfunc(F, 3, rng);
        ab[v.name] = a[v.name] + b[v.name];
        la[v.name] = a[v.name].scale(lambda);
      }
      CHECK(f.eval(ab) == f.eval(a) + f.eval(b));
      CHECK(f.eval(la) == f.eval(a).scale(lambda));
    }
  }
}

TEST_CASE("composition matches nested evaluation") {
  auto F2 = Field::prime(2);
  auto frob = AdditivePoly::parse("x^2", F2);
  CHECK(frob.substitute({{"x", frob}}) == AdditivePoly::parse("x^4", F2));
  std::mt19937_64 rng(302);
  for (auto F : {Field::prime(2), Field::prime(3)}) {
    for (int i = 0; i < 100; ++i) {
      auto f = random_additive(F, 2, 2, 2, rng);
      auto g1 = random_additive(F, 3, 1, 2, rng).rename({{"x1", "y1"}, {"x2", "y2"}, {"x3", "y3"}});
      auto g2 = random_additive(F, 2, 1, 2, rng).rename({{"x1", "y1"}, {"x2", "y3"}});
      g2.add_term(Var{"a1", Sort::F}, 1, Poly::z(F));
      auto h = f.substitute({{"x1", g1}, {"x2", g2}});
      CHECK(f.substitute({}) == f);
      for (int t = 0; t < 5; ++t) {
        Assignment low{{"y1", random_ratfunc(F, 2, rng)}, {"y2", random_ratfunc(F, 2, rng)},
                       {"y3", random_ratfunc(F, 2, rng)}, {"a1", RatFunc::constant(F, static_cast<Elem>(rng() % F->size()))}};
        Assignment mid{{"x1", g1.eval(low)}, {"x2", g2.eval(low)}};
        CHECK(h.eval(low) == f.eval(mid));
      }
    }
  }
}

TEST_CASE("frobenius twist equals composition with x^p") {
  std::mt19937_64 rng(303);
  auto F3 = Field::prime(3);
  auto frob = AdditivePoly::parse("y^3", F3);
  for (int i = 0; i < 30; ++i) {
    auto f = random_additive(F3, 2, 1, 2, rng);
    auto twisted = f.substitute({{"x1", frob.rename({{"y", "x1"}})}, {"x2", frob.rename({{"y", "x2"}})}});
    Assignment a{{"x1", random_ratfunc(F3, 2, rng)}, {"x2", random_ratfunc(F3, 2, rng)}};
    Assignment ap{{"x1", a["x1"].frob_pow(1)}, {"x2", a["x2"].frob_pow(1)}};
    CHECK(twisted.eval(a) == f.eval(ap));
    CHECK(f.frob_twist(1).eval(a) == f.eval(a).frob_pow(1));
  }
}

TEST_CASE("classification examples") {
  auto F2 = Field::prime(2);
  auto c1 = classify(AdditivePoly::parse("x1^2 + poly{z}*x2^2", F2));
  CHECK(c1.normalized);
  CHECK(c1.strongly_normalized);
  CHECK(c1.p_basic);
  auto c2 = classify(AdditivePoly::parse("x1^2 + poly{z^2}*x2^2", F2));
  CHECK_FALSE(c2.normalized);
  CHECK_FALSE(c2.strongly_normalized);
  auto c3 = classify(AdditivePoly::parse("x^2", F2));
  CHECK(c3.normalized);
  CHECK_FALSE(c3.p_basic);
  // z^3 = z^2 * z, so {z, z^3} is dependent; {1, z^2+z} is independent with equal residues.
  CHECK_FALSE(classify(AdditivePoly::parse("poly{z}*x1^2 + poly{z^3}*x2^2", F2)).normalized);
  auto c4 = classify(AdditivePoly::parse("x1^2 + poly{z^2+z}*x2^2", F2));
  CHECK(c4.normalized);
  CHECK_FALSE(c4.strongly_normalized);
  auto c5 = classify(AdditivePoly::parse("x1^2 + x2", F2));
  CHECK_FALSE(c5.all_same_s);
  CHECK_FALSE(c5.normalized);
}

TEST_CASE("classification ignores variable order") {
  std::mt19937_64 rng(304);
  for (auto F : {Field::prime(2), Field::prime(3)}) {
    for (int i = 0; i < 40; ++i) {
      auto f = random_additive(F, 3, 1, 3, rng);
      AdditivePoly rev(F);
      auto es = f.entries();
      for (auto it = es.rbegin(); it != es.rend(); ++it)
        for (std::size_t k = 0; k < it->c.size(); ++k) rev.add_term(it->var, static_cast<unsigned>(k), it->c[k]);
      CHECK(rev == f);
      auto a = classify(f), b = classify(rev);
      CHECK(a.normalized == b.normalized);
      CHECK(a.strongly_normalized == b.strongly_normalized);
      CHECK(a.p_basic == b.p_basic);
    }
  }
}

TEST_CASE("proper transformations") {
  auto F2 = Field::prime(2);
  std::vector<Var> xs{{"x1", Sort::R}, {"x2", Sort::R}};
  auto id = ProperTransformation::identity(F2, xs);
  std::vector<RatFunc> target{R("1/z", F2), R("z^2+1", F2)};
  auto pre = id.preimage(target);
  CHECK(pre.at("x1") == target[0]);
  CHECK(id.apply(pre) == target);
  // x1 = y1, x2 = y2 + z*y1: preimage y2 = x2 - z*x1.
  auto shear = ProperTransformation::step(
      xs, {AdditivePoly::parse("y1", F2), AdditivePoly::parse("y2 + poly{z}*y1", F2)}, {{"y1", Sort::R}, {"y2", Sort::R}},
      [F2](const std::vector<RatFunc>& t) {
        return Assignment{{"y1", t[0]}, {"y2", t[1] - RatFunc::z(F2) * t[0]}};
      });
  CHECK(shear.apply(shear.preimage(target)) == target);
  auto both = shear.after(ProperTransformation::step(
      {{"y1", Sort::R}, {"y2", Sort::R}}, {AdditivePoly::parse("w1", F2), AdditivePoly::parse("w2 + poly{z}*w1", F2)},
      {{"w1", Sort::R}, {"w2", Sort::R}}, [F2](const std::vector<RatFunc>& t) {
        return Assignment{{"w1", t[0]}, {"w2", t[1] - RatFunc::z(F2) * t[0]}};
      }));
  auto pre2 = both.preimage(target);
  CHECK(pre2.count("w1") == 1);
  CHECK(pre2.count("y1") == 0);
  CHECK(both.apply(pre2) == target);
  auto bad = ProperTransformation::step(xs, {AdditivePoly::parse("y1", F2), AdditivePoly::parse("y2", F2)},
                                        {{"y1", Sort::R}, {"y2", Sort::R}},
                                        [](const std::vector<RatFunc>& t) { return Assignment{{"y1", t[1]}, {"y2", t[0]}}; });
  CHECK_THROWS_AS(bad.preimage(target), InvariantError);
  CHECK_THROWS_AS(ProperTransformation::step(xs, {}, {}, nullptr), DomainError);
}
