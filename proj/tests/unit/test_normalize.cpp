#include <random>

#include "doctest.h"
#include "frobq/errors.hpp"
#include "frobq/normalize.hpp"
#include "helpers.hpp"
#include "symbolic_oracle.hpp"

using namespace frobq;
using testutil::expand_composition;
using testutil::random_additive;
using testutil::random_ring_elem;
using testutil::to_mpoly;

namespace {

AdditivePoly A(const std::string& s, const FieldPtr& F) { return AdditivePoly::parse(s, F); }

void check_result(const AdditivePoly& f, const NormalizationResult& r, const Localization& L, std::mt19937_64& rng) {
  CHECK(expand_composition(f, r.xi.as_substitution()) == to_mpoly(r.fTilde + r.G));
  CHECK(r.fTilde.degree() <= std::max<std::uint64_t>(f.degree(), 1));
  for (auto& v : r.G.vars()) CHECK(v.sort == Sort::F);
  for (auto& v : r.fTilde.vars()) CHECK(v.sort == Sort::R);
  for (int t = 0; t < 5; ++t) {
    std::vector<RatFunc> target;
    for (std::size_t i = 0; i < r.xi.targets().size(); ++i) target.push_back(random_ring_elem(L, 4, 2, rng));
    auto pre = r.xi.preimage(target);
    CHECK(r.xi.apply(pre) == target);
  }
}

}  // namespace

TEST_CASE("eliminate_dependence examples") {
  auto F2 = Field::prime(2);
  Localization L(F2, {Poly::z(F2)});
  NameSupply names;
  auto f = A("x1^2 + poly{z}*x2^2", F2);
  auto r = eliminate_dependence(f, L, names);
  CHECK(r.fTilde == f);
  CHECK(r.G.is_zero());
  auto g = A("x1^2 + poly{z^2}*x2^2", F2);
  std::mt19937_64 rng(401);
  auto rg = eliminate_dependence(g, L, names);
  CHECK(is_p_free(rg.fTilde));
  CHECK(rg.fTilde.vars().size() < 2);
  check_result(g, rg, L, rng);
}

TEST_CASE("equalize_degrees example") {
  auto F2 = Field::prime(2);
  Localization L(F2, {});
  NameSupply names;
  CHECK_FALSE(is_p_free(A("x1^2 + x2", F2)));
  auto f = A("x1^4 + poly{z}*x2^2", F2);
  REQUIRE(is_p_free(f));
  auto r = equalize_degrees(f, L, names);
  CHECK(r.fTilde.vars().size() == 3);
  CHECK(classify(r.fTilde).normalized);
  std::mt19937_64 rng(402);
  check_result(f, r, L, rng);
  auto same = equalize_degrees(A("x1^2 + poly{z}*x2^2", F2), L, names);
  CHECK(same.fTilde == A("x1^2 + poly{z}*x2^2", F2));
}

TEST_CASE("strongly_normalize example") {
  auto F2 = Field::prime(2);
  Localization L(F2, {Poly::z(F2)});
  NameSupply names;
  auto f = A("x1^2 + poly{z^2+z}*x2^2", F2);
  auto r = strongly_normalize(f, L, names);
  CHECK(classify(r.fTilde).strongly_normalized);
  std::mt19937_64 rng(403);
  check_result(f, r, L, rng);
  auto g = A("x1^2 + poly{z}*x2^2", F2);
  CHECK(strongly_normalize(g, L, names).fTilde == g);
}

TEST_CASE("p-basic completion") {
  auto F2 = Field::prime(2);
  NameSupply names;
  auto h = p_basic_completion(A("x1^2", F2), names);
  CHECK(h == A("poly{z}*v1^2", F2));
  CHECK(classify(A("x1^2", F2) + h).p_basic);
  CHECK(p_basic_completion(A("x1^2 + poly{z}*x2^2", F2), names).is_zero());
  std::mt19937_64 rng(404);
  for (auto F : {Field::prime(2), Field::prime(3)}) {
    Localization L(F, {Poly::z(F)});
    for (int i = 0; i < 30; ++i) {
      NameSupply ns;
      auto f = random_additive(F, 1 + rng() % 3, 1, 3, rng);
      auto r = normalize_full(f, L, ns);
      auto hh = p_basic_completion(r.fTilde, ns);
      auto cls = classify(r.fTilde + hh);
      CHECK(cls.p_basic);
      CHECK(cls.strongly_normalized);
    }
  }
}

TEST_CASE("normalize_full on random polynomials") {
  std::mt19937_64 rng(405);
  int nontrivial = 0;
  for (auto F : {Field::prime(2), Field::prime(3)}) {
    Localization L(F, {Poly::z(F)});
    for (int i = 0; i < 40; ++i) {
      auto f = random_additive(F, 1 + rng() % 3, 2, 4, rng);
      auto r = normalize_full(f, L);
      CHECK(classify(r.fTilde).strongly_normalized);
      CHECK(r.fTilde.vars().size() <= f.degree());
      nontrivial += !r.G.is_zero();
      check_result(f, r, L, rng);
    }
  }
  CHECK(nontrivial > 0);
}

TEST_CASE("equalizing degrees can add variables") {
  // Im(f) = R^4 + z R^4 + z^3 R^4 needs three degree-4 variables.
  auto F2 = Field::prime(2);
  Localization L(F2, {Poly::z(F2)});
  auto f = A("x1^4 + poly{z}*x2^2", F2);
  auto r = normalize_full(f, L);
  CHECK(r.fTilde.vars().size() == 3);
  CHECK(classify(r.fTilde).strongly_normalized);
}

TEST_CASE("normalize_full carries F-variables into G") {
  auto F2 = Field::prime(2);
  Localization L(F2, {});
  auto f = A("x1^2 + poly{z^2}*x2^2 + poly{z}*a1", F2);
  auto r = normalize_full(f, L);
  CHECK(r.G.has_var("a1"));
  CHECK(expand_composition(f, r.xi.as_substitution()) == to_mpoly(r.fTilde + r.G));
  CHECK_THROWS_AS(eliminate_dependence(f, L, *std::make_unique<NameSupply>()), DomainError);
}
