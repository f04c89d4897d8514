#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "frobq/bounds.hpp"
#include "frobq/errors.hpp"
#include "helpers.hpp"

using namespace frobq;
using testutil::random_p_basic;
using testutil::random_ring_elem;

namespace {

AdditivePoly A(const std::string& s, const FieldPtr& F) { return AdditivePoly::parse(s, F); }

}  // namespace

TEST_CASE("change_of_basis") {
  auto F2 = Field::prime(2);
  auto cob = change_of_basis(A("x1^2 + poly{z}*x2^2", F2));
  CHECK(cob.Delta.is_one());
  CHECK(cob.e[0][0].is_one());
  CHECK(cob.e[0][1].is_zero());
  CHECK(cob.e[1][1].is_one());
  CHECK_THROWS_AS(change_of_basis(A("x1^2 + poly{z^2}*x2^2", F2)), DomainError);
  CHECK_THROWS_AS(change_of_basis(A("x1^2", F2)), DomainError);

  std::mt19937_64 rng(501);
  for (auto F : {F2, Field::prime(3), Field::make(2, 2)})
    for (unsigned s = 1; s <= 2; ++s) {
      if (F->p() == 3 && s == 2) continue;
      for (int t = 0; t < 15; ++t) {
        auto f = random_p_basic(F, s, 3, rng);
        auto c = change_of_basis(f);  // identity checked inside
        CHECK(!c.Delta.is_zero());
        CHECK(c.Delta.over_prime_field());
      }
    }
}

TEST_CASE("splitting_exponents") {
  auto F2 = Field::prime(2);
  auto a = splitting_exponents(Poly::constant(F2, 1));
  CHECK(a.m == 1);
  CHECK(a.m0 == 0);
  auto b = splitting_exponents(Poly::from_ints(F2, {0, 0, 1}));
  CHECK(b.m == 1);
  CHECK(b.m0 == 1);
  auto c = splitting_exponents(Poly::from_ints(F2, {1, 1, 1}) * Poly::from_ints(F2, {1, 1, 0, 1}).pow(3));
  CHECK(c.m == 6);
  CHECK(c.m0 == 2);
  std::mt19937_64 rng(502);
  auto F3 = Field::prime(3);
  for (int t = 0; t < 40; ++t) {
    Poly d = testutil::random_nonzero_poly(t % 2 ? F3 : F2, 7, rng);
    auto r = splitting_exponents(d);  // divisibility checked inside
    CHECK(r.m >= 1);
  }
}

TEST_CASE("e_ord examples") {
  auto F2 = Field::prime(2);
  auto rep = e_ord(A("x1^2 + poly{z}*x2^2", F2));
  CHECK(rep.cob.Delta.is_one());
  CHECK(rep.m == 1);
  CHECK(rep.m0 == 0);
  CHECK(rep.Omega == 0);
  CHECK(rep.Eord == 3);
  CHECK(rep.C == -1);
  CHECK(rep.eps == EpsilonTuple{0, 1});

  auto lin = e_ord(A("x1", F2));
  CHECK(lin.Eord == 2);
  CHECK(lin.Omega == 0);

  // Lower terms do not change Delta, m, m0.
  auto g = e_ord(A("x1^2 + poly{z}*x2^2 + poly{1+z^3}*x1 + poly{z^2}*x2", F2));
  CHECK(g.cob.Delta == rep.cob.Delta);
  CHECK(g.m == rep.m);
  CHECK(g.m0 == rep.m0);
  CHECK(g.Omega >= rep.Omega);
}

TEST_CASE("reduce_mod_image on 1/z^k") {
  auto F2 = Field::prime(2);
  Localization L(F2, {Poly::z(F2)});
  auto f = A("x1^2 + poly{z}*x2^2", F2);
  auto rep = e_ord(f);
  for (int k = 0; k <= 20; ++k) {
    RatFunc u(Poly::constant(F2, 1), Poly::z(F2).pow(static_cast<unsigned>(k)));
    auto w = reduce_mod_image(f, u, L, rep);
    CHECK(check_reduction(f, u, w, rep.Eord).empty());
    if (k <= 2) CHECK(w.uPrime == u);
  }
}

TEST_CASE("reduce_mod_image random witnesses") {
  std::mt19937_64 rng(503);
  auto F2 = Field::prime(2);
  auto F4 = Field::make(2, 2);
  std::size_t violations = 0, runs = 0, steps = 0;
  for (auto F : {F2, F4})
    for (int Sset = 0; Sset < 2; ++Sset) {
      std::vector<Poly> S{Poly::z(F)};
      if (Sset) S.push_back(Poly::from_ints(F, {1, 1}));
      Localization L(F, S);
      for (unsigned s = 1; s <= 2; ++s) {
        auto f = random_p_basic(F, s, 2, rng);
        auto rep = e_ord(f);
        for (int t = 0; t < 15; ++t) {
          RatFunc u = random_ring_elem(L, 10, 6, rng);
          auto w = reduce_mod_image(f, u, L, rep);
          auto bad = check_reduction(f, u, w, rep.Eord);
          if (!bad.empty()) {
            MESSAGE(f.str() << " u=" << u.str() << " : " << bad[0]);
            ++violations;
          }
          steps += w.progress.size();
          ++runs;
        }
      }
    }
  CHECK(violations == 0);
  CHECK(runs == 120);
  CHECK(steps > 0);
}

TEST_CASE("Frobenius split agrees on small cases") {
  std::mt19937_64 rng(504);
  auto F2 = Field::prime(2);
  Localization L(F2, {Poly::z(F2), Poly::from_ints(F2, {1, 1})});
  auto f = A("poly{1+z}*x1^2 + poly{z^2}*x2^2 + x2", F2);
  auto rep = e_ord(f);
  CHECK(!rep.cob.Delta.is_one());
  for (int t = 0; t < 20; ++t) {
    RatFunc u = random_ring_elem(L, 8, 6, rng);
    auto w = reduce_mod_image(f, u, L, rep, SplitMode::Frobenius);
    CHECK(check_reduction(f, u, w, rep.Eord).empty());
  }
}

TEST_CASE("image_decomposition") {
  std::mt19937_64 rng(505);
  auto F2 = Field::prime(2);
  Localization L(F2, {Poly::z(F2), Poly::from_ints(F2, {1, 1})});
  auto f = A("x1^2 + poly{z}*x2^2 + poly{1+z}*x1", F2);
  auto d0 = image_decomposition(f, RatFunc(F2), L);
  for (auto& [k, v] : d0.x) CHECK(v.is_zero());
  for (auto a : d0.alpha) CHECK(a == 0);
  for (int t = 0; t < 30; ++t) {
    RatFunc u = random_ring_elem(L, 10, 5, rng);
    auto d = image_decomposition(f, u, L);
    CHECK(recombine(f, d) == u);
    CHECK(d.alpha.size() == d.N * (1 + d.e.deg()) + 1);
  }
}

TEST_CASE("pole_order_bound") {
  auto F2 = Field::prime(2);
  std::vector<RatFunc> b{RatFunc::constant(F2, 1), RatFunc::z(F2)};
  CHECK(pole_order_bound(b, 1, 0) == -1);
  CHECK(pole_order_bound(b, 1, 3) == -2);
  long long prev = 0;
  for (long long d = 0; d < 12; ++d) {
    long long c = pole_order_bound(b, 1, d);
    CHECK(c <= prev);
    prev = c;
  }
  std::vector<RatFunc> dep{RatFunc::constant(F2, 1), RatFunc(Poly::from_ints(F2, {0, 0, 1}))};
  CHECK_THROWS_AS(pole_order_bound(dep, 1, 0), DomainError);
}

TEST_CASE("pole_order_bound exhaustive scan") {
  // x in R^2, S = {z}, height <= 6, f(x) polynomial of degree <= 3.
  auto F2 = Field::prime(2);
  auto f = A("x1^2 + poly{z}*x2^2", F2);
  long long C = pole_order_bound(f, 0);
  CHECK(C == -1);
  std::vector<RatFunc> xs;
  for (std::uint32_t mask = 0; mask < (1u << 13); ++mask) {
    std::vector<Elem> c(13);
    for (int i = 0; i < 13; ++i) c[i] = (mask >> i) & 1;
    RatFunc x = RatFunc(Poly(F2, c)) / RatFunc(Poly::z(F2).pow(6));
    if (!x.is_zero() && height(x) > 6) continue;
    xs.push_back(x);
  }
  auto less = [](const RatFunc& a, const RatFunc& b) { return ratfunc_less(a, b); };
  std::map<RatFunc, std::vector<std::size_t>, decltype(less)> squares(less);
  for (std::size_t i = 0; i < xs.size(); ++i) squares[xs[i] * xs[i]].push_back(i);
  std::size_t hits = 0, bad = 0;
  RatFunc zf = RatFunc::z(F2);
  for (auto& x2 : xs)
    for (std::uint32_t pm = 0; pm < 16; ++pm) {
      Poly P(F2, {pm & 1, (pm >> 1) & 1, (pm >> 2) & 1, (pm >> 3) & 1});
      auto it = squares.find(RatFunc(P) - zf * x2 * x2);
      if (it == squares.end()) continue;
      for (auto i : it->second) {
        ++hits;
        for (auto* x : {&xs[i], &x2})
          if (!x->is_zero() && ord_at(*x, Place::at(Poly::z(F2))).value() < C) ++bad;
      }
    }
  CHECK(hits > 0);
  CHECK(bad == 0);
}

TEST_CASE("height_bound") {
  auto F2 = Field::prime(2);
  Localization L(F2, {Poly::z(F2)});
  auto f = A("x1^2 + poly{z}*x2^2", F2);
  auto hb = height_bound(f, 3, L);
  CHECK(hb.C_finite == -2);
  CHECK(hb.C_inf == -2);
  CHECK(hb.eta == 1);
  CHECK(hb.M == 1);
  CHECK(hb.h == 4);
  CHECK(height_bound(f, 0, L).h <= height_bound(f, 5, L).h);
  Localization L2(F2, {Poly::z(F2), Poly::from_ints(F2, {1, 1})});
  CHECK(height_bound(f, 3, L2).h >= hb.h);
  CHECK_THROWS_AS(height_bound(A("x1^2 + poly{z}*x2^2 + poly{1+z}*x2", F2), 3, L), DomainError);
}

TEST_CASE("inverse_image") {
  auto F2 = Field::prime(2);
  Localization L(F2, {Poly::z(F2)});
  auto f = A("x1^2 + poly{z}*x2^2", F2);
  auto zero = inverse_image(f, RatFunc(F2), L);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0][0].is_zero());
  CHECK(zero[0][1].is_zero());

  RatFunc w1 = RatFunc(Poly::from_ints(F2, {1, 1})) / RatFunc::z(F2);
  RatFunc w2 = RatFunc::z(F2);
  RatFunc y = f.eval({{"x1", w1}, {"x2", w2}});
  auto sols = inverse_image(f, y, L);
  bool found = false;
  for (auto& x : sols) {
    CHECK(f.eval({{"x1", x[0]}, {"x2", x[1]}}) == y);
    if (x[0] == w1 && x[1] == w2) found = true;
  }
  CHECK(found);
  // f is injective here (z is not a square), so exactly one solution.
  CHECK(sols.size() == 1);
}
