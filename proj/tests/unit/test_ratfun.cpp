#include <random>

#include "doctest.h"
#include "frobq/errors.hpp"
#include "helpers.hpp"

using namespace frobq;
using testutil::random_nonzero_ratfunc;
using testutil::random_poly;
using testutil::random_ratfunc;
using testutil::random_ring_elem;

namespace {
RatFunc R(const std::string& s, const FieldPtr& F) { return parse_ratfunc(s, F); }
}  // namespace

TEST_CASE("rational arithmetic examples") {
  auto F = Field::prime(2);
  CHECK(R("1/z", F) + R("1/(z+1)", F) == R("1/(z^2+z)", F));
  RatFunc a = R("(z^3+z)/(z^2+1)", F);
  CHECK((a - a).is_zero());
  CHECK(R("(z+1)/z", F) * R("z/(z+1)", F) == R("1", F));
  CHECK_THROWS_AS(a / RatFunc(F), DomainError);
  // Canonical form: monic denominator, reduced.
  auto F3 = Field::prime(3);
  RatFunc b = R("(2*z+2)/(2*z^2+2*z)", F3);
  CHECK(b.den() == parse_poly("z", F3));
  CHECK(b.num() == parse_poly("1", F3));
}

TEST_CASE("field axioms for rational functions on random samples") {
  std::mt19937_64 rng(11);
  auto F = Field::make(3, 2);
  for (int i = 0; i < 200; ++i) {
    RatFunc a = random_ratfunc(F, 4, rng), b = random_ratfunc(F, 4, rng), c = random_nonzero_ratfunc(F, 4, rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * c) / c == a);
    CHECK(a - b + b == a);
  }
}

TEST_CASE("in_ring") {
  auto F = Field::prime(2);
  Localization L(F, {parse_poly("z", F)});
  CHECK(in_ring(R("1/z", F), L));
  CHECK(!in_ring(R("1/(z+1)", F), L));
  std::mt19937_64 rng(3);
  auto F4 = Field::make(2, 2);
  Localization L2(F4, {parse_poly("z", F4), parse_poly("z+1", F4)});
  for (int i = 0; i < 500; ++i) CHECK(in_ring(random_ring_elem(L2, 6, 3, rng), L2));
}

TEST_CASE("localization validation") {
  auto F4 = Field::make(2, 2);
  CHECK_THROWS_AS(Localization(F4, {parse_poly("z^2+z+1", F4)}), DomainError);
  CHECK_THROWS_AS(Localization(F4, {parse_poly("t*z", F4)}), DomainError);
  CHECK_THROWS_AS(Localization(F4, {parse_poly("z", F4), parse_poly("z", F4)}), DomainError);
  auto F8 = Field::make(2, 3);
  CHECK_NOTHROW(Localization(F8, {parse_poly("z^2+z+1", F8)}));
}

TEST_CASE("orders and heights") {
  auto F = Field::prime(2);
  CHECK(ord_at(R("1/z^3", F), Place::at(parse_poly("z", F))).value() == -3);
  CHECK(ord_at(R("z^2/(z+1)", F), Place::inf()).value() == -1);
  Ord o = ord_at(RatFunc(F), Place::at(parse_poly("z", F)));
  CHECK(o.is_infinite());
  CHECK_THROWS_AS(o.value(), DomainError);
  CHECK(height(R("z^2/(z+1)", F)) == 2);
  CHECK(height(R("1", F)) == 0);
  CHECK_THROWS_AS(height(RatFunc(F)), DomainError);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    RatFunc x = random_nonzero_ratfunc(F, 6, rng);
    CHECK(height(x) == height(x.inv()));
  }
}

TEST_CASE("degree-sum identity over brute-force enumerated places") {
  std::mt19937_64 rng(17);
  for (auto spec : {"p=2", "p=3"}) {
    auto F = Field::parse(spec);
    std::vector<Poly> places;
    // All monic irreducibles of degree <= 4, found by trial division.
    for (int d = 1; d <= 4; ++d) {
      std::uint64_t count = 1;
      for (int k = 0; k < d; ++k) count *= F->p();
      for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<Elem> c(d + 1, 0);
        std::uint64_t x = code;
        for (int k = 0; k < d; ++k) {
          c[k] = x % F->p();
          x /= F->p();
        }
        c[d] = 1;
        Poly g(F, c);
        bool irr = true;
        for (auto& h : places)
          if (2 * h.deg() <= d && g.divisible_by(h)) irr = false;
        if (irr) places.push_back(g);
      }
    }
    for (int i = 0; i < 200; ++i) {
      RatFunc x = RatFunc(testutil::random_nonzero_poly(F, 4, rng), testutil::random_nonzero_poly(F, 4, rng));
      long long poles = 0, zeros = 0;
      for (auto& Q : places) {
        long long o = ord_at(x, Place{false, Q}).value();
        if (o < 0) poles += -o * Q.deg();
        if (o > 0) zeros += o * Q.deg();
      }
      CHECK(poles == x.den().deg());
      CHECK(zeros == x.num().deg());
    }
  }
}

TEST_CASE("partial fractions") {
  auto F = Field::prime(2);
  auto pf = partial_fractions(R("1/(z*(z+1))", F));
  CHECK(pf.polyPart.is_zero());
  REQUIRE(pf.terms.size() == 2);
  CHECK(pf.terms[0].Q == parse_poly("z", F));
  CHECK(pf.terms[1].Q == parse_poly("z+1", F));
  CHECK(pf.terms[0].d.is_one());
  auto pg = partial_fractions(R("z^5+z+1", F));
  CHECK(pg.terms.empty());
  CHECK(pg.polyPart == parse_poly("z^5+z+1", F));
  std::mt19937_64 rng(23);
  for (auto spec : {"p=2", "p=3", "p=2,m=2"}) {
    auto G = Field::parse(spec);
    for (int i = 0; i < 350; ++i) {
      RatFunc x = random_ratfunc(G, 7, rng);
      auto form = partial_fractions(x);
      CHECK(recombine(form, G) == x);
      for (auto& t : form.terms) {
        CHECK(t.d.deg() < t.Q.deg());
        CHECK(!t.d.is_zero());
      }
      auto again = partial_fractions(recombine(form, G));
      CHECK(again.terms.size() == form.terms.size());
      CHECK(again.polyPart == form.polyPart);
    }
  }
}

TEST_CASE("division with remainder") {
  auto F = Field::prime(2);
  Localization L0(F, {});
  auto d = divide_with_remainder(R("z^3+1", F), parse_poly("z^2+z", F), L0);
  CHECK(d.v == R("z+1", F));
  CHECK(d.r == parse_poly("z+1", F));
  Localization L(F, {parse_poly("z", F)});
  Poly c = parse_poly("z+1", F);
  auto e = divide_with_remainder(R("1/z", F), c, L);
  CHECK(e.v * RatFunc(c) + RatFunc(e.r) == R("1/z", F));
  CHECK(e.r.deg() < 1);
  CHECK(in_ring(e.v, L));
  auto f = divide_with_remainder(RatFunc(c), c, L);
  CHECK(f.v == R("1", F));
  CHECK(f.r.is_zero());
  CHECK_THROWS_AS(divide_with_remainder(R("1/z", F), parse_poly("1", F), L), DomainError);
  CHECK_THROWS_AS(divide_with_remainder(R("1/(z+1)", F), c, L), DomainError);
}

TEST_CASE("division with remainder is unique when c avoids S") {
  std::mt19937_64 rng(29);
  auto F = Field::prime(2);
  Localization L(F, {parse_poly("z", F), parse_poly("z^2+z+1", F)});
  for (int i = 0; i < 200; ++i) {
    RatFunc u = random_ring_elem(L, 6, 3, rng);
    Poly c = testutil::random_nonzero_poly(F, 3, rng);
    if (c.deg() < 1 || !gcd(c, L.e()).is_one()) continue;
    auto dr = divide_with_remainder(u, c, L);
    CHECK(dr.v * RatFunc(c) + RatFunc(dr.r) == u);
    CHECK(in_ring(dr.v, L));
    // Independent check: exactly one r of degree < deg c makes (u - r)/c lie in R.
    int hits = 0;
    for (std::uint32_t code = 0; code < (1u << c.deg()); ++code) {
      std::vector<Elem> rc(c.deg());
      for (int k = 0; k < c.deg(); ++k) rc[k] = (code >> k) & 1;
      Poly r(F, rc);
      if (in_ring((u - RatFunc(r)) / RatFunc(c), L)) {
        ++hits;
        CHECK(r == dr.r);
      }
    }
    CHECK(hits == 1);
  }
}

TEST_CASE("division with remainder when c shares a factor with S") {
  std::mt19937_64 rng(31);
  auto F = Field::make(2, 2);
  Localization L(F, {parse_poly("z", F)});
  for (int i = 0; i < 100; ++i) {
    RatFunc u = random_ring_elem(L, 6, 3, rng);
    Poly c = parse_poly("z^2*(z+1)", F);
    auto dr = divide_with_remainder(u, c, L);
    CHECK(dr.v * RatFunc(c) + RatFunc(dr.r) == u);
    CHECK(dr.r.deg() < c.deg());
    CHECK(in_ring(dr.v, L));
  }
}

TEST_CASE("base-c expansion") {
  auto F = Field::prime(3);
  Localization L0(F, {});
  Poly c = parse_poly("z^2+1", F);
  auto ex = expand_base_c(RatFunc(c * c), c, 2, L0);
  CHECK(ex.digits[0].is_zero());
  CHECK(ex.digits[1].is_zero());
  CHECK(ex.digits[2].is_one());
  CHECK(ex.v.is_zero());
  // Polynomial digits agree with repeated Euclidean division.
  Poly u = parse_poly("z^9+2*z^5+z+2", F);
  auto e2 = expand_base_c(RatFunc(u), c, 8, L0);
  Poly cur = u;
  for (int i = 0; i <= 8; ++i) {
    CHECK(e2.digits[i] == cur % c);
    cur = cur / c;
  }
  CHECK(e2.v.is_zero());
  std::mt19937_64 rng(37);
  auto F4 = Field::make(2, 2);
  Localization L(F4, {parse_poly("z", F4), parse_poly("z+1", F4)});
  for (int i = 0; i < 100; ++i) {
    RatFunc w = random_ring_elem(L, 6, 3, rng);
    Poly b = testutil::random_nonzero_poly(F4, 3, rng);
    if (b.deg() < 1) continue;
    int N = static_cast<int>(rng() % 5);
    auto e = expand_base_c(w, b, N, L);
    RatFunc acc(F4), pw = RatFunc::constant(F4, 1);
    for (int k = 0; k <= N; ++k) {
      acc += RatFunc(e.digits[k]) * pw;
      CHECK(e.digits[k].deg() < b.deg());
      pw = pw * RatFunc(b);
    }
    CHECK(acc + e.v * pw == w);
  }
}

TEST_CASE("q-power decomposition") {
  auto F = Field::prime(2);
  auto d = q_power_decomposition(R("z^3", F), 1);
  CHECK(d[0].is_zero());
  CHECK(d[1] == R("z", F));
  auto d2 = q_power_decomposition(R("z^2", F), 1);
  CHECK(d2[0] == R("z", F));
  CHECK(d2[1].is_zero());
  std::mt19937_64 rng(41);
  for (auto spec : {"p=2", "p=3", "p=2,m=2", "p=3,m=2"}) {
    auto G = Field::parse(spec);
    for (unsigned s = 0; s <= 2; ++s) {
      for (int i = 0; i < 50; ++i) {
        RatFunc g = random_ratfunc(G, 6, rng);
        auto parts = q_power_decomposition(g, s);
        RatFunc acc(G);
        for (std::size_t k = 0; k < parts.size(); ++k)
          acc += parts[k].frob_pow(s) * RatFunc(Poly::monomial(G, 1, k));
        CHECK(acc == g);
      }
    }
  }
}

TEST_CASE("factorization multiplies back and has irreducible factors") {
  std::mt19937_64 rng(43);
  for (auto spec : {"p=2", "p=3", "p=2,m=2", "p=5"}) {
    auto F = Field::parse(spec);
    for (int i = 0; i < 100; ++i) {
      Poly f = testutil::random_nonzero_poly(F, 12, rng);
      if (f.deg() < 1) continue;
      auto fs = factor(f);
      Poly prod = Poly::constant(F, f.lc());
      for (auto& [g, e] : fs) {
        prod = prod * g.pow(e);
        // Irreducible: no factor of degree <= deg/2 by a root/gcd test against x^{q^k} - x.
        for (int k = 1; 2 * k <= g.deg(); ++k) {
          Poly xq = powmod(Poly::z(F), 1, g);
          for (int j = 0; j < k; ++j) xq = powmod(xq, F->size(), g);
          CHECK(gcd(g, xq - Poly::z(F)).is_one());
        }
      }
      CHECK(prod == f);
    }
  }
}

TEST_CASE("parser") {
  auto F = Field::make(2, 2);
  RatFunc x = parse_ratfunc("1 + z^2 + t*z^3", F);
  CHECK(x.num().coeff(3) == F->gen());
  CHECK(parse_ratfunc(x.str(), F) == x);
  CHECK(parse_ratfunc("(z+1)/(z^2+1)", F) == parse_ratfunc("1/(z+1)", F));
  CHECK_THROWS_AS(parse_ratfunc("z +* 1", F), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("1/0", F), ParseError);
  CHECK(parse_ratfunc("z^-2", F) == parse_ratfunc("1/z^2", F));
}
