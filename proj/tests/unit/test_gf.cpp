#include <random>
#include <set>

#include "doctest.h"
#include "frobq/errors.hpp"
#include "frobq/ratfun.hpp"

using namespace frobq;

TEST_CASE("F_4 multiplication table entries") {
  auto F = Field::parse("p=2,m=2,mod=t^2+t+1");
  Elem t = F->gen();
  CHECK(F->mul(t, t) == F->parse_elem("t+1"));
  CHECK(F->inv(t) == F->parse_elem("t+1"));
  CHECK(F->frob(t) == F->parse_elem("t+1"));
  for (Elem a : F->elements()) CHECK(F->mul(1, a) == a);
  CHECK_THROWS_AS(F->inv(0), DomainError);
}

TEST_CASE("default modulus for F_4 is t^2+t+1") {
  auto F = Field::make(2, 2);
  CHECK(F->spec_string() == "p=2,m=2,mod=t^2+t+1");
}

TEST_CASE("field spec validation") {
  CHECK_THROWS_AS(Field::parse("p=4"), DomainError);
  CHECK_THROWS_AS(Field::parse("p=2,m=2,mod=t^2+1"), DomainError);
  CHECK_THROWS_AS(Field::parse("q=2"), ParseError);
  CHECK(Field::parse("p=3")->size() == 3);
}

TEST_CASE("field axioms hold exhaustively for small fields") {
  for (auto spec : {"p=2", "p=3", "p=2,m=2", "p=5", "p=7", "p=2,m=3", "p=3,m=2"}) {
    auto F = Field::parse(spec);
    auto E = F->elements();
    for (Elem a : E) {
      CHECK(F->add(a, F->neg(a)) == 0);
      if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
      for (Elem b : E) {
        CHECK(F->add(a, b) == F->add(b, a));
        CHECK(F->mul(a, b) == F->mul(b, a));
        for (Elem c : E) {
          CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
          CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
          CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("F_9 is closed under add and mul with 9 distinct elements") {
  auto F = Field::make(3, 2);
  auto E = F->elements();
  std::set<Elem> s(E.begin(), E.end());
  CHECK(s.size() == 9);
  for (Elem a : E)
    for (Elem b : E) {
      CHECK(s.count(F->add(a, b)) == 1);
      CHECK(s.count(F->mul(a, b)) == 1);
    }
}

TEST_CASE("frobenius agrees with p-fold multiplication and is additive") {
  std::mt19937_64 rng(7);
  for (auto spec : {"p=2,m=2", "p=3,m=2", "p=2,m=4", "p=5,m=2"}) {
    auto F = Field::parse(spec);
    for (int i = 0; i < 100; ++i) {
      Elem a = rng() % F->size(), b = rng() % F->size();
      Elem direct = 1;
      for (std::uint32_t k = 0; k < F->p(); ++k) direct = F->mul(direct, a);
      CHECK(F->frob(a) == direct);
      CHECK(F->frob(F->add(a, b)) == F->add(F->frob(a), F->frob(b)));
      CHECK(F->frob(F->mul(a, b)) == F->mul(F->frob(a), F->frob(b)));
      CHECK(F->frob_inv(F->frob(a)) == a);
    }
    std::set<Elem> img;
    for (Elem a : F->elements()) {
      img.insert(F->frob(a));
      CHECK(F->frob_k(a, F->m()) == a);
    }
    CHECK(img.size() == F->size());
  }
  auto F2 = Field::prime(7);
  for (Elem a : F2->elements()) CHECK(F2->frob(a) == a);
}

TEST_CASE("element text round trip") {
  auto F = Field::make(3, 2);
  for (Elem a : F->elements()) CHECK(F->parse_elem(F->str(a)) == a);
  auto P = Field::prime(5);
  CHECK(P->str(3) == "3");
  CHECK(P->parse_elem("8") == 3);
}

TEST_CASE("binomials mod p match Pascal's triangle") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    std::vector<std::vector<std::uint32_t>> T(40);
    for (std::size_t n = 0; n < 40; ++n) {
      T[n].assign(n + 1, 1);
      for (std::size_t k = 1; k < n; ++k) T[n][k] = (T[n - 1][k - 1] + T[n - 1][k]) % p;
      for (std::size_t k = 0; k <= n; ++k) CHECK(binom_mod(n, k, p) == T[n][k]);
      CHECK(binom_mod(n, n + 1, p) == 0);
    }
  }
}

namespace {
bool has_root(const Poly& q) {
  for (Elem a : q.field()->elements())
    if (q.eval(a) == 0) return true;
  return false;
}
}  // namespace

TEST_CASE("remains_irreducible") {
  auto F4 = Field::make(2, 2), F8 = Field::make(2, 3), F2 = Field::prime(2);
  CHECK(remains_irreducible(parse_poly("z", F4), F4));
  Poly q4 = parse_poly("z^2+z+1", F4), q8 = parse_poly("z^2+z+1", F8);
  // Degree 2: irreducible iff no root.
  CHECK(remains_irreducible(q4, F4) == !has_root(q4));
  CHECK(remains_irreducible(q4, F4) == false);
  CHECK(remains_irreducible(q8, F8) == !has_root(q8));
  CHECK(remains_irreducible(q8, F8) == true);
  CHECK_THROWS_AS(remains_irreducible(parse_poly("z^2+1", F2), F2), DomainError);
}
