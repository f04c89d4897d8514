#include <random>

#include "doctest.h"
#include "frobq/errors.hpp"
#include "frobq/hasse.hpp"
#include "helpers.hpp"

using namespace frobq;
using testutil::random_nonzero_poly;
using testutil::random_nonzero_ratfunc;
using testutil::random_ratfunc;
using testutil::taylor_oracle;

namespace {

RatFunc R(const std::string& s, const FieldPtr& F) { return parse_ratfunc(s, F); }

}  // namespace

TEST_CASE("hasse derivative examples") {
  auto F2 = Field::prime(2);
  CHECK(hasse_derivative(R("z^3", F2), 1) == R("z^2", F2));
  CHECK(hasse_derivative(R("z^2", F2), 2) == R("1", F2));
  CHECK(hasse_derivative(R("1/z", F2), 1) == R("1/z^2", F2));
  CHECK(hasse_derivative(R("(z+1)/(z^2+z+1)", F2), 0) == R("(z+1)/(z^2+z+1)", F2));
  auto F3 = Field::prime(3);
  // D_1(1/z) = -1/z^2; D_2(1/z) = 1/z^3.
  CHECK(hasse_derivative(R("1/z", F3), 1) == R("-1/z^2", F3));
  CHECK(hasse_derivative(R("1/z", F3), 2) == R("1/z^3", F3));
  CHECK(hasse_derivative(R("z^5", F3), 3) == R("z^2", F3) * RatFunc::constant(F3, 1));  // C(5,3) = 10 = 1
}

TEST_CASE("hasse derivative agrees with the Taylor-series oracle") {
  std::mt19937_64 rng(101);
  for (auto F : {Field::prime(2), Field::prime(3), Field::make(2, 2)}) {
    for (int i = 0; i < 120; ++i) {
      RatFunc x = random_ratfunc(F, 6, rng);
      unsigned eps = static_cast<unsigned>(rng() % 9);
      CHECK(hasse_derivative(x, eps) == taylor_oracle(x, eps));
    }
  }
}

TEST_CASE("hasse inverse formula matches the oracle") {
  std::mt19937_64 rng(102);
  for (auto F : {Field::prime(2), Field::prime(3), Field::make(2, 2)}) {
    for (int i = 0; i < 80; ++i) {
      Poly f = random_nonzero_poly(F, 5, rng);
      unsigned eps = static_cast<unsigned>(rng() % 9);
      CHECK(hasse_inverse(f, eps) == taylor_oracle(RatFunc(Poly::constant(F, 1), f), eps));
    }
  }
  CHECK_THROWS_AS(hasse_inverse(Poly(Field::prime(2)), 1), DomainError);
}

TEST_CASE("linearity and Leibniz rule") {
  std::mt19937_64 rng(103);
  for (auto F : {Field::prime(2), Field::prime(3), Field::make(2, 2)}) {
    for (int i = 0; i < 60; ++i) {
      RatFunc f = random_ratfunc(F, 5, rng), g = random_ratfunc(F, 5, rng);
      unsigned eps = static_cast<unsigned>(rng() % 9);
      CHECK(hasse_derivative(f + g, eps) == hasse_derivative(f, eps) + hasse_derivative(g, eps));
      RatFunc lhs = hasse_derivative(f * g, eps), rhs(F);
      for (unsigned k = 0; k <= eps; ++k) rhs += hasse_derivative(f, k) * hasse_derivative(g, eps - k);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("p-th power rule") {
  auto F2 = Field::prime(2);
  std::mt19937_64 rng(104);
  for (int i = 0; i < 30; ++i) {
    RatFunc x = random_ratfunc(F2, 4, rng);
    CHECK(check_p3(x, 1, 1).is_zero());
    CHECK(check_p3(x, 1, 2) == hasse_derivative(x, 1).frob_pow(1));
  }
  for (auto F : {Field::prime(2), Field::prime(3), Field::make(2, 2)}) {
    for (int i = 0; i < 100; ++i) {
      RatFunc x = random_ratfunc(F, 4, rng);
      unsigned m = static_cast<unsigned>(rng() % 3), eps = static_cast<unsigned>(rng() % 9);
      CHECK_NOTHROW(check_p3(x, m, eps));
    }
  }
}

TEST_CASE("derivative through the q-power basis") {
  auto F2 = Field::prime(2);
  CHECK(derivative_in_basis(R("z", F2), 1, 1) == R("1", F2));
  for (unsigned s = 1; s <= 2; ++s)
    for (unsigned e = 1; e < (1u << s); ++e) CHECK(derivative_in_basis(R("z", F2).frob_pow(s), s, e).is_zero());
  CHECK_THROWS_AS(derivative_in_basis(R("z", F2), 1, 2), DomainError);
  CHECK_THROWS_AS(derivative_in_basis(R("z", F2), 1, 0), DomainError);
  std::mt19937_64 rng(105);
  for (auto F : {Field::prime(2), Field::prime(3), Field::make(2, 2)}) {
    for (int i = 0; i < 100; ++i) {
      RatFunc g = random_ratfunc(F, 6, rng);
      unsigned s = 1 + static_cast<unsigned>(rng() % 2);
      unsigned q = s == 1 ? F->p() : F->p() * F->p();
      unsigned eps = 1 + static_cast<unsigned>(rng() % (q - 1));
      CHECK(derivative_in_basis(g, s, eps) == hasse_derivative(g, eps));
    }
  }
}

TEST_CASE("order inequality at finite places and at infinity") {
  std::mt19937_64 rng(106);
  int equalities = 0, checked = 0;
  for (auto F : {Field::prime(2), Field::prime(3), Field::make(2, 2)}) {
    for (int i = 0; i < 150; ++i) {
      RatFunc u = random_nonzero_ratfunc(F, 6, rng);
      unsigned eps = static_cast<unsigned>(rng() % 9);
      bool at_inf = rng() % 3 == 0;
      Place v = at_inf ? Place::inf()
                       : Place{false, Poly::z(F) - Poly::constant(F, static_cast<Elem>(rng() % F->size()))};
      Elem eta = static_cast<Elem>(rng() % F->size());
      auto sides = ord_inequality_sides(u, eps, v, eta);
      if (!sides) continue;
      CHECK(sides->lhs >= sides->rhs);
      equalities += sides->lhs == sides->rhs;
      ++checked;
    }
  }
  CHECK(checked > 300);
  CHECK(equalities >= 10);
}
