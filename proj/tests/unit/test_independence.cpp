#include <random>

#include "doctest.h"
#include "frobq/errors.hpp"
#include "frobq/independence.hpp"
#include "helpers.hpp"

using namespace frobq;
using testutil::random_ratfunc;

namespace {

RatFunc R(const std::string& s, const FieldPtr& F) { return parse_ratfunc(s, F); }

std::vector<RatFunc> family(const std::vector<std::string>& xs, const FieldPtr& F) {
  std::vector<RatFunc> out;
  for (auto& x : xs) out.push_back(R(x, F));
  return out;
}

unsigned qpow(unsigned p, unsigned s) {
  unsigned q = 1;
  while (s--) q *= p;
  return q;
}

}  // namespace

TEST_CASE("wronskian certificate examples") {
  auto F2 = Field::prime(2);
  auto c = wronskian_certificate(family({"1", "z"}, F2), 1);
  REQUIRE(c);
  CHECK(*c == EpsilonTuple{0, 1});
  CHECK(wronskian(family({"1", "z"}, F2), *c) == R("1", F2));
  CHECK_FALSE(wronskian_certificate(family({"1", "z^2"}, F2), 1));
  CHECK_THROWS_AS(wronskian_certificate(family({"1", "z", "z^3"}, F2), 1), DomainError);
  // D_1 vanishes on both, so the certificate needs eps = 2.
  auto c2 = wronskian_certificate(family({"1", "z^2"}, F2), 2);
  REQUIRE(c2);
  CHECK(*c2 == EpsilonTuple{0, 2});
}

TEST_CASE("rank oracle examples") {
  auto F2 = Field::prime(2);
  CHECK(rank_oracle(family({"1", "z"}, F2), 1) == 2);
  CHECK(rank_oracle(family({"1", "z^2", "z^4"}, F2), 1) == 1);
  auto dep = dependency_oracle(family({"1", "z^2"}, F2), 1);
  REQUIRE(dep);
  // lambda_0(z^2) * 1 + lambda_1(z^2) * z^2 = 0.
  RatFunc sum = RatFunc((*dep)[0].inflate(2)) + RatFunc((*dep)[1].inflate(2)) * R("z^2", F2);
  CHECK(sum.is_zero());
  CHECK_FALSE(dependency_oracle(family({"1", "z"}, F2), 1));
}

TEST_CASE("wronskian criterion agrees with the rank oracle on random families") {
  std::mt19937_64 rng(201);
  int independent = 0, dependent = 0;
  for (auto F : {Field::prime(2), Field::prime(3)}) {
    for (int i = 0; i < 120; ++i) {
      unsigned s = 1 + static_cast<unsigned>(rng() % 2);
      unsigned q = qpow(F->p(), s);
      std::size_t n = 1 + rng() % std::min<unsigned>(q, 4);
      std::vector<RatFunc> b;
      for (std::size_t j = 0; j < n; ++j) {
        // Mix in q-th powers so that dependent families occur often.
        RatFunc x = random_ratfunc(F, 3, rng);
        if (j > 0 && rng() % 3 == 0) x = b[0] * random_ratfunc(F, 2, rng).frob_pow(s);
        b.push_back(x);
      }
      auto cert = wronskian_certificate(b, s);
      bool full = rank_oracle(b, s) == n;
      CHECK(cert.has_value() == full);
      if (cert) {
        CHECK(!wronskian(b, *cert).is_zero());
        ++independent;
      } else {
        auto dep = dependency_oracle(b, s);
        REQUIRE(dep);
        RatFunc sum(F);
        for (std::size_t j = 0; j < n; ++j) sum += RatFunc((*dep)[j].map_coeffs_frob(-static_cast<long long>(s))).frob_pow(s) * b[j];
        CHECK(sum.is_zero());
        ++dependent;
      }
    }
  }
  CHECK(independent > 20);
  CHECK(dependent > 20);
}

TEST_CASE("all monomial families with exponents up to 6 over F_2") {
  auto F2 = Field::prime(2);
  for (unsigned s = 1; s <= 2; ++s) {
    unsigned q = qpow(2, s);
    for (unsigned mask = 1; mask < (1u << 7); ++mask) {
      std::vector<RatFunc> b;
      for (unsigned e = 0; e <= 6; ++e)
        if (mask >> e & 1) b.push_back(RatFunc(Poly::monomial(F2, 1, e)));
      if (b.size() > q) continue;
      CHECK(wronskian_certificate(b, s).has_value() == (rank_oracle(b, s) == b.size()));
    }
  }
}

TEST_CASE("independence is stable under field extension") {
  auto F2 = Field::prime(2);
  CHECK(independence_lift_check(family({"1", "z"}, F2), 1, Field::make(2, 2)));
  CHECK_FALSE(independence_lift_check(family({"1", "z^2"}, F2), 1, Field::make(2, 2)));
  std::mt19937_64 rng(202);
  for (auto F : {Field::prime(2), Field::prime(3)}) {
    for (int i = 0; i < 50; ++i) {
      std::vector<RatFunc> b;
      std::size_t n = 1 + rng() % 3;
      for (std::size_t j = 0; j < n; ++j) b.push_back(random_ratfunc(F, 3, rng));
      for (auto ext : {Field::make(F->p(), 2), Field::make(F->p(), 3)}) CHECK_NOTHROW(independence_lift_check(b, 1, ext));
    }
  }
}
