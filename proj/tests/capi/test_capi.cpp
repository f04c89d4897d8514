#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "frobq/frobq.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct Ctx {
  frobq_ctx* c = nullptr;
  Ctx(const char* field, const char* S) { REQUIRE(frobq_ctx_new(field, S, &c) == FROBQ_OK); }
  ~Ctx() { frobq_ctx_free(c); }
};

json take(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(s);
  frobq_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("context creation reports bad input") {
  frobq_ctx* c = nullptr;
  CHECK(frobq_ctx_new("p=4", "", &c) == FROBQ_ERR_DOMAIN);
  CHECK(c == nullptr);
  CHECK(std::string(frobq_last_error(nullptr)).find("not prime") != std::string::npos);
  CHECK(frobq_ctx_new("q=2", "", &c) == FROBQ_ERR_PARSE);
  CHECK(frobq_ctx_new("p=2", "z^2+1", &c) == FROBQ_ERR_DOMAIN);
  CHECK(frobq_ctx_new(nullptr, "", &c) == FROBQ_ERR_ARGUMENT);
  CHECK(frobq_ctx_new("p=2", nullptr, &c) == FROBQ_OK);
  frobq_ctx_free(c);
  CHECK(frobq_hasse(nullptr, "z", 1, nullptr) == FROBQ_ERR_ARGUMENT);
}

TEST_CASE("caps") {
  Ctx x("p=2", "z");
  CHECK(frobq_ctx_set_cap(x.c, "height_cap", 2) == FROBQ_OK);
  CHECK(frobq_ctx_set_cap(x.c, "height_cap", 0) == FROBQ_ERR_ARGUMENT);
  CHECK(frobq_ctx_set_cap(x.c, "nope", 1) == FROBQ_ERR_ARGUMENT);
  CHECK(std::string(frobq_last_error(x.c)).find("nope") != std::string::npos);
  CHECK(frobq_ctx_set_cap(x.c, "preimage_candidates", 1) == FROBQ_OK);
  char* out = nullptr;
  CHECK(frobq_preimage(x.c, "x1^2 + poly{z}*x2^2", "z^3 + 1/z^2", &out) == FROBQ_ERR_RESOURCE);
  CHECK(out == nullptr);
}

TEST_CASE("algebra calls return JSON documents") {
  Ctx x("p=2", "z");
  char* out = nullptr;
  REQUIRE(frobq_hasse(x.c, "z^3", 1, &out) == FROBQ_OK);
  CHECK(take(out)["derivative"] == "z^2");
  REQUIRE(frobq_wronskian(x.c, "1; z", 1, &out) == FROBQ_OK);
  auto w = take(out);
  CHECK(w["independent"] == true);
  CHECK(w["epsilon"] == json::array({0, 1}));
  REQUIRE(frobq_eord(x.c, "x1^2 + poly{z}*x2^2", &out) == FROBQ_OK);
  CHECK(take(out)["Eord"] == 3);
  REQUIRE(frobq_hbound(x.c, "x1^2 + poly{z}*x2^2", 3, &out) == FROBQ_OK);
  CHECK(take(out)["h"] == 4);
  REQUIRE(frobq_reduce(x.c, "x1^2 + poly{z}*x2^2", "1/z^5", &out) == FROBQ_OK);
  CHECK(take(out)["uPrime"] == "0");
  REQUIRE(frobq_preimage(x.c, "x1^2 + poly{z}*x2^2", "z^3 + 1/z^2", &out) == FROBQ_OK);
  CHECK(take(out)["solutions"] == json::parse(R"J([["(1)/(z)", "z"]])J"));
  REQUIRE(frobq_normalize(x.c, "x1^4 + poly{z}*x2^2", &out) == FROBQ_OK);
  CHECK(take(out)["classification"]["stronglyNormalized"] == true);
  CHECK(frobq_reduce(x.c, "x1^2 + poly{z}*x2^2", "1/(z+1)", &out) == FROBQ_ERR_DOMAIN);
  CHECK(frobq_hasse(x.c, "1/(z", 1, &out) == FROBQ_ERR_PARSE);
  CHECK(frobq_hasse(x.c, "z", 1, nullptr) == FROBQ_ERR_ARGUMENT);
}

TEST_CASE("logic calls") {
  Ctx f2("p=2,m=1", "");
  int t = -1;
  REQUIRE(frobq_eval_sigma(f2.c, "forall a (a^p = a)", &t) == FROBQ_OK);
  CHECK(t == 1);
  Ctx f4("p=2,m=2", "");
  REQUIRE(frobq_eval_sigma(f4.c, "forall a (a^p = a)", &t) == FROBQ_OK);
  CHECK(t == 0);
  CHECK(frobq_eval_sigma(f4.c, "a = a", &t) == FROBQ_ERR_DOMAIN);

  Ctx x("p=2", "z");
  REQUIRE(frobq_eval_bounded(x.c, "exists x:R (x^2 + x = u)", "u = z^2 + z", 2, &t) == FROBQ_OK);
  CHECK(t == 1);
  REQUIRE(frobq_eval_bounded(x.c, "exists x:R (x^2 + x = u)", "u = z", 2, &t) == FROBQ_OK);
  CHECK(t == 0);
  CHECK(frobq_eval_bounded(x.c, "x = u", "u = z", 2, &t) == FROBQ_ERR_DOMAIN);
  CHECK(frobq_eval_bounded(x.c, "b:F = 0", "b = z", 2, &t) == FROBQ_ERR_DOMAIN);

  char* out = nullptr;
  REQUIRE(frobq_transform(x.c, "exists x:R (x + x = u)", &out) == FROBQ_OK);
  CHECK(take(out)["universal"].get<std::string>().rfind("forall", 0) == 0);
  REQUIRE(frobq_to_sigma(x.c, "exists x:R (x + x = 0 and x != 0)", &out) == FROBQ_OK);
  CHECK(take(out)["truth"] == true);
  CHECK(frobq_to_sigma(x.c, "exists x:R (x = u)", &out) == FROBQ_ERR_DOMAIN);
}

TEST_CASE("selftest output depends only on the seed") {
  Ctx x("p=2", "");
  int passed = 0;
  char *a = nullptr, *b = nullptr;
  // Criteria 1 and 10 only, to keep this quick.
  REQUIRE(frobq_selftest(x.c, 1, 5, 0x201, &passed, &a) == FROBQ_OK);
  REQUIRE(frobq_selftest(x.c, 1, 5, 0x201, &passed, &b) == FROBQ_OK);
  CHECK(std::string(a) == std::string(b));
  auto j = take(a);
  frobq_string_free(b);
  CHECK(j["criteria"].size() == 2);
  CHECK(passed == 1);
}
