// Command-line front end. Talks to the library only through frobq.h.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "frobq/frobq.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kResource = 3 };

int exit_code(frobq_status s) {
  switch (s) {
    case FROBQ_OK: return kOk;
    case FROBQ_ERR_ARGUMENT:
    case FROBQ_ERR_PARSE:
    case FROBQ_ERR_DOMAIN: return kUsage;
    case FROBQ_ERR_RESOURCE: return kResource;
    default: return kFailure;
  }
}

struct Config {
  std::string field = "p=2";
  std::string S;
  std::uint64_t seed = 20240611;
  bool json = false;
  unsigned heightCap = 3;
  std::uint64_t maxBranch = 0;
};

class Session {
 public:
  explicit Session(const Config& cfg) : cfg_(cfg) {}
  ~Session() { frobq_ctx_free(ctx_); }

  // Runs fn against a fresh context and reports errors on stderr.
  int run(const std::function<frobq_status(frobq_ctx*)>& fn) {
    frobq_status s = frobq_ctx_new(cfg_.field.c_str(), cfg_.S.c_str(), &ctx_);
    if (s == FROBQ_OK) s = frobq_ctx_set_cap(ctx_, "height_cap", cfg_.heightCap);
    if (s == FROBQ_OK && cfg_.maxBranch) s = frobq_ctx_set_cap(ctx_, "max_branch", cfg_.maxBranch);
    if (s == FROBQ_OK) s = fn(ctx_);
    if (s != FROBQ_OK) {
      if (cfg_.json) {
        std::cout << json{{"error", frobq_status_name(s)}, {"message", frobq_last_error(ctx_)}}.dump(2) << "\n";
      } else {
        std::cerr << "error (" << frobq_status_name(s) << "): " << frobq_last_error(ctx_) << "\n";
      }
    }
    return exit_code(s);
  }

  // For calls that produce a JSON document.
  int document(const std::function<frobq_status(frobq_ctx*, char**)>& fn) {
    return run([&](frobq_ctx* ctx) {
      char* out = nullptr;
      frobq_status s = fn(ctx, &out);
      if (s == FROBQ_OK) print(json::parse(out));
      frobq_string_free(out);
      return s;
    });
  }

  int truth(const std::function<frobq_status(frobq_ctx*, int*)>& fn) {
    return run([&](frobq_ctx* ctx) {
      int t = 0;
      frobq_status s = fn(ctx, &t);
      if (s != FROBQ_OK) return s;
      if (cfg_.json) std::cout << json{{"truth", t != 0}}.dump(2) << "\n";
      else std::cout << (t ? "true" : "false") << "\n";
      return s;
    });
  }

  void print(const json& j) const {
    if (cfg_.json) {
      std::cout << j.dump(2) << "\n";
      return;
    }
    for (auto& [k, v] : j.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }

 private:
  Config cfg_;
  frobq_ctx* ctx_ = nullptr;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--file", "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Formula text from --formula or --file, exactly one of them.
struct FormulaSource {
  std::string text, file;
  void add(CLI::App* cmd, const std::string& flag) {
    auto* a = cmd->add_option(flag, text, "formula text");
    auto* b = cmd->add_option("--file", file, "read the formula from a file")->check(CLI::ExistingFile);
    a->excludes(b);
    flag_ = flag;
  }
  std::string get() const {
    if (text.empty() && file.empty()) throw CLI::RequiredError(flag_ + " or --file");
    return file.empty() ? text : read_file(file);
  }

 private:
  std::string flag_;
};

void print_selftest(const json& j) {
  for (auto& c : j["criteria"]) {
    std::cout << (c["pass"].get<bool>() ? "PASS" : "FAIL") << " criterion " << c["criterion"] << ": "
              << c["name"].get<std::string>() << "\n";
    for (auto& [k, v] : c["counts"].items()) std::cout << "    " << k << ": " << v << "\n";
    for (auto& f : c["failures"]) std::cout << "    - " << f.get<std::string>() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Additive polynomials over F[z, 1/S] and the model-complete translation", "frobq"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.set_config("--config", "", "key=value file; flags override it");
  // Config files split values at commas; join them back.
  app.add_option("--field", cfg.field, "finite field, e.g. p=2,m=2")
      ->envname("FROBQ_FIELD")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join)
      ->capture_default_str();
  app.add_option("--S", cfg.S, "inverted irreducibles, e.g. \"z, z+1\"")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  app.add_option("--seed", cfg.seed, "seed for the randomized suites")->capture_default_str();
  app.add_flag("--json", cfg.json, "structured output");
  app.add_option("--height-cap", cfg.heightCap, "default height cap for eval-bounded")
      ->check(CLI::Range(1u, 64u))
      ->capture_default_str();
  app.add_option("--max-branch", cfg.maxBranch, "assignments tried per quantifier block")->check(CLI::PositiveNumber);

  std::function<int()> action;
  Session* session = nullptr;
  auto bind = [&](CLI::App* cmd, std::function<int()> fn) {
    cmd->final_callback([&action, fn] { action = fn; });
  };

  std::string f, u, y, expr, family;
  unsigned eps = 0, s = 1, cap = 0;
  long long ell = 0;

  auto* normalize = app.add_subcommand("normalize", "normal form f o xi = fTilde + G");
  normalize->add_option("--f", f, "additive polynomial")->required();
  bind(normalize, [&] { return session->document([&](auto c, auto o) { return frobq_normalize(c, f.c_str(), o); }); });

  auto* wr = app.add_subcommand("wronskian", "independence certificate over F(z^(p^s))");
  wr->add_option("--family", family, "rational functions separated by ';'")->required();
  wr->add_option("--s", s, "exponent s")->capture_default_str();
  bind(wr, [&] { return session->document([&](auto c, auto o) { return frobq_wronskian(c, family.c_str(), s, o); }); });

  auto* hasse = app.add_subcommand("hasse", "Hasse derivative D_eps");
  hasse->add_option("--eps", eps, "order")->required();
  hasse->add_option("--expr", expr, "rational function")->required();
  bind(hasse, [&] { return session->document([&](auto c, auto o) { return frobq_hasse(c, expr.c_str(), eps, o); }); });

  auto* eord = app.add_subcommand("eord", "pole-order bound E_ord(f) for p-basic f");
  eord->add_option("--f", f, "additive polynomial")->required();
  bind(eord, [&] { return session->document([&](auto c, auto o) { return frobq_eord(c, f.c_str(), o); }); });

  auto* reduce = app.add_subcommand("reduce", "u' ~ u with bounded pole orders, with witness");
  reduce->add_option("--f", f, "p-basic additive polynomial")->required();
  reduce->add_option("--u", u, "element of R")->required();
  bind(reduce, [&] { return session->document([&](auto c, auto o) { return frobq_reduce(c, f.c_str(), u.c_str(), o); }); });

  auto* hbound = app.add_subcommand("hbound", "height bound h(f, ell)");
  hbound->add_option("--f", f, "strongly normalized additive polynomial")->required();
  hbound->add_option("--ell", ell, "height of f(x)")->required();
  bind(hbound, [&] { return session->document([&](auto c, auto o) { return frobq_hbound(c, f.c_str(), ell, o); }); });

  auto* pre = app.add_subcommand("preimage", "all x in R^n with f(x) = y");
  pre->add_option("--f", f, "strongly normalized additive polynomial")->required();
  pre->add_option("--y", y, "element of R")->required();
  bind(pre, [&] { return session->document([&](auto c, auto o) { return frobq_preimage(c, f.c_str(), y.c_str(), o); }); });

  FormulaSource tsrc, ssrc, bsrc;
  std::string sigma, assign;
  auto* transform = app.add_subcommand("transform", "equivalent universal formula");
  tsrc.add(transform, "--formula");
  bind(transform, [&] {
    std::string text = tsrc.get();
    return session->document([&](auto c, auto o) { return frobq_transform(c, text.c_str(), o); });
  });

  auto* tosigma = app.add_subcommand("to-sigma", "sentence over R -> sentence over F");
  ssrc.add(tosigma, "--sentence");
  bind(tosigma, [&] {
    std::string text = ssrc.get();
    return session->document([&](auto c, auto o) { return frobq_to_sigma(c, text.c_str(), o); });
  });

  auto* evs = app.add_subcommand("eval-sigma", "truth of an L_p sentence in F");
  evs->add_option("--sigma", sigma, "sentence; variables range over F")->required();
  bind(evs, [&] { return session->truth([&](auto c, int* t) { return frobq_eval_sigma(c, sigma.c_str(), t); }); });

  auto* evb = app.add_subcommand("eval-bounded", "truth with R-quantifiers over a height ball");
  bsrc.add(evb, "--formula");
  evb->add_option("--assign", assign, "values of free variables, e.g. \"u = 1/z; b = 1\"");
  evb->add_option("--cap", cap, "height cap (default: --height-cap)");
  bind(evb, [&] {
    std::string text = bsrc.get();
    return session->truth(
        [&](auto c, int* t) { return frobq_eval_bounded(c, text.c_str(), assign.c_str(), cap, t); });
  });

  bool quick = false;
  std::vector<int> only;
  auto* st = app.add_subcommand("selftest", "run the acceptance suites");
  st->add_flag("--quick", quick, "reduced sizes");
  st->add_option("--only", only, "criterion numbers")->check(CLI::Range(1, 10))->delimiter(',');
  bind(st, [&] {
    std::uint32_t mask = 0;
    for (int i : only) mask |= 1u << (i - 1);
    int passed = 0;
    int code = session->run([&](frobq_ctx* c) {
      char* out = nullptr;
      frobq_status r = frobq_selftest(c, quick, cfg.seed, mask, &passed, &out);
      if (r == FROBQ_OK) {
        json j = json::parse(out);
        if (cfg.json) std::cout << j.dump(2) << "\n";
        else print_selftest(j);
      }
      frobq_string_free(out);
      return r;
    });
    return code != kOk ? code : passed ? kOk : kFailure;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  Session sess(cfg);
  session = &sess;
  try {
    return action ? action() : kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
}
