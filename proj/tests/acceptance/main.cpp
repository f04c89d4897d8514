// Runs the ten acceptance criteria at full size and prints one PASS/FAIL
// line each. Arguments, if any, select criteria by number.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "internal/suites.hpp"

int main(int argc, char** argv) {
  using namespace frobq::suites;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty())
    for (int i = 1; i <= kCriteria; ++i) ids.push_back(i);
  int failed = 0;
  for (int id : ids) {
    Result r = run(id, Options{});
    std::printf("%s criterion %d: %s (%.2fs, limit %.0fs)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds, r.limitSeconds);
    for (auto& [k, v] : r.counts) std::printf("    %s: %lld\n", k.c_str(), v);
    if (!r.pass) {
      ++failed;
      std::printf("    failures: %lld\n", r.failureCount);
      for (auto& f : r.failures) std::printf("    - %s\n", f.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(ids.size()) - failed, ids.size());
  return failed ? 1 : 0;
}
