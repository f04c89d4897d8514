#pragma once

// The ten acceptance criteria as runnable suites. The acceptance binary runs
// them at full size; selftest runs them with quick = true.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace frobq::suites {

struct Options {
  bool quick = false;
  std::uint64_t seed = 20240611;
};

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  double limitSeconds = 0;
  std::vector<std::pair<std::string, long long>> counts;
  std::vector<std::string> failures;  // first few only
  long long failureCount = 0;
};

constexpr int kCriteria = 10;

// id in 1..kCriteria; any exception inside a suite is reported as a failure.
Result run(int id, const Options& opt);

}  // namespace frobq::suites
