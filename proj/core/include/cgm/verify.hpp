#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cgm::verify {

enum class Suite { identities, symmetries, regions, oracle, interval, all };

std::string to_string(Suite suite);
/// Throws std::invalid_argument for unknown names.
Suite parse_suite(const std::string& name);

struct Options {
  std::uint64_t seed = 1;
  /// Multiplies every numeric tolerance.
  double tol_scale = 1.0;
};

struct Check {
  std::string suite;
  std::string name;
  int criterion = 0;  // acceptance criterion covered, 0 if none
  bool pass = false;
  double max_err = 0.0;
  std::string detail;
  double seconds = 0.0;
};

std::vector<Check> run(Suite suite, const Options& options = {});

// Individual suites.
std::vector<Check> identities(const Options& options);
std::vector<Check> symmetries(const Options& options);
std::vector<Check> regions(const Options& options);
std::vector<Check> oracle(const Options& options);
std::vector<Check> interval(const Options& options);

}  // namespace cgm::verify
