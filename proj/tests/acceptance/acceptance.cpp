// One PASS/FAIL line per acceptance criterion, followed by the individual
// checks. Exit status is non-zero if any criterion or invariant check fails.

#include "cgm/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>

namespace {

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0 = no runtime requirement
};

const Criterion kCriteria[] = {
    {1, "oracle equivalence (sectional, Ricci, scalar, connection)", 60},
    {2, "identity suite (coefficient identity, C decomposition, tensor symmetries)", 0},
    {3, "region equivalence (vertical positivity vs brute force, non-negative sectional witnesses)", 0},
    {4, "scalar-positivity soundness", 0},
    {5, "Cheeger-Gromoll positivity interval (n = 2, 3)", 30},
    {6, "constructive parameter searches", 120},
    {7, "limit behaviour and zero-section identities", 0},
    {8, "vertical Ricci at the zero section is (n-1)(2p+q)", 0},
};

}  // namespace

int main(int argc, char** argv) {
  cgm::verify::Options options;
  if (argc > 1) {
    options.seed = std::strtoull(argv[1], nullptr, 10);
  }
  const auto checks = cgm::verify::run(cgm::verify::Suite::all, options);

  std::map<int, std::vector<const cgm::verify::Check*>> by_criterion;
  for (const auto& ck : checks) {
    by_criterion[ck.criterion].push_back(&ck);
  }

  bool all_ok = true;
  for (const Criterion& c : kCriteria) {
    const auto& group = by_criterion[c.id];
    bool ok = !group.empty();
    double seconds = 0;
    for (const auto* ck : group) {
      ok = ok && ck->pass;
      seconds += ck->seconds;
    }
    const bool in_budget = c.budget_seconds == 0 || seconds < c.budget_seconds;
    ok = ok && in_budget;
    all_ok = all_ok && ok;
    std::printf("%s criterion %d: %s [%zu checks, %.1f s%s]\n", ok ? "PASS" : "FAIL", c.id, c.title, group.size(),
                seconds, in_budget ? "" : ", over runtime budget");
  }
  for (const auto* ck : by_criterion[0]) {
    all_ok = all_ok && ck->pass;
    std::printf("%s invariant: %s\n", ck->pass ? "PASS" : "FAIL", ck->name.c_str());
  }

  std::printf("\nchecks:\n");
  for (const auto& ck : checks) {
    std::printf("  [%s] %-48s crit=%d max_err=%.3g %.2fs\n        %s\n", ck.pass ? "pass" : "FAIL", ck.name.c_str(),
                ck.criterion, ck.max_err, ck.seconds, ck.detail.c_str());
  }
  return all_ok ? 0 : 1;
}
