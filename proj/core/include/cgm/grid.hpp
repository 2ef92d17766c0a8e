#pragma once

#include "cgm/regions.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cgm {

enum class ScanPredicate { gamma, gamma_prime, delta, delta_prime, scalar_sufficient, vertical_positive };

std::string to_string(ScanPredicate predicate);
/// Throws std::invalid_argument for unknown names.
ScanPredicate parse_scan_predicate(const std::string& name);

/// Closed range lo, lo + step, ..., up to hi, with exact rational nodes.
struct GridRange {
  Rational lo;
  Rational hi;
  Rational step;

  std::size_t count() const;
  Rational node(std::size_t i) const { return lo + step * static_cast<long long>(i); }
};

inline constexpr std::size_t kMaxScanCells = 10'000'000;

struct ScanSpec {
  GridRange p_range;
  GridRange q_range;
  int n = 3;
  std::optional<Rational> c;
  ScanPredicate predicate = ScanPredicate::gamma;

  /// Throws std::invalid_argument on non-positive steps, empty ranges,
  /// n < 2 or more than kMaxScanCells cells.
  void validate() const;
};

/// Cell value: nullopt for n/a (delta predicates without a non-negative c).
struct ScanCell {
  double p = 0.0;
  double q = 0.0;
  std::optional<bool> value;
};

/// Evaluates one cell exactly.
std::optional<bool> evaluate_cell(const ScanSpec& spec, const ExactParams& params);

/// Row-major result: q is the slow index, p the fast one. The output is
/// identical for every thread count.
struct ScanResult {
  std::size_t columns = 0;  // number of p nodes
  std::size_t rows = 0;     // number of q nodes
  std::vector<ScanCell> cells;
};

/// Thread count: CGM_THREADS if it is a positive integer, else the hardware
/// concurrency (at least 1).
unsigned default_thread_count();

ScanResult run_scan(const ScanSpec& spec, unsigned threads = default_thread_count());

/// Runs fn(i) for i in [0, count) on `threads` workers, interleaved.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace cgm
