#pragma once

#include "cgm/grid.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cgm::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2, kIoError = 3 };

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "%.12g", with "nan" for NaN.
std::string format_number(double x);

void write_scan_csv(std::ostream& os, const ScanSpec& spec, const ScanResult& result);
void write_scan_svg(std::ostream& os, const ScanSpec& spec, const ScanResult& result);

struct CsvRow {
  std::string p;
  std::string q;
  std::string predicate;
  std::string value;
};

/// Parses a scan CSV; throws std::runtime_error on a malformed header or row.
std::vector<CsvRow> read_scan_csv(std::istream& is);

}  // namespace cgm::cli
