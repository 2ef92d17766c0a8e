#include "cgm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cgm::cli {

std::string format_number(double x) {
  if (std::isnan(x)) {
    return "nan";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

namespace {

const char* cell_value(const std::optional<bool>& v) {
  if (!v) {
    return "nan";
  }
  return *v ? "1" : "0";
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, sep)) {
    parts.push_back(cur);
  }
  if (!line.empty() && line.back() == sep) {
    parts.emplace_back();
  }
  return parts;
}

}  // namespace

void write_scan_csv(std::ostream& os, const ScanSpec& spec, const ScanResult& result) {
  const std::string name = to_string(spec.predicate);
  os << "p,q,predicate,value\n";
  for (const ScanCell& cell : result.cells) {
    os << format_number(cell.p) << ',' << format_number(cell.q) << ',' << name << ',' << cell_value(cell.value)
       << '\n';
  }
}

std::vector<CsvRow> read_scan_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "p,q,predicate,value") {
    throw std::runtime_error("bad scan CSV header");
  }
  std::vector<CsvRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) {
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 4) {
      throw std::runtime_error("bad scan CSV row: " + line);
    }
    rows.push_back({f[0], f[1], f[2], f[3]});
  }
  return rows;
}

void write_scan_svg(std::ostream& os, const ScanSpec& spec, const ScanResult& result) {
  const std::size_t cols = std::max<std::size_t>(result.columns, 1);
  const std::size_t rows = std::max<std::size_t>(result.rows, 1);
  const int cell = static_cast<int>(std::clamp<std::size_t>(800 / std::max(cols, rows), 1, 16));
  const int margin = 10;
  const int legend = 60;
  const int width = static_cast<int>(cols) * cell + 2 * margin;
  const int height = static_cast<int>(rows) * cell + 2 * margin + legend;

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\">\n"
     << "<defs><pattern id=\"na\" width=\"4\" height=\"4\" patternUnits=\"userSpaceOnUse\">"
     << "<rect width=\"4\" height=\"4\" fill=\"#ffffff\"/>"
     << "<path d=\"M0,4 L4,0\" stroke=\"#888888\" stroke-width=\"1\"/></pattern></defs>\n"
     << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
  for (std::size_t r = 0; r < result.rows; ++r) {
    // Largest q on top.
    const int y = margin + static_cast<int>(result.rows - 1 - r) * cell;
    for (std::size_t k = 0; k < result.columns; ++k) {
      const auto& v = result.cells[r * result.columns + k].value;
      const char* fill = !v ? "url(#na)" : (*v ? "#1b3a6b" : "#dfe7f2");
      os << "<rect x=\"" << margin + static_cast<int>(k) * cell << "\" y=\"" << y << "\" width=\"" << cell
         << "\" height=\"" << cell << "\" fill=\"" << fill << "\"/>\n";
    }
  }
  const int ly = height - legend + 15;
  const auto entry = [&](int x, const char* fill, const char* label) {
    os << "<rect x=\"" << x << "\" y=\"" << ly << "\" width=\"12\" height=\"12\" fill=\"" << fill
       << "\" stroke=\"#000000\" stroke-width=\"0.5\"/>\n"
       << "<text x=\"" << x + 16 << "\" y=\"" << ly + 11 << "\" font-family=\"sans-serif\" font-size=\"11\">"
       << label << "</text>\n";
  };
  entry(margin, "#1b3a6b", "true");
  entry(margin + 60, "#dfe7f2", "false");
  entry(margin + 125, "url(#na)", "n/a");
  os << "<text x=\"" << margin << "\" y=\"" << ly + 35 << "\" font-family=\"sans-serif\" font-size=\"11\">"
     << to_string(spec.predicate) << ", n=" << spec.n;
  if (spec.c) {
    os << ", c=" << to_string(*spec.c);
  }
  os << "; p in [" << to_string(spec.p_range.lo) << ", " << to_string(spec.p_range.hi) << "], q in ["
     << to_string(spec.q_range.lo) << ", " << to_string(spec.q_range.hi) << "]</text>\n"
     << "</svg>\n";
}

}  // namespace cgm::cli
