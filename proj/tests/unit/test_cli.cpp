#include "support.hpp"

#include "cgm/cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cgm;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string value_of(const std::string& text, const std::string& key) {
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.rfind(key + "=", 0) == 0) {
      return line.substr(key.size() + 1);
    }
  }
  return "<missing>";
}

std::vector<std::vector<double>> csv_numbers(const std::string& text) {
  std::istringstream ss(text);
  std::string line;
  std::getline(ss, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(ss, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      row.push_back(std::stod(cell));
    }
    rows.push_back(row);
  }
  return rows;
}

fs::path temp_path(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "cgm_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("classify") {
  const Run a = run({"classify", "--p", "1", "--q", "1", "--n", "3", "--c", "1"});
  CHECK(a.code == 0);
  CHECK(value_of(a.out, "in_gamma") == "true");
  CHECK(value_of(a.out, "scalar_at_zero") == "24");

  const Run b = run({"classify", "--p", "0", "--q", "0", "--n", "3"});
  CHECK(b.code == 0);
  for (const char* key : {"in_gamma", "in_gamma_prime", "in_omega", "vertical_positive"}) {
    CHECK(value_of(b.out, key) == "false");
  }
  CHECK(value_of(b.out, "in_delta") == "n/a");

  const Run c = run({"classify", "--p", "2", "--q", "-1", "--n", "3", "--c", "16/3", "--json"});
  CHECK(c.code == 0);
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j["in_delta"] == true);
  CHECK(j["scalar_at_zero"].get<double>() == doctest::Approx(50.0));
}

TEST_CASE("curvature profiles") {
  const Run flat = run({"curvature", "--p", "0", "--q", "0", "--n", "3", "--c", "0", "--t-max", "50", "--samples", "11"});
  CHECK(flat.code == 0);
  CHECK(flat.out.rfind("t,K_hh_max_e,K_hv_max_e,K_vv_min,K_vv_U,scalar\n", 0) == 0);
  const auto rows = csv_numbers(flat.out);
  CHECK(rows.size() == 11);
  for (const auto& r : rows) {
    for (std::size_t k = 1; k < r.size(); ++k) {
      CHECK(r[k] == 0.0);
    }
  }

  const Run lim = run({"curvature", "--p", "2", "--q", "-1", "--n", "3", "--c", "0", "--t-max", "1", "--samples", "5"});
  CHECK(lim.code == 0);
  CHECK(lim.err.find("clipped") != std::string::npos);
  const auto last = csv_numbers(lim.out).back();
  CHECK(last[0] < 1.0);
  CHECK(last[3] == doctest::Approx(4.0).epsilon(1e-4));

  const Run zero = run({"curvature", "--p", "1", "--q", "1", "--n", "3", "--c", "0", "--t-max", "0", "--samples", "1"});
  const auto z = csv_numbers(zero.out);
  REQUIRE(z.size() == 1);
  CHECK(z[0][3] == doctest::Approx(3.0));
  CHECK(z[0][5] == doctest::Approx(18.0));
}

TEST_CASE("find-params") {
  const Run a = run({"find-params", "--n", "2", "--c", "-1"});
  CHECK(a.code == 0);
  CHECK(value_of(a.out, "p") == "2");
  CHECK(value_of(a.out, "q") == "0");
  CHECK(value_of(a.out, "certified") == "true");

  const Run b = run({"find-params", "--n", "3", "--c", "1"});
  CHECK(value_of(b.out, "p") == "2");
  CHECK(value_of(b.out, "q") == "-1");
  CHECK(b.out.find("ball bundle") != std::string::npos);

  const Run c = run({"find-params", "--n", "3", "--c", "-1", "--nonneg-q", "--json"});
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j["q"].get<double>() >= 0.0);
  CHECK(j["certified"] == true);
  CHECK(j["g_coefficients_positive"] == true);
  for (double g : j["g_coefficients"].get<std::vector<double>>()) {
    CHECK(g > 0.0);
  }

  const Run d = run({"find-params", "--n", "3", "--a", "-12", "--b", "8"});
  CHECK(d.code == 0);
  CHECK(value_of(d.out, "certified") == "true");
}

TEST_CASE("scan to files") {
  const fs::path csv = temp_path("gamma.csv"), svg = temp_path("gamma.svg");
  const Run r = run({"scan", "--predicate", "gamma", "--n", "3", "--p-min", "-9", "--p-max", "3", "--p-step", "0.05",
                     "--q-min", "-3", "--q-max", "3", "--q-step", "0.05", "--csv", csv.string(), "--svg",
                     svg.string(), "--threads", "3"});
  CHECK(r.code == 0);
  const std::string text = slurp(csv);
  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.find("\n1,1,gamma,1\n") != std::string::npos);
  CHECK(text.find("\n2,0,gamma,1\n") != std::string::npos);
  CHECK(text.find("\n0,0,gamma,0\n") != std::string::npos);
  const std::string pic = slurp(svg);
  CHECK(pic.find("<svg") != std::string::npos);
  CHECK(pic.find("version=\"1.1\"") != std::string::npos);
  CHECK(pic.find("n/a") != std::string::npos);

  const Run d = run({"scan", "--predicate", "delta", "--c", "6", "--n", "3"});
  CHECK(d.code == 0);
  CHECK(d.out.find(",0,delta,1\n") == std::string::npos);
}

TEST_CASE("property: scan output is byte-identical across thread counts") {
  const std::vector<std::string> base = {"scan", "--predicate", "scalar_sufficient", "--c", "16/3", "--n", "2",
                                         "--p-step", "0.1", "--q-step", "0.1"};
  std::string first;
  for (const char* threads : {"1", "2", "5"}) {
    auto args = base;
    args.insert(args.end(), {"--threads", threads});
    const Run r = run(args);
    CHECK(r.code == 0);
    if (first.empty()) {
      first = r.out;
    }
    CHECK(r.out == first);
  }
}

TEST_CASE("property: scan CSV round-trip") {
  const Run r = run({"scan", "--predicate", "delta_prime", "--c", "1", "--n", "2", "--p-step", "0.05", "--q-step",
                     "0.05"});
  REQUIRE(r.code == 0);
  std::istringstream is(r.out);
  const auto rows = cli::read_scan_csv(is);
  REQUIRE(rows.size() == 241u * 121u);
  test::Rng rng(31);
  ScanSpec spec;
  spec.n = 2;
  spec.c = Rational(1);
  spec.predicate = ScanPredicate::delta_prime;
  int checked = 0;
  for (const auto& row : rows) {
    if (rng.uniform(0, 1) >= 0.01) {
      continue;
    }
    ++checked;
    const ExactParams pq{parse_rational(row.p), parse_rational(row.q)};
    const auto v = evaluate_cell(spec, pq);
    const double want = !v ? std::nan("") : (*v ? 1.0 : 0.0);
    const double got = std::stod(row.value);
    if (std::isnan(want)) {
      CHECK(std::isnan(got));
    } else {
      CHECK(std::abs(got - want) <= 1e-10);
    }
  }
  CHECK(checked > 100);
  std::istringstream bad("x,y\n");
  CHECK_THROWS(cli::read_scan_csv(bad));
}

TEST_CASE("property: exit codes") {
  CHECK(run({"classify", "--p", "1", "--q", "1", "--n", "3"}).code == cli::kSuccess);
  CHECK(run({"--help"}).code == cli::kSuccess);
  // Usage errors.
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({"classify", "--p", "1", "--n", "3"}).code == cli::kUsageError);
  CHECK(run({"classify", "--p", "one", "--q", "1", "--n", "3"}).code == cli::kUsageError);
  CHECK(run({"classify", "--p", "1", "--q", "1", "--n", "1"}).code == cli::kUsageError);
  CHECK(run({"scan", "--p-step", "0"}).code == cli::kUsageError);
  CHECK(run({"scan", "--predicate", "nope"}).code == cli::kUsageError);
  CHECK(run({"curvature", "--p", "1", "--q", "1", "--n", "3", "--t-max", "-1"}).code == cli::kUsageError);
  CHECK(run({"verify", "--suite", "everything"}).code == cli::kUsageError);
  CHECK(run({"find-params", "--n", "3", "--a", "1"}).code == cli::kUsageError);
  // I/O errors.
  CHECK(run({"scan", "--csv", "/nonexistent-dir/out.csv"}).code == cli::kIoError);
  CHECK(run({"scan", "--p-step", "1", "--q-step", "1", "--svg", "/nonexistent-dir/out.svg"}).code == cli::kIoError);
  // Verification outcome.
  const Run ok = run({"verify", "--suite", "identities"});
  CHECK(ok.code == cli::kSuccess);
  const Run strict = run({"verify", "--suite", "identities", "--tol-scale", "1e-30"});
  CHECK(strict.code == cli::kVerificationFailure);
}

TEST_CASE("property: verify reports are deterministic JSON lines") {
  const Run a = run({"verify", "--suite", "oracle", "--seed", "7"});
  const Run b = run({"verify", "--suite", "oracle", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream ss(a.out);
  std::string line;
  int lines = 0;
  while (std::getline(ss, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.contains("name"));
    CHECK((j["status"] == "pass" || j["status"] == "fail"));
    CHECK(j.contains("max_err"));
    ++lines;
  }
  CHECK(lines >= 4);
}

TEST_CASE("number formatting") {
  CHECK(cli::format_number(1.0 / 3) == "0.333333333333");
  CHECK(cli::format_number(-0.0) == "0");
  CHECK(cli::format_number(std::nan("")) == "nan");
  CHECK(cli::format_number(1e-20) == "1e-20");
}
