#include "cgm/cli.hpp"

#include "cgm/curvature.hpp"
#include "cgm/regions.hpp"
#include "cgm/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <ostream>

namespace cgm::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rational_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError("--" + flag + ": not a number: " + text);
  }
}

void require_n(int n) {
  if (n < 2) {
    throw UsageError("--n must be at least 2");
  }
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string tri(const std::optional<bool>& v) { return v ? yes_no(*v) : "n/a"; }

json tri_json(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

json number_json(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

// ---------------------------------------------------------------------------

struct ClassifyArgs {
  std::string p, q, c;
  int n = 3;
  bool json_out = false;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  require_n(a.n);
  const ExactParams pq{rational_flag("p", a.p), rational_flag("q", a.q)};
  std::optional<Rational> c;
  if (!a.c.empty()) {
    c = rational_flag("c", a.c);
  }
  const RegionVerdict v = classify(pq, a.n, c);
  const bool vertical = vertical_positivity(pq, a.n);
  std::optional<bool> nonneg;
  std::optional<double> scalar0;
  if (c) {
    nonneg = nonneg_sectional(pq, a.n, *c);
    scalar0 = to_double(Rational(a.n * (a.n - 1)) * (*c + 2 * pq.p + pq.q));
  }

  if (a.json_out) {
    json j;
    j["p"] = to_string(pq.p);
    j["q"] = to_string(pq.q);
    j["n"] = a.n;
    j["c"] = c ? json(to_string(*c)) : json(nullptr);
    j["in_gamma"] = v.in_gamma;
    j["in_gamma_prime"] = v.in_gamma_prime;
    j["in_omega"] = v.in_omega;
    j["in_delta"] = tri_json(v.in_delta);
    j["in_delta_prime"] = tri_json(v.in_delta_prime);
    j["gamma_component"] = to_string(v.gamma_component);
    j["vertical_positive"] = vertical;
    j["nonneg_sectional"] = tri_json(nonneg);
    j["scalar_condition"] = c ? json(to_string(v.scalar_condition)) : json(nullptr);
    j["scalar_at_zero"] = scalar0 ? json(*scalar0) : json(nullptr);
    if (!v.delta_note.empty()) {
      j["delta_note"] = v.delta_note;
    }
    out << j.dump() << '\n';
    return kSuccess;
  }
  out << "in_gamma=" << yes_no(v.in_gamma) << '\n'
      << "in_gamma_prime=" << yes_no(v.in_gamma_prime) << '\n'
      << "in_omega=" << yes_no(v.in_omega) << '\n'
      << "in_delta=" << tri(v.in_delta) << '\n'
      << "in_delta_prime=" << tri(v.in_delta_prime) << '\n'
      << "gamma_component=" << to_string(v.gamma_component) << '\n'
      << "vertical_positive=" << yes_no(vertical) << '\n'
      << "nonneg_sectional=" << tri(nonneg) << '\n'
      << "scalar_condition=" << (c ? to_string(v.scalar_condition) : "n/a") << '\n';
  if (scalar0) {
    out << "scalar_at_zero=" << format_number(*scalar0) << '\n';
  }
  if (!v.delta_note.empty()) {
    out << "delta_note=" << v.delta_note << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct ScanArgs {
  std::string p_min = "-9", p_max = "3", p_step = "0.05";
  std::string q_min = "-3", q_max = "3", q_step = "0.05";
  std::string c;
  std::string predicate = "gamma";
  int n = 3;
  std::string csv;
  std::string svg;
  unsigned threads = 0;
};

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  ScanSpec spec;
  spec.p_range = {rational_flag("p-min", a.p_min), rational_flag("p-max", a.p_max), rational_flag("p-step", a.p_step)};
  spec.q_range = {rational_flag("q-min", a.q_min), rational_flag("q-max", a.q_max), rational_flag("q-step", a.q_step)};
  spec.n = a.n;
  if (!a.c.empty()) {
    spec.c = rational_flag("c", a.c);
  }
  try {
    spec.predicate = parse_scan_predicate(a.predicate);
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const ScanResult result = run_scan(spec, a.threads == 0 ? default_thread_count() : a.threads);

  const auto emit = [&](const std::string& path, auto writer) {
    if (path.empty() || path == "-") {
      writer(out);
      return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
      throw IoError("cannot open " + path + " for writing");
    }
    writer(os);
    os.flush();
    if (!os) {
      throw IoError("write failed: " + path);
    }
  };
  emit(a.csv, [&](std::ostream& os) { write_scan_csv(os, spec, result); });
  if (!a.svg.empty()) {
    emit(a.svg, [&](std::ostream& os) { write_scan_svg(os, spec, result); });
  }
  std::size_t yes = 0, na = 0;
  for (const auto& cell : result.cells) {
    yes += cell.value.value_or(false) ? 1 : 0;
    na += cell.value ? 0 : 1;
  }
  if (!a.csv.empty() && a.csv != "-") {
    err << result.cells.size() << " cells (" << result.columns << " x " << result.rows << "), " << yes << " true, "
        << na << " n/a\n";
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct CurvatureArgs {
  double p = 0, q = 0, c = 0;
  int n = 3;
  double t_max = 10;
  std::size_t samples = 101;
};

int cmd_curvature(const CurvatureArgs& a, std::ostream& out, std::ostream& err) {
  require_n(a.n);
  if (!std::isfinite(a.p) || !std::isfinite(a.q) || !std::isfinite(a.c) || !std::isfinite(a.t_max)) {
    throw UsageError("parameters must be finite");
  }
  if (a.t_max < 0 || a.samples == 0) {
    throw UsageError("need --t-max >= 0 and --samples >= 1");
  }
  const Params pq{a.p, a.q};
  double t_max = a.t_max;
  if (!in_ball_bundle(pq, t_max)) {
    // Stay a relative 1e-8 inside the sphere bundle q t = -1.
    t_max = (1.0 - 1e-8) * fibre_radius_bound(pq);
    err << "warning: --t-max " << format_number(a.t_max) << " is outside the ball bundle; clipped to "
        << format_number(t_max) << '\n';
  }
  out << "t,K_hh_max_e,K_hv_max_e,K_vv_min,K_vv_U,scalar\n";
  for (std::size_t i = 0; i < a.samples; ++i) {
    const double t = a.samples == 1 ? t_max : t_max * static_cast<double>(i) / static_cast<double>(a.samples - 1);
    const double r = std::sqrt(t);
    const double hh = space_form::sectional_hh(pq, a.c, t, r, 0.0);
    const double hv = space_form::sectional_hv(pq, a.c, t, r, r);
    const double vv_u = space_form::sectional_vv(pq, t, r, 0.0, a.n);
    const double vv_min = a.n >= 3 ? std::min(vv_u, space_form::sectional_vv(pq, t, 0.0, 0.0, a.n)) : vv_u;
    const double s = scalar_curvature_spaceform(pq, a.n, a.c, t);
    out << format_number(t) << ',' << format_number(hh) << ',' << format_number(hv) << ',' << format_number(vv_min)
        << ',' << format_number(vv_u) << ',' << format_number(s) << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct FindArgs {
  int n = 3;
  double c = 0;
  std::optional<double> a, b;
  bool nonneg_q = false;
  bool json_out = false;
};

int cmd_find_params(const FindArgs& a, std::ostream& out) {
  require_n(a.n);
  if (a.a.has_value() != a.b.has_value()) {
    throw UsageError("--a and --b go together");
  }
  SearchResult r;
  std::optional<double> c_used;
  if (a.a) {
    const GeneralSearchResult g = find_params_general(a.n, *a.a, *a.b);
    c_used = g.c_used;
    r = g.result;
  } else {
    r = a.nonneg_q ? find_params_thm3(a.n, a.c) : find_params_thm1(a.n, a.c);
  }
  const Certificate& cert = r.certificate;
  if (a.json_out) {
    json j;
    j["n"] = a.n;
    j["p"] = r.params.p;
    j["q"] = r.params.q;
    j["route"] = r.route;
    j["ball_bundle"] = r.params.q < 0;
    j["certified"] = r.certified();
    j["certificate_min"] = number_json(cert.min_scalar_on_grid);
    j["t_at_min"] = number_json(cert.t_at_min);
    j["grid"] = cert.grid;
    if (c_used) {
      j["c_used"] = *c_used;
    }
    if (!cert.g_coefficients.empty()) {
      j["g_coefficients"] = cert.g_coefficients;
      j["g_coefficients_positive"] = cert.g_coefficients_positive;
    }
    j["path"] = r.path;
    out << j.dump() << '\n';
    return kSuccess;
  }
  out << "p=" << format_number(r.params.p) << '\n' << "q=" << format_number(r.params.q) << '\n';
  if (r.params.q < 0) {
    out << "note=q < 0: metric on the ball bundle |e|^2 < " << format_number(fibre_radius_bound(r.params)) << '\n';
  }
  out << "route=" << r.route << '\n';
  if (c_used) {
    out << "c_used=" << format_number(*c_used) << '\n';
  }
  out << "certified=" << yes_no(r.certified()) << '\n'
      << "certificate_min=" << format_number(cert.min_scalar_on_grid) << '\n'
      << "t_at_min=" << format_number(cert.t_at_min) << '\n'
      << "grid=" << cert.grid << '\n';
  if (!cert.g_coefficients.empty()) {
    out << "g_coefficients=";
    for (std::size_t i = 0; i < cert.g_coefficients.size(); ++i) {
      out << (i ? " " : "") << format_number(cert.g_coefficients[i]);
    }
    out << '\n' << "g_coefficients_positive=" << yes_no(cert.g_coefficients_positive) << '\n';
  }
  for (const auto& step : r.path) {
    out << "path: " << step << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 1;
  double tol_scale = 1.0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  verify::Suite suite;
  try {
    suite = verify::parse_suite(a.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!(a.tol_scale > 0)) {
    throw UsageError("--tol-scale must be positive");
  }
  const auto checks = verify::run(suite, {a.seed, a.tol_scale});
  bool ok = true;
  for (const auto& ck : checks) {
    ok = ok && ck.pass;
    json j;
    j["name"] = ck.name;
    j["status"] = ck.pass ? "pass" : "fail";
    j["max_err"] = number_json(ck.max_err);
    j["suite"] = ck.suite;
    j["criterion"] = ck.criterion;
    j["detail"] = ck.detail;
    out << j.dump() << '\n';
  }
  return ok ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curvature of generalised Cheeger-Gromoll metrics on tangent bundles", "cgm"};
  app.require_subcommand(1);

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "Region memberships of (p, q)");
  classify_cmd->add_option("--p", ca.p, "p (decimal or fraction)")->required();
  classify_cmd->add_option("--q", ca.q, "q (decimal or fraction)")->required();
  classify_cmd->add_option("--n", ca.n, "base dimension")->required();
  classify_cmd->add_option("--c", ca.c, "space-form curvature");
  classify_cmd->add_flag("--json", ca.json_out, "one JSON object instead of key=value lines");

  ScanArgs sa;
  auto* scan_cmd = app.add_subcommand("scan", "Evaluate a predicate over a (p, q) grid");
  scan_cmd->add_option("--p-min", sa.p_min)->capture_default_str();
  scan_cmd->add_option("--p-max", sa.p_max)->capture_default_str();
  scan_cmd->add_option("--p-step", sa.p_step)->capture_default_str();
  scan_cmd->add_option("--q-min", sa.q_min)->capture_default_str();
  scan_cmd->add_option("--q-max", sa.q_max)->capture_default_str();
  scan_cmd->add_option("--q-step", sa.q_step)->capture_default_str();
  scan_cmd->add_option("--n", sa.n)->capture_default_str();
  scan_cmd->add_option("--c", sa.c, "space-form curvature");
  scan_cmd->add_option("--predicate", sa.predicate,
                       "gamma|gamma_prime|delta|delta_prime|scalar_sufficient|vertical_positive")
      ->capture_default_str();
  scan_cmd->add_option("--csv", sa.csv, "CSV output path (default stdout)");
  scan_cmd->add_option("--svg", sa.svg, "SVG output path");
  scan_cmd->add_option("--threads", sa.threads, "worker threads (default CGM_THREADS or hardware)");

  CurvatureArgs va;
  auto* curv_cmd = app.add_subcommand("curvature", "Curvature profile along the fibre radius t = |e|^2");
  curv_cmd->add_option("--p", va.p)->required();
  curv_cmd->add_option("--q", va.q)->required();
  curv_cmd->add_option("--n", va.n)->required();
  curv_cmd->add_option("--c", va.c)->capture_default_str();
  curv_cmd->add_option("--t-max", va.t_max)->capture_default_str();
  curv_cmd->add_option("--samples", va.samples)->capture_default_str();

  FindArgs fa;
  double fa_a = 0, fa_b = 0;
  auto* find_cmd = app.add_subcommand("find-params", "Search for (p, q) with positive scalar curvature");
  find_cmd->add_option("--n", fa.n)->required();
  find_cmd->add_option("--c", fa.c, "space-form curvature")->capture_default_str();
  auto* a_opt = find_cmd->add_option("--a", fa_a, "lower bound of the base scalar curvature");
  auto* b_opt = find_cmd->add_option("--b", fa_b, "bound on sum |R(e_i,e_j)e|^2 / |e|^2");
  find_cmd->add_flag("--nonneg-q", fa.nonneg_q, "restrict to q >= 0");
  find_cmd->add_flag("--json", fa.json_out);
  a_opt->excludes("--c");
  b_opt->excludes("--c");

  VerifyArgs xa;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites; JSON lines on stdout");
  verify_cmd->add_option("--suite", xa.suite, "identities|symmetries|regions|oracle|interval|all")
      ->capture_default_str();
  verify_cmd->add_option("--seed", xa.seed)->capture_default_str();
  verify_cmd->add_option("--tol-scale", xa.tol_scale)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*classify_cmd) {
      return cmd_classify(ca, out);
    }
    if (*scan_cmd) {
      return cmd_scan(sa, out, err);
    }
    if (*curv_cmd) {
      return cmd_curvature(va, out, err);
    }
    if (*find_cmd) {
      if (*a_opt) {
        fa.a = fa_a;
      }
      if (*b_opt) {
        fa.b = fa_b;
      }
      return cmd_find_params(fa, out);
    }
    if (*verify_cmd) {
      return cmd_verify(xa, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace cgm::cli
