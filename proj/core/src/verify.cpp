#include "cgm/verify.hpp"

#include "cgm/curvature.hpp"
#include "cgm/oracle.hpp"
#include "cgm/regions.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cgm::verify {

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::identities: return "identities";
    case Suite::symmetries: return "symmetries";
    case Suite::regions: return "regions";
    case Suite::oracle: return "oracle";
    case Suite::interval: return "interval";
    case Suite::all: return "all";
  }
  return "?";
}

Suite parse_suite(const std::string& name) {
  for (auto s : {Suite::identities, Suite::symmetries, Suite::regions, Suite::oracle, Suite::interval, Suite::all}) {
    if (to_string(s) == name) {
      return s;
    }
  }
  throw std::invalid_argument("unknown suite: " + name);
}

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Vec gaussian_vec(Rng& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) {
    v(i) = g(rng);
  }
  return v;
}

// Random value on a 1/8 grid, so that region boundaries are hit exactly.
double eighths(Rng& rng, double lo, double hi) {
  return static_cast<double>(uniform_int(rng, static_cast<int>(lo * 8), static_cast<int>(hi * 8))) / 8.0;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::string point(const Params& pq) { return "(" + fmt(pq.p) + "," + fmt(pq.q) + ")"; }

Check timed(const std::string& suite, const std::string& name, int criterion, const std::function<void(Check&)>& body) {
  Check check;
  check.suite = suite;
  check.name = name;
  check.criterion = criterion;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& ex) {
    check.pass = false;
    check.detail = std::string("exception: ") + ex.what();
  }
  check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return check;
}

// Radius inside I_q, kept away from the boundary.
double interior_radius(Rng& rng, const Params& pq, double cap) {
  if (pq.q < 0.0) {
    return uniform(rng, 0.0, 0.95) * std::min(-1.0 / pq.q, cap);
  }
  return uniform(rng, 0.0, cap);
}

LiftVector random_lift(Rng& rng, int n) { return {gaussian_vec(rng, n), gaussian_vec(rng, n)}; }

// Algebraic curvature tensor of Gauss type, R(X,Y)Z = <SY,Z>SX - <SX,Z>SY.
BaseCurvature gauss_type_base(Rng& rng, int n) {
  Eigen::MatrixXd m = Eigen::MatrixXd::NullaryExpr(n, n, [&] { return uniform(rng, -1.0, 1.0); });
  const Eigen::MatrixXd s = 0.5 * (m + m.transpose());
  return BaseCurvature::custom(n, [s](const Vec& x, const Vec& y, const Vec& z) -> Vec {
    const Vec sx = s * x;
    const Vec sy = s * y;
    return sy.dot(z) * sx - sx.dot(z) * sy;
  });
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Check> identities(const Options& options) {
  std::vector<Check> out;
  const double tol = 1e-12 * options.tol_scale;

  out.push_back(timed("identities", "identity.omega_q_A_minus_qB_equals_C", 2, [&](Check& ck) {
    Rng rng(options.seed * 1000 + 1);
    for (int i = 0; i < 10000; ++i) {
      const Params pq{uniform(rng, -6, 6), uniform(rng, -4, 4)};
      const int n = uniform_int(rng, 2, 8);
      const double t = pq.q < 0.0 ? uniform(rng, 0.0, 0.999) * (-1.0 / pq.q) : std::pow(10.0, uniform(rng, -3, 3));
      const CoefficientSet cs = coefficients(pq, t, n);
      const double wq = omega_q(t, pq);
      const double lhs = wq * (cs.A - pq.q * cs.B);
      const double scale = std::max({std::abs(wq * cs.A), std::abs(wq * pq.q * cs.B), std::abs(cs.C), 1e-300});
      ck.max_err = std::max(ck.max_err, std::abs(lhs - cs.C) / scale);
    }
    ck.pass = ck.max_err <= tol;
    ck.detail = "10000 samples, error relative to the largest term";
  }));

  out.push_back(timed("identities", "identity.C_equals_2P_plus_radial_Q", 2, [&](Check& ck) {
    Rng rng(options.seed * 1000 + 2);
    for (int i = 0; i < 10000; ++i) {
      const Params pq{uniform(rng, -6, 6), uniform(rng, -4, 4)};
      const int n = uniform_int(rng, 2, 8);
      const double t = pq.q < 0.0 ? uniform(rng, 0.0, 0.999) * (-1.0 / pq.q) : std::pow(10.0, uniform(rng, -3, 3));
      const PolySpec c_poly = poly_C(pq, n);
      const double p_val = poly_P(pq)(t);
      const double q_val = poly_Q(pq)(t);
      const double radial_term = (n - 2.0) * (1.0 + pq.q * t) * q_val;
      const double rhs = 2.0 * p_val + radial_term;
      double scale = std::abs(2.0 * p_val) + std::abs(radial_term);
      double tk = 1.0;
      for (double coeff : c_poly.coefficients()) {
        scale += std::abs(coeff) * tk;
        tk *= t;
      }
      ck.max_err = std::max(ck.max_err, std::abs(c_poly(t) - rhs) / std::max(scale, 1e-300));
    }
    ck.pass = ck.max_err <= tol;
    ck.detail = "10000 samples, error relative to the sum of term magnitudes";
  }));

  out.push_back(timed("identities", "limit.vertical_perp_e_tends_to_mu", 7, [&](Check& ck) {
    const Params pq{2.0, -1.0};
    const double t = 1.0 - 1e-6;
    const double k = space_form::sectional_vv(pq, t, 0.0, 0.0, 3);
    // Same plane through the general curvature formulas.
    const BaseCurvature base = BaseCurvature::space_form(3, 0.0);
    const FiberPoint e(std::sqrt(t) * Vec::Unit(3, 0));
    const double k_general = sectional(pq, e, PlaneKind::vv, Vec::Unit(3, 1), Vec::Unit(3, 2), base);
    ck.max_err = std::max(std::abs(k - 4.0), std::abs(k_general - 4.0)) / 4.0;
    ck.pass = ck.max_err <= 1e-4 * options.tol_scale;
    ck.detail = "(p,q)=(2,-1), n=3, t=1-1e-6: K=" + fmt(k) + " vs mu(2)=4";
  }));

  out.push_back(timed("identities", "zero_section.identities", 7, [&](Check& ck) {
    Rng rng(options.seed * 1000 + 3);
    double err_vv = 0.0, err_hv = 0.0, err_s = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const Params pq{uniform(rng, -6, 6), uniform(rng, -4, 4)};
      const int n = uniform_int(rng, 2, 6);
      const BaseCurvature base =
          i % 2 == 0 ? BaseCurvature::space_form(n, uniform(rng, -3, 3)) : gauss_type_base(rng, n);
      const FiberPoint zero = FiberPoint::zero(n);
      Vec x = gaussian_vec(rng, n).normalized();
      Vec y = gaussian_vec(rng, n);
      y = (y - y.dot(x) * x).normalized();
      const double kvv = sectional(pq, zero, PlaneKind::vv, x, y, base);
      const double khv = sectional(pq, zero, PlaneKind::hv, x, y, base);
      const double s = scalar(pq, n, zero, base);
      const double expected_s = base.scalar() + n * (n - 1.0) * (2.0 * pq.p + pq.q);
      const double scale_k = std::max(1.0, std::abs(2.0 * pq.p + pq.q));
      err_vv = std::max(err_vv, std::abs(kvv - (2.0 * pq.p + pq.q)) / scale_k);
      err_hv = std::max(err_hv, std::abs(khv));
      const double scale_s = std::max({1.0, std::abs(base.scalar()), n * (n - 1.0) * std::abs(2.0 * pq.p + pq.q)});
      err_s = std::max(err_s, std::abs(s - expected_s) / scale_s);
    }
    ck.max_err = std::max({err_vv, err_hv, err_s});
    ck.pass = ck.max_err <= tol;
    ck.detail = "1000 samples: K_vv err " + fmt(err_vv) + ", K_hv err " + fmt(err_hv) + ", scalar err " + fmt(err_s);
  }));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Check> symmetries(const Options& options) {
  struct Errors {
    double antisym = 0.0, skew = 0.0, pair = 0.0, bianchi = 0.0;
  } err;
  const auto start = std::chrono::steady_clock::now();
  std::string failure;
  try {
    Rng rng(options.seed * 1000 + 11);
    for (int i = 0; i < 1000; ++i) {
      const Params pq{uniform(rng, -3, 3), uniform(rng, -2, 2)};
      const int n = uniform_int(rng, 2, 4);
      const BaseCurvature base =
          i % 2 == 0 ? BaseCurvature::space_form(n, uniform(rng, -2, 2)) : gauss_type_base(rng, n);
      const double t = interior_radius(rng, pq, 4.0);
      const FiberPoint e(std::sqrt(t) * gaussian_vec(rng, n).normalized());
      const LiftVector a = random_lift(rng, n), b = random_lift(rng, n), c = random_lift(rng, n),
                       d = random_lift(rng, n);
      const auto rabc = riemann(pq, e, a, b, c, base);
      const auto rbac = riemann(pq, e, b, a, c, base);
      const auto rbca = riemann(pq, e, b, c, a, base);
      const auto rcab = riemann(pq, e, c, a, b, base);
      const double scale_vec = std::max({rabc.max_abs(), rbca.max_abs(), rcab.max_abs(), 1e-12});
      err.antisym = std::max(err.antisym, (rabc + rbac).max_abs() / scale_vec);
      err.bianchi = std::max(err.bianchi, (rabc + rbca + rcab).max_abs() / scale_vec);

      const double abcd = riemann4(pq, e, a, b, c, d, base);
      const double abdc = riemann4(pq, e, a, b, d, c, base);
      const double cdab = riemann4(pq, e, c, d, a, b, base);
      const double scale4 = std::max({std::abs(abcd), std::abs(abdc), std::abs(cdab), 1e-12});
      err.skew = std::max(err.skew, std::abs(abcd + abdc) / scale4);
      err.pair = std::max(err.pair, std::abs(abcd - cdab) / scale4);
    }
  } catch (const std::exception& ex) {
    failure = ex.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double tol = 1e-9 * options.tol_scale;
  const auto make = [&](const std::string& name, double e) {
    Check ck;
    ck.suite = "symmetries";
    ck.name = name;
    ck.criterion = 2;
    ck.max_err = e;
    ck.pass = failure.empty() && e <= tol;
    ck.detail = failure.empty() ? "1000 samples, space-form and Gauss-type bases" : "exception: " + failure;
    ck.seconds = seconds / 4.0;
    return ck;
  };
  return {make("symmetry.antisymmetry_AB", err.antisym), make("symmetry.skew_CD", err.skew),
          make("symmetry.pair_exchange", err.pair), make("symmetry.first_bianchi", err.bianchi)};
}

// ---------------------------------------------------------------------------

namespace {

Params stratified_point(Rng& rng, int stratum) {
  const double p = eighths(rng, -10, 10);
  if (stratum == 0) {
    // Every fourth point on the line p + q = 1.
    if (uniform_int(rng, 0, 3) == 0) {
      const double pl = eighths(rng, 1.125, 10);
      return {pl, 1.0 - pl};
    }
    double q = eighths(rng, -4, -0.125);
    return {p, q};
  }
  if (stratum == 1) {
    return {p, 0.0};
  }
  return {p, eighths(rng, 0.125, 6)};
}

Params delta_point(Rng& rng, int i) {
  switch (i % 8) {
    case 0:
    case 1: return {eighths(rng, -2, 10), 0.0};
    case 2:
    case 3: {
      const double p = eighths(rng, 0, 10);
      return {p, 1.0 - p};
    }
    case 4: return {1.0, eighths(rng, -2, 6)};
    default: return {eighths(rng, -10, 10), eighths(rng, -6, 6)};
  }
}

}  // namespace

std::vector<Check> regions(const Options& options) {
  std::vector<Check> out;

  out.push_back(timed("regions", "regions.vertical_positivity_vs_bruteforce", 3, [&](Check& ck) {
    Rng rng(options.seed * 1000 + 21);
    int disagreements = 0, banded = 0, total = 0;
    std::string first;
    for (int stratum = 0; stratum < 3; ++stratum) {
      for (int i = 0; i < 500; ++i) {
        const Params pq = stratified_point(rng, stratum);
        for (int n : {2, 3}) {
          ++total;
          const bool classified = vertical_positivity(pq, n);
          const VerticalProbe probe = probe_vertical_positivity(pq, n, 10000, options.seed + 977 * total);
          if (classified == probe.positive) {
            continue;
          }
          if (std::abs(probe.min_value) <= 1e-7) {
            ++banded;
            continue;
          }
          ++disagreements;
          ck.max_err = std::max(ck.max_err, std::abs(probe.min_value));
          if (first.empty()) {
            first = point(pq) + " n=" + std::to_string(n) + " classified=" + (classified ? "true" : "false") +
                    " brute min=" + fmt(probe.min_value) + " at t=" + fmt(probe.t_at_min);
          }
        }
      }
    }
    ck.pass = disagreements == 0;
    ck.detail = std::to_string(total) + " cases, " + std::to_string(disagreements) + " disagreements, " +
                std::to_string(banded) + " inside the 1e-7 band" + (first.empty() ? "" : "; first: " + first);
  }));

  struct DeltaCase {
    Params pq;
    int n;
    double c;
    std::string label;
  };
  std::vector<DeltaCase> delta_members;
  out.push_back(timed("regions", "regions.nonneg_sectional_witness", 3, [&](Check& ck) {
    Rng rng(options.seed * 1000 + 22);
    const std::vector<std::pair<std::string, Rational>> curvatures = {
        {"0", Rational(0)}, {"1", Rational(1)}, {"16/3", Rational(16, 3)}, {"6", Rational(6)}};
    int failures = 0, witnessed = 0, total = 0, member_negative = 0, unwitnessed = 0;
    std::string first;
    for (const auto& [label, c] : curvatures) {
      const double cd = to_double(c);
      for (int i = 0; i < 500; ++i) {
        const Params pq = delta_point(rng, i);
        for (int n : {2, 3}) {
          ++total;
          const bool member = nonneg_sectional(ExactParams::from(pq), n, c);
          const PlaneWitness structured = structured_min_sectional(pq, n, cd);
          bool ok = true;
          if (member) {
            delta_members.push_back({pq, n, cd, label});
            ok = structured.min_value >= -1e-9;
            member_negative += ok ? 0 : 1;
          } else if (2.0 * pq.p + pq.q >= 0.0) {
            ok = structured.min_value < -1e-9;
            witnessed += ok ? 1 : 0;
            unwitnessed += ok ? 0 : 1;
          }
          if (!ok) {
            ++failures;
            ck.max_err = std::max(ck.max_err, std::abs(structured.min_value));
            if (first.empty()) {
              first = point(pq) + " n=" + std::to_string(n) + " c=" + label + " member=" +
                      (member ? "true" : "false") + " min=" + fmt(structured.min_value) + " (" + structured.family +
                      ", t=" + fmt(structured.t) + ")";
            }
          }
        }
      }
    }
    ck.pass = failures == 0;
    ck.detail = std::to_string(total) + " cases, " + std::to_string(delta_members.size()) + " members, " +
                std::to_string(witnessed) + " non-members witnessed; " + std::to_string(member_negative) +
                " members negative on structured planes, " + std::to_string(unwitnessed) +
                " non-members without witness" + (first.empty() ? "" : "; first: " + first);
  }));

  // Same members, searched over random mixed planes as well.
  out.push_back(timed("regions", "regions.nonneg_sectional_random_planes", 0, [&](Check& ck) {
    int negative = 0;
    std::string first;
    double worst = 0.0;
    for (std::size_t k = 0; k < delta_members.size(); ++k) {
      const DeltaCase& m = delta_members[k];
      const PlaneWitness random = random_min_sectional(m.pq, m.n, m.c, 1000, options.seed + 31 * k);
      if (random.min_value < -1e-9) {
        ++negative;
        ck.max_err = std::max(ck.max_err, -random.min_value);
        if (random.min_value < worst || first.empty()) {
          worst = std::min(worst, random.min_value);
          first = point(m.pq) + " n=" + std::to_string(m.n) + " c=" + m.label + " min=" + fmt(random.min_value) +
                  " at t=" + fmt(random.t);
        }
      }
    }
    ck.pass = negative == 0;
    ck.detail = std::to_string(delta_members.size()) + " members, " + std::to_string(negative) +
                " with a random plane of curvature < -1e-9" + (first.empty() ? "" : "; worst: " + first);
  }));

  out.push_back(timed("regions", "regions.scalar_sufficient_soundness", 4, [&](Check& ck) {
    Rng rng(options.seed * 1000 + 23);
    int labelled = 0, failures = 0, attempts = 0;
    std::string first;
    ck.max_err = 0.0;
    while (labelled < 1000 && attempts < 200000) {
      ++attempts;
      const int n = uniform_int(rng, 2, 5);
      Params pq;
      switch (attempts % 5) {
        case 0: pq = {1.0, uniform(rng, 0.01, 5)}; break;
        case 1: pq = {uniform(rng, 1, 2), 0.0}; break;
        case 2: pq = {eighths(rng, 2, 6), 0.0}; break;
        case 3: {
          const double p = uniform(rng, 1.01, 6);
          pq = {p, 1.0 - p};
          break;
        }
        default: {
          const double p = uniform(rng, 1.01, 6);
          pq = {p, uniform(rng, 1.0 - p, -0.01)};
          break;
        }
      }
      const double c = uniform(rng, -30, 60);
      if (c == 0.0 || scalar_pos_sufficient(pq, n, c) == ScalarCase::None) {
        continue;
      }
      ++labelled;
      const Certificate cert = certify(pq, n, c);
      if (!(cert.min_scalar_on_grid > 0.0)) {
        ++failures;
        ck.max_err = std::max(ck.max_err, std::abs(cert.min_scalar_on_grid));
        if (first.empty()) {
          first = point(pq) + " n=" + std::to_string(n) + " c=" + fmt(c) + " case " +
                  to_string(scalar_pos_sufficient(pq, n, c)) + " min=" + fmt(cert.min_scalar_on_grid);
        }
      }
    }
    ck.pass = failures == 0 && labelled == 1000;
    ck.detail = std::to_string(labelled) + " labelled samples, " + std::to_string(failures) + " with grid minimum <= 0" +
                (first.empty() ? "" : "; first: " + first);
  }));

  out.push_back(timed("regions", "regions.inclusions", 0, [&](Check& ck) {
    int violations = 0;
    std::string first;
    const std::vector<Rational> cs = {Rational(1, 2), Rational(1), Rational(4, 3), Rational(2), Rational(16, 3),
                                      Rational(6)};
    for (int i = 0; i < 100; ++i) {
      for (int j = 0; j < 100; ++j) {
        // 10^4-point grid over [-9, 3] x [-4, 4], with nodes on the distinguished lines.
        const ExactParams pq{Rational(-9) + Rational(12 * i, 99), Rational(-4) + Rational(8 * j, 99)};
        const auto note = [&](const std::string& what) {
          ++violations;
          if (first.empty()) {
            first = what + " at (" + cgm::to_string(pq.p) + "," + cgm::to_string(pq.q) + ")";
          }
        };
        if (region::gamma(pq) && !region::gamma_prime(pq)) note("Γ ⊄ Γ′");
        if (region::gamma_plus1(pq) || region::gamma_plus2(pq) || region::gamma_plus3(pq)) {
          if (!region::omega(pq)) note("Γ₊ ⊄ Ω");
        }
        for (std::size_t a = 0; a < cs.size(); ++a) {
          const bool in_a = region::delta(pq, cs[a]);
          if (in_a && !region::delta_prime(pq, cs[a])) note("Δ_c ⊄ Δ′_c");
          if (in_a && !region::gamma(pq)) note("Δ_c ⊄ Γ");
          if (in_a && !region::delta0(pq)) note("Δ_c ⊄ Δ₀");
          for (std::size_t b = 0; b < a; ++b) {
            // cs[a] > cs[b] > 0
            if (in_a && !region::delta(pq, cs[b])) note("Δ_c not monotone in c");
            if (region::delta_prime(pq, cs[a]) && !region::delta_prime(pq, cs[b])) note("Δ′_c not monotone in c");
          }
        }
      }
    }
    // Points on the distinguished lines themselves.
    for (int k = -40; k <= 40; ++k) {
      const Rational p(k, 4);
      for (const ExactParams& pq : {ExactParams{p, Rational(1) - p}, ExactParams{p, Rational(0)}}) {
        for (const auto& c : cs) {
          if (region::delta(pq, c) && !region::gamma(pq)) {
            ++violations;
          }
          if (region::delta(pq, c) && !region::delta_prime(pq, c)) {
            ++violations;
          }
        }
      }
    }
    ck.max_err = violations;
    ck.pass = violations == 0;
    ck.detail = std::to_string(violations) + " inclusion violations" + (first.empty() ? "" : "; first: " + first);
  }));

  const auto search_check = [&](const std::string& name, bool thm3) {
    return timed("regions", name, 6, [&, thm3](Check& ck) {
      int failures = 0;
      double worst = std::numeric_limits<double>::infinity();
      std::string first;
      for (int n : {2, 3, 5}) {
        for (double c : {-10.0, -1.0, 0.0, 1.0, 10.0}) {
          const SearchResult r = thm3 ? find_params_thm3(n, c) : find_params_thm1(n, c);
          bool ok = r.certified();
          if (thm3) {
            ok = ok && r.params.q >= 0.0;
            if (c < 0.0) {
              ok = ok && r.certificate.g_coefficients_positive;
            }
          }
          worst = std::min(worst, r.certificate.min_scalar_on_grid);
          if (!ok) {
            ++failures;
            if (first.empty()) {
              first = "n=" + std::to_string(n) + " c=" + fmt(c) + " -> " + point(r.params) +
                      " min=" + fmt(r.certificate.min_scalar_on_grid);
            }
          }
        }
      }
      ck.pass = failures == 0;
      ck.max_err = failures;
      ck.detail = "15 (n,c) pairs, smallest certificate minimum " + fmt(worst) +
                  (first.empty() ? "" : "; first failure: " + first);
    });
  };
  out.push_back(search_check("search.thm1_family", false));
  out.push_back(search_check("search.nonneg_q", true));

  out.push_back(timed("regions", "search.general_base", 6, [&](Check& ck) {
    int failures = 0;
    std::string detail;
    for (const auto& [a, b] : std::vector<std::pair<double, double>>{{0.0, 0.0}, {-12.0, 8.0}}) {
      const GeneralSearchResult g = find_params_general(3, a, b);
      const bool ok = g.result.certified() && g.result.params.q >= 0.0;
      failures += ok ? 0 : 1;
      detail += "(a,b)=(" + fmt(a) + "," + fmt(b) + "): c_used=" + fmt(g.c_used) + " -> " + point(g.result.params) +
                " min=" + fmt(g.result.certificate.min_scalar_on_grid) + "; ";
    }
    ck.pass = failures == 0;
    ck.max_err = failures;
    ck.detail = detail;
  }));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Check> oracle(const Options& options) {
  using oracle::Chart;
  using oracle::Suite;
  std::vector<Check> out;
  const std::vector<Params> points = {{0, 0}, {1, 1}, {2, 0}, {1, -0.5}, {2, -1}, {-1, 3}};
  const oracle::Tolerances tolerances = oracle::Tolerances{}.scaled(options.tol_scale);

  for (Suite suite : {Suite::sectional, Suite::ricci, Suite::scalar, Suite::connection}) {
    out.push_back(timed("oracle", "oracle." + oracle::to_string(suite), 1, [&, suite](Check& ck) {
      Rng rng(options.seed * 1000 + 41);
      int comparisons = 0, failures = 0;
      std::string first;
      for (int n : {2, 3}) {
        for (double c : {-1.0, 0.0, 1.0}) {
          const Chart chart(n, c);
          for (const Params& pq : points) {
            // t_max = -1/q on ball bundles, 1 otherwise.
            const double t_max = pq.q < 0.0 ? -1.0 / pq.q : 1.0;
            for (double t : {0.0, 0.25, 0.81 * t_max}) {
              // Base point within |x| <= 0.5 and a random fibre direction.
              const Vec x = 0.5 * uniform(rng, 0.0, 1.0) * gaussian_vec(rng, n).normalized();
              const Vec dir = gaussian_vec(rng, n);
              const auto pt = oracle::make_point(chart, x, dir, t);
              const auto report = oracle::compare(pq, chart, pt, suite, tolerances);
              comparisons += static_cast<int>(report.records.size());
              ck.max_err = std::max(ck.max_err, report.max_rel_err());
              if (!report.pass) {
                for (const auto& r : report.records) {
                  failures += r.pass ? 0 : 1;
                }
                if (!report.diagnostics.empty()) {
                  ++failures;
                }
                if (first.empty()) {
                  first = point(pq) + " n=" + std::to_string(n) + " c=" + fmt(c) + " t=" + fmt(t) +
                          " " + report.diagnostics;
                }
              }
            }
          }
        }
      }
      ck.pass = failures == 0;
      ck.detail = std::to_string(comparisons) + " comparisons, tolerance " + fmt(tolerances.for_suite(suite)) +
                  (first.empty() ? "" : "; first failure: " + first);
    }));
  }

  out.push_back(timed("oracle", "oracle.vertical_ricci_at_zero_section", 8, [&](Check& ck) {
    const Params pq{1.0, 1.0};
    const int n = 3;
    const Chart chart(n, 0.0);
    const oracle::TMPoint pt{Vec::Zero(n), Vec::Zero(n)};
    const auto report = oracle::compare(pq, chart, pt, Suite::ricci, tolerances);
    const auto it = std::find_if(report.records.begin(), report.records.end(),
                                 [](const oracle::ComparisonRecord& r) { return r.name == "rho_vv(0,0)"; });
    if (it == report.records.end()) {
      ck.detail = "vertical Ricci record missing: " + report.diagnostics;
      return;
    }
    const double with_n_minus_1 = (n - 1.0) * (2.0 * pq.p + pq.q);
    const double with_n_minus_2 = (n - 2.0) * (2.0 * pq.p + pq.q);
    ck.max_err = std::abs(it->numeric - with_n_minus_1) / with_n_minus_1;
    const double alt_err = std::abs(it->numeric - with_n_minus_2) / with_n_minus_2;
    ck.pass = ck.max_err <= 1e-4 * options.tol_scale && alt_err > 1e-4;
    ck.detail = "numeric " + fmt(it->numeric) + " vs (n-1)(2p+q)=" + fmt(with_n_minus_1) + " and (n-2)(2p+q)=" +
                fmt(with_n_minus_2);
  }));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Check> interval(const Options& options) {
  (void)options;
  std::vector<Check> out;
  out.push_back(timed("interval", "interval.cheeger_gromoll_n2", 5, [&](Check& ck) {
    const PositivityInterval iv = scalar_positivity_interval({1.0, 1.0}, 2);
    const bool lo_ok = iv.determined && std::abs(iv.c_lo) <= 1e-6;
    const bool hi_ok = iv.determined && (iv.hi_unbounded || iv.c_hi >= 40.0);
    ck.pass = lo_ok && hi_ok;
    ck.max_err = iv.hi_unbounded ? 0.0 : std::max(0.0, 40.0 - iv.c_hi);
    ck.detail = "c_lo=" + fmt(iv.c_lo) + " (want 0 +- 1e-6), c_hi=" + fmt(iv.c_hi) + " (want >= 40)";
  }));
  out.push_back(timed("interval", "interval.cheeger_gromoll_n3", 5, [&](Check& ck) {
    const PositivityInterval iv = scalar_positivity_interval({1.0, 1.0}, 3);
    const bool lo_ok = iv.determined && iv.c_lo < 0.0;
    const bool hi_ok = iv.determined && (iv.hi_unbounded || iv.c_hi > 60.0);
    ck.pass = lo_ok && hi_ok;
    ck.max_err = iv.hi_unbounded ? 0.0 : std::max(0.0, 60.0 - iv.c_hi);
    ck.detail = "c_lo=" + fmt(iv.c_lo) + " (want < 0), c_hi=" + fmt(iv.c_hi) + " (want > 60)";
  }));
  return out;
}

std::vector<Check> run(Suite suite, const Options& options) {
  switch (suite) {
    case Suite::identities: return identities(options);
    case Suite::symmetries: return symmetries(options);
    case Suite::regions: return regions(options);
    case Suite::oracle: return oracle(options);
    case Suite::interval: return interval(options);
    case Suite::all: {
      std::vector<Check> all;
      for (Suite s : {Suite::identities, Suite::symmetries, Suite::regions, Suite::oracle, Suite::interval}) {
        auto part = run(s, options);
        all.insert(all.end(), part.begin(), part.end());
      }
      return all;
    }
  }
  return {};
}

}  // namespace cgm::verify
