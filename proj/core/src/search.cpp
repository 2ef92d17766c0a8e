#include "cgm/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace cgm {

namespace {

std::string format(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  std::vector<double> out;
  out.reserve(count);
  if (count == 1) {
    out.push_back(lo);
    return out;
  }
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1)));
  }
  return out;
}

}  // namespace

std::vector<double> scalar_grid(const Params& params, std::size_t points, double t_clip) {
  if (points < 3) {
    throw std::invalid_argument("scalar grid needs at least 3 points");
  }
  std::vector<double> grid{0.0};
  if (params.q >= 0.0) {
    const auto rest = log_spaced(1e-6, t_clip, points - 1);
    grid.insert(grid.end(), rest.begin(), rest.end());
    return grid;
  }
  const double tmax = -1.0 / params.q;
  const std::size_t inner = (points - 1) / 2;
  const std::size_t outer = points - 1 - inner;
  for (double s : log_spaced(1e-6, 0.5, inner)) {
    grid.push_back(tmax * s);
  }
  // Boundary cluster: q t = -1 + s with s from 0.5 down to 1e-8.
  auto gaps = log_spaced(1e-8, 0.5, outer);
  std::reverse(gaps.begin(), gaps.end());
  for (double s : gaps) {
    grid.push_back(tmax * (1.0 - s));
  }
  grid.erase(std::remove_if(grid.begin(), grid.end(), [&](double t) { return !in_ball_bundle(params, t); }),
             grid.end());
  std::sort(grid.begin(), grid.end());
  return grid;
}

std::string describe_scalar_grid(const Params& params, std::size_t points, double t_clip) {
  std::ostringstream os;
  if (params.q >= 0.0) {
    os << "t=0 and " << points - 1 << " log-spaced radii on [1e-06, " << format(t_clip) << "]";
  } else {
    os << points << " radii on I_q=[0, " << format(-1.0 / params.q)
       << "): log-spaced interior plus clustering at the boundary down to 1e-8 relative";
  }
  return os.str();
}

ScalarProfile::ScalarProfile(const Params& params, int n, std::vector<double> grid)
    : params_(params), n_(n), grid_(std::move(grid)) {
  const PolySpec c_poly = poly_C(params, n);
  f_.reserve(grid_.size());
  phi_.reserve(grid_.size());
  for (double t : grid_) {
    const double radial = 1.0 + params.q * t;
    f_.push_back(horizontal_weight(params.p, t));
    phi_.push_back(std::pow(1.0 + t, params.p - 2.0) * c_poly(t) / (radial * radial));
  }
}

std::pair<double, double> ScalarProfile::min_scalar(double c) const {
  double best = std::numeric_limits<double>::infinity();
  double where = 0.0;
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    const double s = (n_ - 1.0) * (n_ * c - 0.5 * c * c * f_[i] + phi_[i]);
    if (std::isnan(s)) {
      return {std::numeric_limits<double>::quiet_NaN(), grid_[i]};
    }
    if (s < best) {
      best = s;
      where = grid_[i];
    }
  }
  return {best, where};
}

PositivityInterval scalar_positivity_interval(const Params& params, int n, const IntervalOptions& options) {
  PositivityInterval out;
  if (n < 2) {
    throw DomainError("dimension n must be at least 2");
  }
  if (!(params.q >= 0.0 || params.p + params.q >= 1.0)) {
    out.note = "infimum of the scalar curvature not controlled: need q >= 0 or p + q >= 1";
    return out;
  }
  const ScalarProfile profile(params, n, scalar_grid(params, options.grid_points, options.t_clip));
  const bool unbounded_fibres = params.q >= 0.0;
  const auto positive = [&](double c) {
    const double grid_min = profile.min_scalar(c).first;
    if (!(grid_min > 0.0)) {
      return false;
    }
    return !unbounded_fibres || scalar_spaceform_limit_at_infinity(params, n, c) >= 0.0;
  };
  if (!positive(0.0)) {
    out.note = "scalar curvature not positive at c = 0; interval undetermined";
    return out;
  }
  // Walk outwards by doubling, then bisect the first sign change.
  const auto edge = [&](double direction, bool& unbounded) {
    double good = 0.0;
    double probe = direction;
    while (positive(probe)) {
      good = probe;
      if (std::abs(probe) >= options.c_limit) {
        unbounded = true;
        return good;
      }
      probe *= 2.0;
    }
    double bad = probe;
    while (std::abs(bad - good) > options.tolerance) {
      const double mid = 0.5 * (good + bad);
      (positive(mid) ? good : bad) = mid;
    }
    return 0.5 * (good + bad);
  };
  out.c_hi = edge(1.0, out.hi_unbounded);
  out.c_lo = edge(-1.0, out.lo_unbounded);
  out.determined = true;
  out.note = "grid: " + describe_scalar_grid(params, options.grid_points, options.t_clip);
  if (unbounded_fibres) {
    out.note += "; limit t->inf included";
  }
  return out;
}

Certificate certify(const Params& params, int n, double c) {
  Certificate cert;
  const ScalarProfile profile(params, n, scalar_grid(params));
  const auto [m, t] = profile.min_scalar(c);
  cert.min_scalar_on_grid = m;
  cert.t_at_min = t;
  cert.grid = describe_scalar_grid(params);
  return cert;
}

namespace {

constexpr int kMaxGridSteps = 2000;

// Smallest p = 2 + k/10 with mu(p) > bound.
double first_p_above(double bound) {
  for (int k = 0; k < kMaxGridSteps; ++k) {
    const double p = (20.0 + k) / 10.0;
    if (mu(p) > bound) {
      return p;
    }
  }
  throw std::runtime_error("no p on the search grid satisfies the mu bound");
}

double next_grid_p(double p) { return (std::round(p * 10.0) + 1.0) / 10.0; }

// Raise p along the 0.1 grid until the certificate is positive.
SearchResult certify_family(SearchResult r, int n, double c, bool on_line) {
  for (int step = 0; step < kMaxGridSteps; ++step) {
    r.certificate = certify(r.params, n, c);
    r.path.push_back("(p,q)=(" + format(r.params.p) + "," + format(r.params.q) +
                     ") grid min=" + format(r.certificate.min_scalar_on_grid));
    if (r.certified()) {
      return r;
    }
    r.params.p = next_grid_p(r.params.p);
    if (on_line) {
      r.params.q = 1.0 - r.params.p;
    }
  }
  return r;
}

}  // namespace

SearchResult find_params_thm1(int n, double c) {
  if (n < 2) {
    throw DomainError("dimension n must be at least 2");
  }
  SearchResult r;
  if (n == 2) {
    r.route = "q = 0 family";
    if (c == 0.0) {
      r.params = {1.0, 0.0};
      r.path.push_back("flat base: any (p,0) with p > 0");
    } else {
      const double bound = c < 0.0 ? -c / (std::sqrt(std::numbers::e + 2.0) - std::sqrt(std::numbers::e)) : c;
      r.params = {first_p_above(bound), 0.0};
      r.path.push_back("mu(p) > " + format(bound));
    }
    return certify_family(r, n, c, false);
  }
  r.route = "p + q = 1 family (ball bundle, q < 0)";
  double p = 2.0;
  if (c != 0.0) {
    const double nn = n;
    const double bound = c < 0.0 ? -c / (std::sqrt(nn + 0.75) - std::sqrt(nn)) : c;
    p = first_p_above(bound);
    r.path.push_back("mu(p) > " + format(bound));
  }
  r.params = {p, 1.0 - p};
  return certify_family(r, n, c, true);
}

namespace {

double larger_root(double a2, double a1, double a0) {
  if (a2 == 0.0) {
    return a1 != 0.0 ? -a0 / a1 : -std::numeric_limits<double>::infinity();
  }
  const double disc = a1 * a1 - 4.0 * a2 * a0;
  if (disc < 0.0) {
    return -std::numeric_limits<double>::infinity();
  }
  const double s = std::sqrt(disc);
  return std::max((-a1 + s) / (2.0 * a2), (-a1 - s) / (2.0 * a2));
}

}  // namespace

SearchResult find_params_thm3(int n, double c) {
  if (n < 2) {
    throw DomainError("dimension n must be at least 2");
  }
  if (c == 0.0) {
    SearchResult r;
    r.route = "flat base: Γ₊³";
    r.params = {1.0, 1.0};
    r.certificate = certify(r.params, n, c);
    r.path.push_back("(1,1) in Γ₊³");
    return r;
  }
  if (n == 2 && c > 0.0) {
    SearchResult r = find_params_thm1(n, c);
    r.route = "n = 2: q = 0 family";
    return r;
  }
  const double nn = n;
  if (c > 0.0) {
    SearchResult r;
    r.route = "q above the larger roots of the t and t^2 coefficients of C";
    double p = first_p_above(c / (2.0 * nn));
    for (int step = 0; step < kMaxGridSteps; ++step, p = next_grid_p(p)) {
      // t^2 and t coefficients of C as quadratics in q.
      const double a_root = larger_root(2.0 * (nn - 2.0), nn + 2.0 * (nn - 3.0) * p - (nn - 2.0) * p * p, 0.0);
      const double b_root = larger_root(nn - 2.0, 2.0 * (nn + (nn - 1.0) * p), (nn - 2.0) * p * (2.0 - p));
      const double q_floor = std::max({0.0, a_root, b_root});
      const double q = (std::floor(q_floor * 10.0) + 1.0) / 10.0;
      r.params = {p, q};
      r.certificate = certify(r.params, n, c);
      const PolySpec cp = poly_C(r.params, n);
      r.path.push_back("p=" + format(p) + ": roots " + format(a_root) + ", " + format(b_root) + " -> q=" +
                       format(q) + ", grid min=" + format(r.certificate.min_scalar_on_grid));
      if (r.certified() && cp.poly.all_coefficients_positive()) {
        return r;
      }
    }
    return r;
  }

  // For n = 2 and p > 1 the leading coefficient of G is 2(1-p)q, so only q = 0 can work.
  SearchResult r;
  r.route = n == 2 ? "n = 2: integer p with q = 0 until every coefficient of G is positive"
                   : "integer p, doubling q until every coefficient of G is positive";
  const int max_doublings = n == 2 ? 1 : 80;
  const double p_start = std::max({2.0, 1.0 - 9.0 * c / 8.0, 1.0 + std::log(-3.0 * c) / std::log(2.0)});
  const Rational exact_c = to_rational(c);
  for (auto p = static_cast<unsigned>(std::ceil(p_start)); p < 4096; ++p) {
    Rational q(n == 2 ? 0 : 1);
    for (int doubling = 0; doubling < max_doublings; ++doubling, q *= 2) {
      const Polynomial<Rational> g = poly_G_exact(ExactParams{Rational(p), q}, n, exact_c);
      if (!g.all_coefficients_positive()) {
        continue;
      }
      r.params = {static_cast<double>(p), to_double(q)};
      r.certificate = certify(r.params, n, c);
      r.certificate.g_coefficients.clear();
      for (int k = 0; k <= g.degree(); ++k) {
        r.certificate.g_coefficients.push_back(to_double(g[static_cast<std::size_t>(k)]));
      }
      r.certificate.g_coefficients_positive = true;
      r.path.push_back("p=" + std::to_string(p) + ": q=" + to_string(q) + " after " + std::to_string(doubling) +
                       " doublings, grid min=" + format(r.certificate.min_scalar_on_grid));
      return r;
    }
    r.path.push_back("p=" + std::to_string(p) + (n == 2 ? ": G has a non-positive coefficient, advancing p"
                                                        : ": no q up to 2^80, advancing p"));
  }
  return r;
}

GeneralSearchResult find_params_general(int n, double a, double b) {
  if (b < 0.0) {
    throw DomainError("curvature bound b must be non-negative");
  }
  if (n < 2) {
    throw DomainError("dimension n must be at least 2");
  }
  const double nn = n;
  const double bound = std::min(a / (nn * (nn - 1.0)), -std::sqrt(b / (2.0 * (nn - 1.0))));
  const double margin = std::max(1.0, 0.01 * std::abs(bound));
  GeneralSearchResult out;
  out.c_used = bound - margin;
  out.result = find_params_thm3(n, out.c_used);
  return out;
}

}  // namespace cgm
