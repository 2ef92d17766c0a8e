#include "cgm/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace cgm {

std::string to_string(GammaComponent component) {
  switch (component) {
    case GammaComponent::GammaPlus1: return "Γ₊¹";
    case GammaComponent::GammaPlus2: return "Γ₊²";
    case GammaComponent::GammaPlus3: return "Γ₊³";
    case GammaComponent::GammaMinus: return "Γ₋";
    case GammaComponent::GammaZ: return "Γ_Z";
    case GammaComponent::GammaPrimeMinus: return "Γ′₋";
    case GammaComponent::GammaPrimeZ: return "Γ′_Z";
    case GammaComponent::None: return "none";
  }
  return "none";
}

std::string to_string(ScalarCase label) {
  switch (label) {
    case ScalarCase::a: return "a";
    case ScalarCase::b: return "b";
    case ScalarCase::c: return "c";
    case ScalarCase::d: return "d";
    case ScalarCase::e: return "e";
    case ScalarCase::FlatGamma: return "Γ";
    case ScalarCase::FlatGammaPrime: return "Γ′";
    case ScalarCase::None: return "none";
  }
  return "none";
}

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kTwo(2);

Rational lambda_of(const Rational& p) { return hyperbola_lambda_of(p); }

Rational kappa1_of(const Rational& p) { return (p - kTwo) * (p - kTwo) / Rational(4); }

Rational abs_of(const Rational& x) { return x < kZero ? Rational(-x) : x; }

}  // namespace

namespace region {

bool gamma_plus1(const ExactParams& pq) { return pq.p > Rational(-8) && pq.p <= Rational(-2) && pq.q > lambda_of(pq.p); }

bool gamma_plus2(const ExactParams& pq) {
  return pq.p >= Rational(-2) && pq.p <= kZero && kTwo * pq.p + pq.q > kZero;
}

bool gamma_plus3(const ExactParams& pq) { return pq.p >= kZero && pq.p <= kOne && pq.q > kZero; }

bool gamma_minus(const ExactParams& pq) { return pq.p + pq.q == kOne && pq.q < kZero; }

bool gamma_prime_minus(const ExactParams& pq) { return pq.p + pq.q >= kOne && pq.q < kZero; }

bool gamma_z(const ExactParams& pq) { return pq.q == kZero && pq.p > kZero && pq.p <= kTwo; }

bool gamma_prime_z(const ExactParams& pq) { return pq.q == kZero && pq.p > kZero; }

bool gamma(const ExactParams& pq) {
  return gamma_minus(pq) || gamma_z(pq) || gamma_plus1(pq) || gamma_plus2(pq) || gamma_plus3(pq);
}

bool gamma_prime(const ExactParams& pq) {
  return gamma_prime_minus(pq) || gamma_prime_z(pq) || gamma_plus1(pq) || gamma_plus2(pq) || gamma_plus3(pq);
}

bool omega(const ExactParams& pq) {
  const Rational& p = pq.p;
  const Rational& q = pq.q;
  if (!(kTwo * p + q > kZero)) {
    return false;
  }
  const bool omega1 = abs_of(p) > kTwo && q > kappa1_of(p);
  const bool omega2 = p >= Rational(-2) && p <= kZero && kTwo * p + q > kZero;
  const bool omega3 = p >= kZero && p <= kTwo && q > kZero;
  return omega1 || omega2 || omega3;
}

namespace {

bool delta_plus(const ExactParams& pq) {
  const Rational& p = pq.p;
  const Rational& q = pq.q;
  const bool d1 = p > Rational(-8) && p <= Rational(-2) && q >= lambda_of(p);
  const bool d2 = p >= Rational(-2) && p <= kZero && kTwo * p + q >= kZero;
  return d1 || d2 || gamma_plus3(pq);
}

bool delta_z(const ExactParams& pq) { return pq.q == kZero && pq.p >= kZero && pq.p <= kTwo; }

bool delta_prime_z(const ExactParams& pq) { return pq.q == kZero && pq.p >= kZero; }

// mu(p) >= 3c/4
bool horizontal_cut(const Rational& p, const Rational& c) { return compare_mu(p, Rational(3) * c / Rational(4)) >= 0; }

bool delta_c_plus(const ExactParams& pq, const Rational& c) {
  return pq.p == kOne && pq.q > kZero && c <= Rational(4, 3);
}

}  // namespace

bool delta0(const ExactParams& pq) { return gamma_minus(pq) || delta_z(pq) || delta_plus(pq); }

bool delta0_prime(const ExactParams& pq) { return gamma_prime_minus(pq) || delta_prime_z(pq) || delta_plus(pq); }

bool delta(const ExactParams& pq, const Rational& c) {
  if (c == kZero) {
    return delta0(pq);
  }
  if (c < kZero) {
    return false;
  }
  const bool minus = gamma_minus(pq) && horizontal_cut(pq.p, c);
  const bool zee = pq.q == kZero && pq.p >= kOne && pq.p <= kTwo && horizontal_cut(pq.p, c);
  return minus || zee || delta_c_plus(pq, c);
}

bool delta_prime(const ExactParams& pq, const Rational& c) {
  if (c == kZero) {
    return delta0_prime(pq);
  }
  if (c < kZero) {
    return false;
  }
  const bool minus = gamma_prime_minus(pq) && horizontal_cut(pq.p, c);
  const bool zee = pq.q == kZero && pq.p >= kOne && horizontal_cut(pq.p, c);
  return minus || zee || delta_c_plus(pq, c);
}

}  // namespace region

int compare_mu(const Rational& p, const Rational& x) {
  if (p < kOne) {
    throw DomainError("mu(p) is defined for p >= 1");
  }
  if (x <= kZero) {
    return 1;
  }
  if (p == kOne) {
    return kOne == x ? 0 : (kOne > x ? 1 : -1);
  }
  // p = a/b: mu^b = p^a / (p-1)^(a-b), so compare p^a with x^b (p-1)^(a-b).
  const BigInt a = boost::multiprecision::numerator(p);
  const BigInt b = boost::multiprecision::denominator(p);
  if (a <= 4096 && b <= 256) {
    // With x = u/v, clear denominators: a^a v^b against u^b (a-b)^(a-b) b^b.
    using boost::multiprecision::pow;
    const auto ai = a.convert_to<unsigned>();
    const auto bi = b.convert_to<unsigned>();
    const BigInt u = boost::multiprecision::numerator(x);
    const BigInt v = boost::multiprecision::denominator(x);
    const BigInt lhs = pow(a, ai) * pow(v, bi);
    const BigInt rhs = pow(u, bi) * pow(BigInt(a - b), ai - bi) * pow(b, bi);
    return lhs == rhs ? 0 : (lhs > rhs ? 1 : -1);
  }
  const double m = mu(to_double(p));
  const double xd = to_double(x);
  return m == xd ? 0 : (m > xd ? 1 : -1);
}

Rational mu_rational(const Rational& p) {
  if (auto exact = mu_exact(p)) {
    return *exact;
  }
  return to_rational(mu(to_double(p)));
}

namespace {

// |c - k| < m k with m = sqrt(m_sq) and k > 0, decided on squares.
bool within(const Rational& c, const Rational& k, const std::optional<Rational>& m_sq) {
  if (!m_sq || k <= kZero) {
    return false;
  }
  const Rational d = c - k;
  return d * d < *m_sq * k * k;
}

GammaComponent component_of(const ExactParams& pq) {
  using G = GammaComponent;
  if (region::gamma_plus1(pq)) return G::GammaPlus1;
  if (region::gamma_plus2(pq)) return G::GammaPlus2;
  if (region::gamma_plus3(pq)) return G::GammaPlus3;
  if (region::gamma_minus(pq)) return G::GammaMinus;
  if (region::gamma_z(pq)) return G::GammaZ;
  if (region::gamma_prime_minus(pq)) return G::GammaPrimeMinus;
  if (region::gamma_prime_z(pq)) return G::GammaPrimeZ;
  return G::None;
}

void require_dimension(int n) {
  if (n < 2) {
    throw DomainError("dimension n must be at least 2");
  }
}

}  // namespace

ScalarCase scalar_pos_sufficient(const ExactParams& params, int n, const Rational& c) {
  require_dimension(n);
  const Rational& p = params.p;
  const Rational& q = params.q;
  if (c == kZero) {
    if (n >= 3) {
      return region::gamma(params) ? ScalarCase::FlatGamma : ScalarCase::None;
    }
    return region::gamma_prime(params) ? ScalarCase::FlatGammaPrime : ScalarCase::None;
  }
  const Rational nn(n);
  const Rational mu_p = p >= kOne ? mu_rational(p) : kOne;
  const SquaredMultipliers<Rational> m = squared_multipliers(p, q, n, mu_p);
  if (n == 2) {
    if (q > kZero && p == kOne && abs_of(c - kTwo) < kTwo) {
      return ScalarCase::a;
    }
    if (q == kZero && p >= kOne && p < kTwo && within(c, kTwo * mu_p, Rational(1))) {
      return ScalarCase::b;
    }
    if (q == kZero && p >= kTwo && within(c, kTwo * mu_p, m.m2)) {
      return ScalarCase::c;
    }
    if (q < kZero && p > kOne && q >= hyperbola_nu_of(p) && within(c, kTwo * mu_p, m.m4)) {
      return ScalarCase::d;
    }
    if (q < kZero && p + q >= kOne && q <= hyperbola_nu_of(p) && within(c, kTwo * mu_p, m.m5)) {
      return ScalarCase::e;
    }
    return ScalarCase::None;
  }
  if (q > kZero && p == kOne && within(c, nn, m.m1)) {
    return ScalarCase::a;
  }
  if (q == kZero && p >= kOne && p < kTwo && within(c, nn * mu_p, m.m1)) {
    return ScalarCase::b;
  }
  if (q == kZero && p == kTwo && within(c, Rational(4) * nn, m.m2)) {
    return ScalarCase::c;
  }
  if (q < kZero && p + q == kOne && within(c, nn * mu_p, m.m3)) {
    return ScalarCase::d;
  }
  return ScalarCase::None;
}

ScalarCase scalar_pos_sufficient(const Params& params, int n, double c) {
  return scalar_pos_sufficient(ExactParams::from(params), n, to_rational(c));
}

RegionVerdict classify(const ExactParams& params, int n, const std::optional<Rational>& c) {
  require_dimension(n);
  RegionVerdict v;
  v.in_gamma = region::gamma(params);
  v.in_gamma_prime = region::gamma_prime(params);
  v.in_omega = region::omega(params);
  v.gamma_component = component_of(params);
  if (!c) {
    v.delta_note = "no curvature given";
  } else if (*c < kZero) {
    v.delta_note = "K>=0 necessary: c < 0";
  } else {
    v.in_delta = region::delta(params, *c);
    v.in_delta_prime = region::delta_prime(params, *c);
  }
  if (c) {
    v.scalar_condition = scalar_pos_sufficient(params, n, *c);
  }
  return v;
}

RegionVerdict classify(const Params& params, int n, std::optional<double> c) {
  std::optional<Rational> exact_c;
  if (c) {
    exact_c = to_rational(*c);
  }
  return classify(ExactParams::from(params), n, exact_c);
}

bool vertical_positivity(const ExactParams& params, int n) {
  require_dimension(n);
  return n >= 3 ? region::gamma(params) : region::gamma_prime(params);
}

bool vertical_positivity(const Params& params, int n) { return vertical_positivity(ExactParams::from(params), n); }

NonnegVerdict nonneg_sectional_verdict(const ExactParams& params, int n, const Rational& c) {
  require_dimension(n);
  if (c < kZero) {
    return {false, "K>=0 necessary: base curvature c < 0"};
  }
  if (n >= 3) {
    const bool in = region::delta(params, c);
    return {in, in ? "in Δ_c" : "outside Δ_c"};
  }
  const bool in = region::delta_prime(params, c);
  return {in, in ? "in Δ′_c" : "outside Δ′_c"};
}

bool nonneg_sectional(const ExactParams& params, int n, const Rational& c) {
  return nonneg_sectional_verdict(params, n, c).value;
}

bool nonneg_sectional(const Params& params, int n, double c) {
  return nonneg_sectional(ExactParams::from(params), n, to_rational(c));
}

// ---------------------------------------------------------------------------

std::vector<double> sample_fibre_radii(const Params& params, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> out;
  out.reserve(count);
  const bool ball = params.q < 0.0;
  const double tmax = ball ? -1.0 / params.q : 10.0;
  for (std::size_t i = 0; out.size() < count; ++i) {
    double t = 0.0;
    const double u = unit(rng);
    switch (i % 3) {
      case 0:
        t = u * tmax;
        break;
      case 1:
        t = ball ? tmax * std::pow(10.0, -8.0 + 8.0 * u) : std::pow(10.0, -6.0 + 18.0 * u);
        break;
      default:
        t = ball ? tmax * (1.0 - std::pow(10.0, -8.5 + 7.5 * u)) : std::pow(10.0, 12.0 * u);
        break;
    }
    if (in_ball_bundle(params, t)) {
      out.push_back(t);
    }
  }
  return out;
}

VerticalProbe probe_vertical_positivity(const Params& params, int n, std::size_t samples, std::uint64_t seed) {
  require_dimension(n);
  VerticalProbe probe;
  probe.min_value = std::numeric_limits<double>::infinity();
  const std::vector<double> radii = sample_fibre_radii(params, samples, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const auto consider = [&](double t, const Vec& x, const Vec& y) {
    const double r = std::sqrt(t);
    const double k = space_form::sectional_vv(params, t, r * x(0), r * y(0), n);
    if (std::isnan(k) || k < probe.min_value) {
      probe.min_value = std::isnan(k) ? -std::numeric_limits<double>::infinity() : k;
      probe.t_at_min = t;
      probe.x = x;
      probe.y = y;
    }
  };

  for (double t : radii) {
    // e lies along the first frame vector.
    consider(t, Vec::Unit(n, 0), Vec::Unit(n, 1));
    if (n >= 3) {
      consider(t, Vec::Unit(n, 1), Vec::Unit(n, 2));
    }
    Vec x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x(i) = gauss(rng);
      y(i) = gauss(rng);
    }
    x.normalize();
    y -= y.dot(x) * x;
    if (y.norm() > 1e-6) {
      // Second pass: orthogonality errors are amplified by large radii.
      y.normalize();
      y -= y.dot(x) * x;
      y.normalize();
      consider(t, x, y);
    }
  }
  probe.positive = probe.min_value > 0.0;
  return probe;
}

bool brute_force_vertical_positivity(const Params& params, int n, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) {
    throw std::invalid_argument("brute force needs at least one sample");
  }
  return probe_vertical_positivity(params, n, samples, seed).positive;
}

std::vector<double> structured_fibre_radii(const Params& params, std::size_t log_points) {
  std::vector<double> out{0.0};
  const double p = params.p;
  const double q = params.q;
  const std::size_t m = std::max<std::size_t>(log_points, 2);
  if (q < 0.0) {
    const double tmax = -1.0 / q;
    for (std::size_t i = 0; i < m; ++i) {
      const double s = static_cast<double>(i) / static_cast<double>(m - 1);
      out.push_back(tmax * std::pow(10.0, -6.0 + 6.0 * s));
      out.push_back(tmax * (1.0 - std::pow(10.0, -1.0 - 7.5 * s)));
    }
  } else {
    for (std::size_t i = 0; i < m; ++i) {
      const double s = static_cast<double>(i) / static_cast<double>(m - 1);
      out.push_back(std::pow(10.0, -6.0 + 18.0 * s));
    }
  }
  // Critical points of P, Q and f.
  if (p != 1.0) {
    out.push_back((p + 2.0) / (2.0 * (p - 1.0)));
  }
  if (q != 0.0) {
    out.push_back(-(2.0 * p + 2.0 * q - p * p) / (2.0 * q));
  }
  if (p > 1.0) {
    out.push_back(1.0 / (p - 1.0));
  }
  std::vector<double> kept;
  kept.reserve(out.size());
  for (double t : out) {
    if (std::isfinite(t) && in_ball_bundle(params, t)) {
      kept.push_back(t);
    }
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return kept;
}

PlaneWitness structured_min_sectional(const Params& params, int n, double c) {
  require_dimension(n);
  PlaneWitness w;
  w.min_value = std::numeric_limits<double>::infinity();
  const auto consider = [&w](double k, double t, const char* family) {
    if (std::isnan(k) || k < w.min_value) {
      w.min_value = std::isnan(k) ? -std::numeric_limits<double>::infinity() : k;
      w.t = t;
      w.family = family;
    }
  };
  for (double t : structured_fibre_radii(params)) {
    const double r = std::sqrt(t);
    consider(space_form::sectional_hh(params, c, t, r, 0.0), t, "horizontal, X=e/|e|");
    consider(space_form::sectional_hv(params, c, t, r, 0.0), t, "vertizontal");
    consider(space_form::sectional_hv(params, c, t, 0.0, r), t, "vertizontal");
    consider(space_form::sectional_vv(params, t, r, 0.0, n), t, "vertical containing U");
    if (n >= 3) {
      consider(space_form::sectional_hh(params, c, t, 0.0, 0.0), t, "horizontal, X,Y ⊥ e");
      consider(space_form::sectional_vv(params, t, 0.0, 0.0, n), t, "vertical ⊥ e");
    }
  }
  return w;
}

PlaneWitness random_min_sectional(const Params& params, int n, double c, std::size_t count, std::uint64_t seed) {
  require_dimension(n);
  PlaneWitness w;
  w.min_value = std::numeric_limits<double>::infinity();
  w.family = "random plane";
  const BaseCurvature base = BaseCurvature::space_form(n, c);
  std::vector<double> radii = sample_fibre_radii(params, count, seed);
  std::mt19937_64 rng(seed + 17);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto random_vec = [&](int dim) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) {
      v(i) = gauss(rng);
    }
    return v;
  };
  for (double t : radii) {
    // Moderate radii keep the cancellation error of the full tensor small.
    t = std::min(t, 1e3);
    Vec dir = random_vec(n);
    dir.normalize();
    const FiberPoint e(std::sqrt(t) * dir);
    const LiftVector a{random_vec(n), random_vec(n)};
    const LiftVector b{random_vec(n), random_vec(n)};
    const double k = sectional_plane(params, e, a, b, base);
    if (std::isnan(k) || k < w.min_value) {
      w.min_value = std::isnan(k) ? -std::numeric_limits<double>::infinity() : k;
      w.t = t;
    }
  }
  return w;
}

}  // namespace cgm
