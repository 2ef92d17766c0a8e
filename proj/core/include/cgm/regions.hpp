#pragma once

#include "cgm/curvature.hpp"
#include "cgm/scalar_kernels.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cgm {

/// Component of Gamma' containing a parameter point, in the order in which
/// they are tested.
enum class GammaComponent { GammaPlus1, GammaPlus2, GammaPlus3, GammaMinus, GammaZ, GammaPrimeMinus, GammaPrimeZ, None };

std::string to_string(GammaComponent component);

/// Sufficient scalar-positivity condition met by (p, q, n, c). Cases a-e are
/// the curved cases (n = 2 uses a-e, n >= 3 uses a-d); FlatGamma and
/// FlatGammaPrime are the c = 0 verdicts.
enum class ScalarCase { a, b, c, d, e, FlatGamma, FlatGammaPrime, None };

std::string to_string(ScalarCase label);

struct RegionVerdict {
  bool in_gamma = false;
  bool in_gamma_prime = false;
  bool in_omega = false;
  std::optional<bool> in_delta;        // nullopt = n/a (c absent or negative)
  std::optional<bool> in_delta_prime;
  GammaComponent gamma_component = GammaComponent::None;
  ScalarCase scalar_condition = ScalarCase::None;
  std::string delta_note;
};

/// Membership predicates on exact parameters; inequalities are strict or
/// non-strict exactly as in the region definitions.
namespace region {

bool gamma_plus1(const ExactParams& pq);
bool gamma_plus2(const ExactParams& pq);
bool gamma_plus3(const ExactParams& pq);
bool gamma_minus(const ExactParams& pq);
bool gamma_prime_minus(const ExactParams& pq);
bool gamma_z(const ExactParams& pq);
bool gamma_prime_z(const ExactParams& pq);
bool gamma(const ExactParams& pq);
bool gamma_prime(const ExactParams& pq);
bool omega(const ExactParams& pq);

/// Delta_0 and Delta_0'.
bool delta0(const ExactParams& pq);
bool delta0_prime(const ExactParams& pq);
/// Delta_c and Delta_c' for c > 0 (c = 0 falls back to Delta_0).
bool delta(const ExactParams& pq, const Rational& c);
bool delta_prime(const ExactParams& pq, const Rational& c);

}  // namespace region

/// Sign of mu(p) - x for p >= 1. Exact for rational p = a/b with moderate a, b;
/// otherwise decided in double precision.
int compare_mu(const Rational& p, const Rational& x);

/// mu(p) as a rational: exact for integer p, the rounded double otherwise.
Rational mu_rational(const Rational& p);

RegionVerdict classify(const ExactParams& params, int n, const std::optional<Rational>& c);
RegionVerdict classify(const Params& params, int n, std::optional<double> c = std::nullopt);

/// Positive sectional curvature on all vertical planes: Gamma for n >= 3,
/// Gamma' for n = 2.
bool vertical_positivity(const ExactParams& params, int n);
bool vertical_positivity(const Params& params, int n);

struct NonnegVerdict {
  bool value = false;
  std::string reason;
};

/// Non-negative sectional curvature over a space form of curvature c:
/// Delta_c for n >= 3, Delta_c' for n = 2. Always false for c < 0.
NonnegVerdict nonneg_sectional_verdict(const ExactParams& params, int n, const Rational& c);
bool nonneg_sectional(const ExactParams& params, int n, const Rational& c);
bool nonneg_sectional(const Params& params, int n, double c);

/// First case of the sufficient scalar-positivity conditions satisfied by
/// (p, q, n, c), or ScalarCase::None.
ScalarCase scalar_pos_sufficient(const ExactParams& params, int n, const Rational& c);
ScalarCase scalar_pos_sufficient(const Params& params, int n, double c);

// ---------------------------------------------------------------------------
// Sampling oracles

/// Deterministic fibre-radius samples over I_q mixing uniform, log-uniform
/// (up to ~1e12) and boundary-clustered values.
std::vector<double> sample_fibre_radii(const Params& params, std::size_t count, std::uint64_t seed);

struct VerticalProbe {
  bool positive = true;
  double min_value = 0.0;
  double t_at_min = 0.0;
  Vec x, y;  // witness pair (frame components, e along the first axis)
};

/// Minimum of the vertical sectional curvature over sampled fibre radii and
/// orthonormal pairs, including the planes containing e and orthogonal to e.
VerticalProbe probe_vertical_positivity(const Params& params, int n, std::size_t samples, std::uint64_t seed);

/// True iff every sampled vertical sectional curvature is > 0.
bool brute_force_vertical_positivity(const Params& params, int n, std::size_t samples, std::uint64_t seed);

/// Fibre radii at which the structured plane families are probed: log-spaced
/// radii, boundary-clustered radii, and the critical points of the fibre
/// polynomials and of f that lie in I_q.
std::vector<double> structured_fibre_radii(const Params& params, std::size_t log_points = 400);

struct PlaneWitness {
  double min_value = 0.0;
  double t = 0.0;
  std::string family;
};

/// Minimum sectional curvature over the structured plane families (horizontal
/// with X = e/|e|, vertizontal, vertical containing U, vertical orthogonal to
/// e) at the structured radii, over a space form of curvature c.
PlaneWitness structured_min_sectional(const Params& params, int n, double c);

/// Minimum over `count` random planes of T_e TM (random mixed A, B) at sampled
/// radii.
PlaneWitness random_min_sectional(const Params& params, int n, double c, std::size_t count, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Scalar curvature on grids

/// Grid on I_q: t = 0, log-spaced radii up to t_clip (q >= 0), or log-spaced
/// plus boundary-clustered radii (q < 0). Exactly `points` entries.
std::vector<double> scalar_grid(const Params& params, std::size_t points = 10000, double t_clip = 1e6);

std::string describe_scalar_grid(const Params& params, std::size_t points = 10000, double t_clip = 1e6);

/// Caches the pieces of s~/(n-1) = nc - c^2 f/2 + phi that do not depend on c.
class ScalarProfile {
 public:
  ScalarProfile(const Params& params, int n, std::vector<double> grid);

  const std::vector<double>& grid() const { return grid_; }
  /// Minimum of s~ over the grid for curvature c, and its location.
  std::pair<double, double> min_scalar(double c) const;

 private:
  Params params_;
  int n_;
  std::vector<double> grid_;
  std::vector<double> f_;
  std::vector<double> phi_;
};

struct PositivityInterval {
  bool determined = false;
  double c_lo = 0.0;
  double c_hi = 0.0;
  bool lo_unbounded = false;
  bool hi_unbounded = false;
  std::string note;
};

struct IntervalOptions {
  double tolerance = 1e-6;
  std::size_t grid_points = 10000;
  double t_clip = 1e6;
  double c_limit = 1e6;
};

/// Maximal interval of c around c = 0 on which s~ > 0 (grid minimum positive
/// and, for q >= 0, non-negative limit at infinity), found by bisection.
/// Implemented for q >= 0 or p + q >= 1.
PositivityInterval scalar_positivity_interval(const Params& params, int n, const IntervalOptions& options = {});

// ---------------------------------------------------------------------------
// Constructive searches

struct Certificate {
  double min_scalar_on_grid = 0.0;
  double t_at_min = 0.0;
  std::string grid;
  std::vector<double> g_coefficients;  // set by the q >= 0 route for c < 0
  bool g_coefficients_positive = false;
};

struct SearchResult {
  Params params;
  Certificate certificate;
  std::string route;
  std::vector<std::string> path;  // search trace, one line per step

  bool certified() const { return certificate.min_scalar_on_grid > 0.0; }
};

/// Parameters with positive scalar curvature: (p, 0) for n = 2 and (p, 1 - p)
/// for n >= 3, with p >= 2 minimal on a 0.1 grid.
SearchResult find_params_thm1(int n, double c);

/// Parameters with q >= 0 and positive scalar curvature.
SearchResult find_params_thm3(int n, double c);

struct GeneralSearchResult {
  double c_used = 0.0;
  SearchResult result;
};

/// For a base with scalar curvature >= a and sum |R(e_i,e_j)e|^2 <= b|e|^2:
/// compares with a space form of curvature slightly below
/// min(a/(n(n-1)), -sqrt(b/(2(n-1)))).
GeneralSearchResult find_params_general(int n, double a, double b);

/// Certificate of (p, q) over a space form of curvature c on the standard grid.
Certificate certify(const Params& params, int n, double c);

}  // namespace cgm
