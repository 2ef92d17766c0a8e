#include "cgm/scalar_kernels.hpp"

#include <cmath>
#include <limits>

namespace cgm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_dimension(int n) {
  if (n < 2) {
    throw DomainError("base dimension must be at least 2");
  }
}

}  // namespace

bool in_ball_bundle(const Params& params, double t) {
  return t >= 0.0 && std::isfinite(t) && params.q * t > -1.0 + kDomainEpsilon;
}

double fibre_radius_bound(const Params& params) {
  return params.q < 0.0 ? -1.0 / params.q : kInf;
}

void require_in_ball_bundle(const Params& params, double t) {
  if (t < 0.0 || !std::isfinite(t)) {
    throw DomainError("fibre radius must be finite and non-negative");
  }
  if (!(params.q * t > -1.0 + kDomainEpsilon)) {
    throw DomainError("point lies outside the Riemannian ball bundle (q t <= -1)");
  }
}

double omega(double t) {
  if (t < 0.0) {
    throw DomainError("omega: negative fibre radius");
  }
  return 1.0 / (1.0 + t);
}

double omega_q(double t, const Params& params) {
  if (!(params.q * t > -1.0 + kDomainEpsilon)) {
    throw DomainError("omega_q: point lies outside the Riemannian ball bundle");
  }
  return 1.0 / (1.0 + params.q * t);
}

CoefficientSet coefficients(const Params& params, double t, int n) {
  require_dimension(n);
  require_in_ball_bundle(params, t);
  const double p = params.p;
  const double q = params.q;
  const double w = omega(t);
  const double wq = omega_q(t, params);

  CoefficientSet k;
  k.A = p * w * wq * ((p + 2.0 * q - 2.0) * w - q);
  k.B = wq * (p * p * w * w - p * (p - 2.0) * w + q);
  k.C = wq * wq * (p * (p - 2.0) * (1.0 - q) * w * w + p * q * (p - 3.0) * w - q * q);
  k.alpha = t * wq * k.A + (n - 2.0 + wq) * k.B;
  k.beta = (n - 1.0 - wq) * k.A + q * wq * k.B;
  return k;
}

BoundaryCoefficients boundary_coefficients(const Params& params, double t) {
  if (!(params.q < 0.0) || params.p + params.q != 1.0) {
    throw DomainError("boundary extension exists only on p + q = 1 with q < 0");
  }
  if (t < 0.0 || t > -1.0 / params.q) {
    throw DomainError("boundary extension evaluated outside the closed ball bundle");
  }
  const double q = params.q;
  const double w = 1.0 / (1.0 + t);
  return {(q - 1.0) * w * w, (1.0 - q) * w * w + w};
}

std::string to_string(PolyKind kind) {
  switch (kind) {
    case PolyKind::P: return "P";
    case PolyKind::Q: return "Q";
    case PolyKind::C: return "C";
    case PolyKind::G: return "G";
  }
  return "?";
}

PolySpec poly_P(const Params& params) {
  return {PolyKind::P, fibre_polynomial_P(params.p, params.q)};
}

PolySpec poly_Q(const Params& params) {
  return {PolyKind::Q, fibre_polynomial_Q(params.p, params.q)};
}

PolySpec poly_C(const Params& params, int n) {
  require_dimension(n);
  // Expanded exactly, then rounded once per coefficient, so C(.,2) == 2P
  // holds bit for bit.
  const auto exact = scalar_polynomial_C(to_rational(params.p), to_rational(params.q), n);
  std::vector<double> coeffs;
  coeffs.reserve(4);
  for (std::size_t k = 0; k < 4; ++k) {
    coeffs.push_back(to_double(exact[k]));
  }
  return {PolyKind::C, Polynomial<double>(std::move(coeffs))};
}

Polynomial<Rational> poly_G_exact(const ExactParams& params, int n, const Rational& c) {
  require_dimension(n);
  const auto p_int = as_integer(params.p);
  if (!p_int || *p_int < 1) {
    throw std::invalid_argument("poly_G requires a positive integer p");
  }
  if (*p_int > 4096) {
    throw std::invalid_argument("poly_G: p too large");
  }
  return scalar_polynomial_G(p_int->convert_to<unsigned>(), params.q, n, c);
}

PolySpec poly_G(const Params& params, int n, double c) {
  const auto exact = poly_G_exact(ExactParams::from(params), n, to_rational(c));
  std::vector<double> coeffs;
  coeffs.reserve(exact.size());
  for (const auto& a : exact.coefficients()) {
    coeffs.push_back(to_double(a));
  }
  return {PolyKind::G, Polynomial<double>(std::move(coeffs))};
}

double mu(double p) {
  if (!(p >= 1.0)) {
    throw DomainError("mu is defined for p >= 1");
  }
  if (p == 1.0) {
    return 1.0;
  }
  return std::exp(p * std::log(p) - (p - 1.0) * std::log(p - 1.0));
}

std::optional<Rational> mu_exact(const Rational& p) {
  const auto k = as_integer(p);
  if (!k || *k < 1 || *k > 4096) {
    return std::nullopt;
  }
  const auto e = k->convert_to<unsigned>();
  if (e == 1) {
    return Rational(1);
  }
  return Rational(boost::multiprecision::pow(*k, e), boost::multiprecision::pow(BigInt(*k - 1), e - 1));
}

double hyperbola_lambda(double p) {
  if (p == -8.0) {
    throw DomainError("lambda has a pole at p = -8");
  }
  return hyperbola_lambda_of(p);
}

double hyperbola_nu(double p) {
  if (p == -2.0) {
    throw DomainError("nu has a pole at p = -2");
  }
  return hyperbola_nu_of(p);
}

Multipliers multipliers(const Params& params, int n) {
  require_dimension(n);
  const double mu_p = params.p >= 1.0 ? mu(params.p) : 1.0;
  const auto sq = squared_multipliers(params.p, params.q, n, mu_p);
  const auto root = [](const std::optional<double>& v) -> std::optional<double> {
    if (!v) {
      return std::nullopt;
    }
    return std::sqrt(*v);
  };
  return {root(sq.m1), root(sq.m2), root(sq.m3), root(sq.m4), root(sq.m5)};
}

double horizontal_weight(double p, double t) { return t / std::pow(1.0 + t, p); }

FSup f_sup(const Params& params) {
  const double p = params.p;
  const double q = params.q;
  FSup out;
  if (q < 0.0 && p + q < 1.0) {
    // f increases on the whole admissible interval.
    const double edge = -1.0 / q;
    out.sup = horizontal_weight(p, edge);
    out.attained = false;
    out.argmax = edge;
    return out;
  }
  if (p < 1.0) {
    out.bounded = false;
    out.sup = kInf;
    return out;
  }
  out.sup = 1.0 / mu(p);
  if (p == 1.0) {
    out.attained = false;
    return out;
  }
  const double peak = 1.0 / (p - 1.0);
  out.argmax = peak;
  out.attained = !(q < 0.0 && p + q == 1.0);
  return out;
}

double phi(const Params& params, int n, double t) {
  require_in_ball_bundle(params, t);
  const PolySpec c_poly = poly_C(params, n);
  const double radial = 1.0 + params.q * t;
  return std::pow(1.0 + t, params.p - 2.0) * c_poly(t) / (radial * radial);
}

double scalar_curvature_spaceform(const Params& params, int n, double c, double t) {
  require_dimension(n);
  require_in_ball_bundle(params, t);
  const double reduced = n * c - 0.5 * c * c * horizontal_weight(params.p, t) + phi(params, n, t);
  return (n - 1.0) * reduced;
}

double scalar_spaceform_limit_at_infinity(const Params& params, int n, double c) {
  require_dimension(n);
  if (params.q < 0.0) {
    throw DomainError("limit at infinity requires q >= 0");
  }
  const double p = params.p;
  const double q = params.q;
  const PolySpec c_poly = poly_C(params, n);
  const int deg = c_poly.poly.degree();

  // Each term ~ coefficient * t^exponent.
  struct Term {
    double coefficient;
    double exponent;
  };
  std::vector<Term> terms;
  terms.push_back({n * c, 0.0});
  if (c != 0.0) {
    terms.push_back({-0.5 * c * c, 1.0 - p});
  }
  if (deg >= 0) {
    const double lead = c_poly.poly[static_cast<std::size_t>(deg)];
    const double radial_exp = q > 0.0 ? -2.0 : 0.0;
    const double radial_coef = q > 0.0 ? 1.0 / (q * q) : 1.0;
    terms.push_back({lead * radial_coef, p - 2.0 + radial_exp + deg});
  }
  double top = 0.0;
  for (const auto& term : terms) {
    top = std::max(top, term.exponent);
  }
  double sum = 0.0;
  for (const auto& term : terms) {
    if (term.exponent == top) {
      sum += term.coefficient;
    }
  }
  if (top > 0.0 && sum != 0.0) {
    return sum > 0.0 ? kInf : -kInf;
  }
  if (top > 0.0) {
    // Leading terms cancel exactly; fall back to the constant part. This
    // only arises on measure-zero parameter sets.
    double constant = 0.0;
    for (const auto& term : terms) {
      if (term.exponent == 0.0) {
        constant += term.coefficient;
      }
    }
    return constant;
  }
  return sum;
}

AnalysisScalars analysis_scalars(const Params& params) {
  const double p = params.p;
  const double q = params.q;
  AnalysisScalars a;
  a.D = p * q * (p * q + 8.0 * p + 8.0 * q - 8.0);
  a.E = p * p * (p * p - 4.0 * p - 4.0 * q + 4.0);
  if (p != 1.0) {
    a.t0 = (p + 2.0) / (2.0 * (p - 1.0));
  }
  if (q != 0.0) {
    a.s0 = -(2.0 * p + 2.0 * q - p * p) / (2.0 * q);
  }
  a.kappa1 = 0.25 * (p - 2.0) * (p - 2.0);
  a.kappa2 = 0.5 * p * (p - 2.0);
  return a;
}

std::vector<double> real_roots_up_to_quadratic(const Polynomial<double>& poly) {
  const int deg = poly.degree();
  if (deg > 2) {
    throw std::invalid_argument("real_roots_up_to_quadratic: degree exceeds 2");
  }
  if (deg <= 0) {
    return {};
  }
  const double c0 = poly[0];
  const double c1 = poly[1];
  if (deg == 1) {
    return {-c0 / c1};
  }
  const double c2 = poly[2];
  const double disc = c1 * c1 - 4.0 * c2 * c0;
  if (disc < 0.0) {
    return {};
  }
  // Cancellation-free form.
  const double s = std::sqrt(disc);
  const double qq = -0.5 * (c1 + std::copysign(s, c1));
  std::vector<double> roots;
  if (qq != 0.0) {
    roots = {qq / c2, c0 / qq};
  } else {
    roots = {0.0, 0.0};
  }
  if (roots[0] > roots[1]) {
    std::swap(roots[0], roots[1]);
  }
  return roots;
}

}  // namespace cgm
