#pragma once

#include "cgm/exact.hpp"
#include "cgm/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgm {

/// Thrown when a quantity is requested outside its domain: negative fibre
/// radius, a point outside the Riemannian ball bundle, a pole of a rational
/// function, and similar.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Metric parameters (p, q) of h_{p,q}. Any finite reals.
struct Params {
  double p = 0.0;
  double q = 0.0;
};

/// Exact counterpart of Params, used by sign-critical code.
struct ExactParams {
  Rational p;
  Rational q;

  static ExactParams from(const Params& params) {
    return {to_rational(params.p), to_rational(params.q)};
  }
  Params approx() const { return {to_double(p), to_double(q)}; }
};

/// Points with q t <= -1 + kDomainEpsilon are rejected: the metric degenerates
/// on the sphere bundle q t = -1.
inline constexpr double kDomainEpsilon = 1e-9;

/// True iff t >= 0 and q t > -1 + kDomainEpsilon.
bool in_ball_bundle(const Params& params, double t);

/// Supremum of admissible t (infinity for q >= 0).
double fibre_radius_bound(const Params& params);

/// Throws DomainError unless in_ball_bundle(params, t).
void require_in_ball_bundle(const Params& params, double t);

/// 1/(1+t).
double omega(double t);

/// 1/(1+qt).
double omega_q(double t, const Params& params);

/// Curvature coefficients of the vertical curvature and of the vertical Ricci form.
struct CoefficientSet {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

CoefficientSet coefficients(const Params& params, double t, int n);

/// Smooth extensions of A and B across the sphere bundle, available only on
/// the line p + q = 1 with q < 0. Valid for 0 <= t <= -1/q.
struct BoundaryCoefficients {
  double A = 0.0;
  double B = 0.0;
};
BoundaryCoefficients boundary_coefficients(const Params& params, double t);

/// Which of the named polynomials a PolySpec holds.
enum class PolyKind { P, Q, C, G };

std::string to_string(PolyKind kind);

struct PolySpec {
  PolyKind kind = PolyKind::P;
  Polynomial<double> poly;

  const std::vector<double>& coefficients() const { return poly.coefficients(); }
  double operator()(double t) const { return poly.evaluate(t); }
};

// Generic forms, instantiated for double and Rational.

template <class T>
Polynomial<T> fibre_polynomial_P(const T& p, const T& q) {
  return Polynomial<T>({T(2) * p + q, (p + T(2)) * q, (T(1) - p) * q});
}

template <class T>
Polynomial<T> fibre_polynomial_Q(const T& p, const T& q) {
  return Polynomial<T>({T(2) * p + q, T(2) * p + T(2) * q - p * p, q});
}

/// C(t) = 2P(t) + (n-2)(1+qt)Q(t).
template <class T>
Polynomial<T> scalar_polynomial_C(const T& p, const T& q, int n) {
  const Polynomial<T> radial({T(1), q});
  return T(2) * fibre_polynomial_P(p, q) + T(n - 2) * (radial * fibre_polynomial_Q(p, q));
}

/// G(t) = nc(1+t)^p(1+qt)^2 - c^2 t(1+qt)^2/2 + (1+t)^{2p-2} C(t), integer p >= 1.
template <class T>
Polynomial<T> scalar_polynomial_G(unsigned p, const T& q, int n, const T& c) {
  const Polynomial<T> radial_sq = Polynomial<T>::binomial_power(T(1), q, 2);
  const Polynomial<T> first = (T(n) * c) * (Polynomial<T>::binomial_power(T(1), T(1), p) * radial_sq);
  const Polynomial<T> second = (c * c / T(2)) * (Polynomial<T>({T(0), T(1)}) * radial_sq);
  const Polynomial<T> third =
      Polynomial<T>::binomial_power(T(1), T(1), 2 * p - 2) * scalar_polynomial_C(T(p), q, n);
  return first - second + third;
}

/// P(t) = 2p+q + (p+2)q t + (1-p)q t^2, the fibre polynomial for planes containing U.
PolySpec poly_P(const Params& params);

/// Q(s) = 2p+q + (2p+2q-p^2)s + q s^2, the fibre polynomial for planes orthogonal to e.
PolySpec poly_Q(const Params& params);

PolySpec poly_C(const Params& params, int n);

/// G for integer p >= 1, expanded exactly in rational arithmetic from the
/// binary values of q and c. Throws std::invalid_argument for non-integer p.
PolySpec poly_G(const Params& params, int n, double c);

Polynomial<Rational> poly_G_exact(const ExactParams& params, int n, const Rational& c);

/// mu(p) = p^p/(p-1)^{p-1}, with mu(1) = 1. Throws DomainError for p < 1.
double mu(double p);

/// Exact mu for integer p >= 1; nullopt otherwise.
std::optional<Rational> mu_exact(const Rational& p);

/// lambda(p) = 8(1-p)/(8+p). Throws DomainError at p = -8.
double hyperbola_lambda(double p);

/// nu(p) = 2(1-p)/(2+p). Throws DomainError at p = -2.
double hyperbola_nu(double p);

template <class T>
T hyperbola_lambda_of(const T& p) {
  return T(8) * (T(1) - p) / (T(8) + p);
}

template <class T>
T hyperbola_nu_of(const T& p) {
  return T(2) * (T(1) - p) / (T(2) + p);
}

/// Squared multipliers m_i^2; each is present only on its domain.
template <class T>
struct SquaredMultipliers {
  std::optional<T> m1, m2, m3, m4, m5;
};

/// `mu_p` must be mu(p) when p >= 1 (ignored otherwise).
template <class T>
SquaredMultipliers<T> squared_multipliers(const T& p, const T& q, int n, const T& mu_p) {
  SquaredMultipliers<T> m;
  const T one(1);
  const T nn(n);
  if (p > T(0)) {
    m.m1 = one + T(2) * T(n - 2) / (nn * nn * p);
  }
  if (p >= one) {
    m.m2 = one + T(4) * p / (nn * mu_p);
    m.m3 = one + T(2) * (p * p - one) / (nn * p * mu_p);
  }
  if (p > one && q < T(0) && hyperbola_lambda_of(p) < q) {
    const T d = p * q * (p * q + T(8) * p + T(8) * q - T(8));
    m.m4 = one + d / (T(4) * (p - one) * (q - one) * mu_p);
  }
  if (p > one && p + q >= one) {
    m.m5 = one + (p + q - one) / mu_p;
  }
  return m;
}

struct Multipliers {
  std::optional<double> m1, m2, m3, m4, m5;
};

Multipliers multipliers(const Params& params, int n);

/// f(t) = t/(1+t)^p.
double horizontal_weight(double p, double t);

/// Supremum of f over the admissible fibre radii.
struct FSup {
  bool bounded = true;
  double sup = 0.0;
  bool attained = false;
  std::optional<double> argmax;  // location of the maximum, or of the limiting point
};

FSup f_sup(const Params& params);

/// phi(t) = (1+t)^{p-2} (1+qt)^{-2} C(t).
double phi(const Params& params, int n, double t);

/// Scalar curvature of h_{p,q} over an n-dimensional space form of curvature c.
double scalar_curvature_spaceform(const Params& params, int n, double c, double t);

/// Limit of scalar_curvature_spaceform / (n-1) as t -> infinity (q >= 0 only).
/// May be +-infinity.
double scalar_spaceform_limit_at_infinity(const Params& params, int n, double c);

/// Discriminants, critical points and comparison curves used in the fibre
/// positivity analysis.
struct AnalysisScalars {
  double D = 0.0;                  // discriminant of P
  double E = 0.0;                  // discriminant of Q
  std::optional<double> t0;        // critical point of P, p != 1
  std::optional<double> s0;        // critical point of Q, q != 0
  double kappa1 = 0.0;
  double kappa2 = 0.0;
};

AnalysisScalars analysis_scalars(const Params& params);

/// Real roots of a polynomial of degree <= 2, ascending. Empty when none (or
/// when the polynomial vanishes identically).
std::vector<double> real_roots_up_to_quadratic(const Polynomial<double>& poly);

}  // namespace cgm
