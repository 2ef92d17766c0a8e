#pragma once

#include "cgm/scalar_kernels.hpp"

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <vector>

namespace cgm {

using Vec = Eigen::VectorXd;

/// A point e of the ball bundle, in components with respect to an orthonormal
/// frame of the base tangent space. t = |e|^2 is cached.
class FiberPoint {
 public:
  explicit FiberPoint(Vec e);

  static FiberPoint zero(int n) { return FiberPoint(Vec::Zero(n)); }

  const Vec& e() const { return e_; }
  double t() const { return t_; }
  int dim() const { return static_cast<int>(e_.size()); }

 private:
  Vec e_;
  double t_;
};

/// Tangent vector of TM at e, split into horizontal and vertical parts:
/// A = h^h + v^v.
struct LiftVector {
  Vec h;
  Vec v;

  static LiftVector horizontal(const Vec& x) { return {x, Vec::Zero(x.size())}; }
  static LiftVector vertical(const Vec& x) { return {Vec::Zero(x.size()), x}; }
  /// U(e) = e^v.
  static LiftVector canonical_vertical(const FiberPoint& e) { return vertical(e.e()); }
  static LiftVector zero(int n) { return {Vec::Zero(n), Vec::Zero(n)}; }

  LiftVector& operator+=(const LiftVector& o) {
    h += o.h;
    v += o.v;
    return *this;
  }
  friend LiftVector operator+(LiftVector a, const LiftVector& b) { return a += b; }
  friend LiftVector operator-(LiftVector a, const LiftVector& b) {
    a.h -= b.h;
    a.v -= b.v;
    return a;
  }
  friend LiftVector operator*(double s, LiftVector a) {
    a.h *= s;
    a.v *= s;
    return a;
  }
  double max_abs() const { return std::max(h.cwiseAbs().maxCoeff(), v.cwiseAbs().maxCoeff()); }
};

/// Curvature data of the base manifold at pi(e), in the same orthonormal frame.
/// For a space form R = c r with r(X,Y)Z = <Y,Z>X - <X,Z>Y and vanishing
/// covariant derivatives.
class BaseCurvature {
 public:
  enum class Kind { SpaceForm, Custom };

  /// (X, Y, Z) -> R(X,Y)Z
  using Trilinear = std::function<Vec(const Vec&, const Vec&, const Vec&)>;
  /// (W, X, Y, Z) -> (nabla_W R)(X,Y)Z
  using Quadrilinear = std::function<Vec(const Vec&, const Vec&, const Vec&, const Vec&)>;
  /// (X, e) -> (delta R)(X) e = sum_i (nabla_{e_i} R)(X, e_i) e
  using Coderivative = std::function<Vec(const Vec&, const Vec&)>;

  static BaseCurvature space_form(int n, double c);
  static BaseCurvature custom(int n, Trilinear riemann, Quadrilinear nabla_riemann = {},
                              Coderivative coderivative = {});

  Kind kind() const { return kind_; }
  int dim() const { return n_; }
  /// Sectional curvature constant; meaningful only for Kind::SpaceForm.
  double c() const { return c_; }

  Vec R(const Vec& x, const Vec& y, const Vec& z) const { return riemann_(x, y, z); }
  /// Zero when no covariant derivative was supplied.
  Vec nabla_R(const Vec& w, const Vec& x, const Vec& y, const Vec& z) const;
  bool has_coderivative() const { return kind_ == Kind::SpaceForm || static_cast<bool>(coderivative_); }
  Vec delta_R(const Vec& x, const Vec& e) const;

  double sectional(const Vec& x, const Vec& y) const { return R(x, y, y).dot(x); }
  double ricci(const Vec& x, const Vec& y) const;
  double scalar() const;

 private:
  BaseCurvature() = default;

  Kind kind_ = Kind::Custom;
  int n_ = 0;
  double c_ = 0.0;
  Trilinear riemann_;
  Quadrilinear nabla_riemann_;
  Coderivative coderivative_;
};

/// r(X,Y)Z = <Y,Z>X - <X,Z>Y
Vec curvature_type_r(const Vec& x, const Vec& y, const Vec& z);

double metric_h(const Params& params, const FiberPoint& e, const LiftVector& a, const LiftVector& b);

enum class ConnectionCase { hh, hv, vh, vv };

/// Levi-Civita connection of h_{p,q} applied to lifts: case hv is
/// nabla_{X^h} Y^v and so on. `nabla_xy` is the base covariant derivative
/// nabla_X Y of the field extending Y (zero in a normal frame); it is used
/// only by cases hh and hv.
LiftVector connection(const Params& params, const FiberPoint& e, ConnectionCase which, const Vec& x,
                      const Vec& y, const BaseCurvature& base, const std::optional<Vec>& nabla_xy = std::nullopt);

enum class RiemannCase { hhh, hhv, hvh, hvv, vvh, vvv };

/// R~(X^a, Y^b) Z^c for the lift pattern abc; e.g. hvv is R~(X^h, Y^v) Z^v.
LiftVector riemann(const Params& params, const FiberPoint& e, RiemannCase which, const Vec& x, const Vec& y,
                   const Vec& z, const BaseCurvature& base);

/// R~(A,B)C for arbitrary tangent vectors, assembled from the six cases.
LiftVector riemann(const Params& params, const FiberPoint& e, const LiftVector& a, const LiftVector& b,
                   const LiftVector& c, const BaseCurvature& base);

/// h(R~(A,B)C, D)
double riemann4(const Params& params, const FiberPoint& e, const LiftVector& a, const LiftVector& b,
                const LiftVector& c, const LiftVector& d, const BaseCurvature& base);

enum class PlaneKind { hh, hv, vv };

/// Sectional curvature of X^h^Y^h, X^h^Y^v or X^v^Y^v for orthonormal X, Y
/// (checked to 1e-10; violations throw std::invalid_argument).
double sectional(const Params& params, const FiberPoint& e, PlaneKind plane, const Vec& x, const Vec& y,
                 const BaseCurvature& base);

/// Sectional curvature of the plane spanned by arbitrary independent A, B,
/// computed from the full curvature tensor.
double sectional_plane(const Params& params, const FiberPoint& e, const LiftVector& a, const LiftVector& b,
                       const BaseCurvature& base);

enum class RicciCase { hh, hv, vv };

/// rho~(X^a, Y^b). Case hv on a custom base needs a coderivative operator
/// (std::invalid_argument otherwise).
double ricci(const Params& params, int n, const FiberPoint& e, RicciCase which, const Vec& x, const Vec& y,
             const BaseCurvature& base);

/// rho~(A, B) for arbitrary tangent vectors.
double ricci(const Params& params, int n, const FiberPoint& e, const LiftVector& a, const LiftVector& b,
             const BaseCurvature& base);

double scalar(const Params& params, int n, const FiberPoint& e, const BaseCurvature& base);

/// h-orthonormal basis {e_i^h, f_i^v} of T_e TM, with f_1 along e when e != 0.
std::vector<LiftVector> orthonormal_lift_frame(const Params& params, const FiberPoint& e);

/// Orthonormal basis of R^n whose first vector is e/|e| (standard basis when e = 0).
std::vector<Vec> adapted_frame(const Vec& e);

/// Closed forms over a space form of curvature c, in terms of the projections
/// xe = <X,e>, ye = <Y,e> of an orthonormal pair.
namespace space_form {

double sectional_hh(const Params& params, double c, double t, double xe, double ye);
double sectional_hv(const Params& params, double c, double t, double xe, double ye);
double sectional_vv(const Params& params, double t, double xe, double ye, int n);

/// rho~(X^h,Y^h) for <X,Y> = xy.
double ricci_hh(const Params& params, int n, double c, double t, double xy, double xe, double ye);
double ricci_vv(const Params& params, int n, double c, double t, double xy, double xe, double ye);

}  // namespace space_form

}  // namespace cgm
