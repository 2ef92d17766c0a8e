#include "cgm/curvature.hpp"

#include <cmath>
#include <stdexcept>

namespace cgm {

namespace {

constexpr double kOrthonormalTolerance = 1e-10;

void require_same_dim(const FiberPoint& e, const BaseCurvature& base) {
  if (e.dim() != base.dim()) {
    throw std::invalid_argument("fibre point and base curvature have different dimensions");
  }
}

void require_orthonormal(const Vec& x, const Vec& y) {
  if (std::abs(x.squaredNorm() - 1.0) > kOrthonormalTolerance ||
      std::abs(y.squaredNorm() - 1.0) > kOrthonormalTolerance ||
      std::abs(x.dot(y)) > kOrthonormalTolerance) {
    throw std::invalid_argument("sectional curvature requires an orthonormal pair");
  }
}

// Per-point scalars shared by the connection and curvature formulas.
struct Weights {
  double w;    // omega
  double wq;   // omega_q
  double wp;   // omega^p
  double w2p;  // omega^{2p}
};

Weights weights_at(const Params& params, const FiberPoint& e) {
  require_in_ball_bundle(params, e.t());
  const double w = omega(e.t());
  const double wp = std::pow(w, params.p);
  return {w, omega_q(e.t(), params), wp, wp * wp};
}

}  // namespace

FiberPoint::FiberPoint(Vec e) : e_(std::move(e)), t_(e_.squaredNorm()) {}

Vec curvature_type_r(const Vec& x, const Vec& y, const Vec& z) { return y.dot(z) * x - x.dot(z) * y; }

BaseCurvature BaseCurvature::space_form(int n, double c) {
  if (n < 2) {
    throw DomainError("base dimension must be at least 2");
  }
  BaseCurvature b;
  b.kind_ = Kind::SpaceForm;
  b.n_ = n;
  b.c_ = c;
  b.riemann_ = [c](const Vec& x, const Vec& y, const Vec& z) -> Vec { return c * curvature_type_r(x, y, z); };
  return b;
}

BaseCurvature BaseCurvature::custom(int n, Trilinear riemann, Quadrilinear nabla_riemann,
                                    Coderivative coderivative) {
  if (n < 2) {
    throw DomainError("base dimension must be at least 2");
  }
  if (!riemann) {
    throw std::invalid_argument("custom base curvature needs a curvature operator");
  }
  BaseCurvature b;
  b.kind_ = Kind::Custom;
  b.n_ = n;
  b.riemann_ = std::move(riemann);
  b.nabla_riemann_ = std::move(nabla_riemann);
  b.coderivative_ = std::move(coderivative);
  return b;
}

Vec BaseCurvature::nabla_R(const Vec& w, const Vec& x, const Vec& y, const Vec& z) const {
  if (!nabla_riemann_) {
    return Vec::Zero(x.size());
  }
  return nabla_riemann_(w, x, y, z);
}

Vec BaseCurvature::delta_R(const Vec& x, const Vec& e) const {
  if (kind_ == Kind::SpaceForm) {
    return Vec::Zero(x.size());
  }
  if (!coderivative_) {
    throw std::invalid_argument("ricci(hv) on a custom base requires a coderivative operator");
  }
  return coderivative_(x, e);
}

double BaseCurvature::ricci(const Vec& x, const Vec& y) const {
  double sum = 0.0;
  for (int i = 0; i < n_; ++i) {
    const Vec ei = Vec::Unit(n_, i);
    sum += R(x, ei, ei).dot(y);
  }
  return sum;
}

double BaseCurvature::scalar() const {
  double sum = 0.0;
  for (int i = 0; i < n_; ++i) {
    const Vec ei = Vec::Unit(n_, i);
    sum += ricci(ei, ei);
  }
  return sum;
}

double metric_h(const Params& params, const FiberPoint& e, const LiftVector& a, const LiftVector& b) {
  require_in_ball_bundle(params, e.t());
  const double wp = std::pow(omega(e.t()), params.p);
  return a.h.dot(b.h) + wp * (a.v.dot(b.v) + params.q * a.v.dot(e.e()) * b.v.dot(e.e()));
}

LiftVector connection(const Params& params, const FiberPoint& e, ConnectionCase which, const Vec& x,
                      const Vec& y, const BaseCurvature& base, const std::optional<Vec>& nabla_xy) {
  require_same_dim(e, base);
  const Weights k = weights_at(params, e);
  const int n = e.dim();
  const Vec& ev = e.e();
  const Vec dxy = nabla_xy.value_or(Vec::Zero(n));
  LiftVector out = LiftVector::zero(n);
  switch (which) {
    case ConnectionCase::hh:
      out.h = dxy;
      out.v = -0.5 * base.R(x, y, ev);
      break;
    case ConnectionCase::hv:
      out.h = 0.5 * k.wp * base.R(ev, y, x);
      out.v = dxy;
      break;
    case ConnectionCase::vh:
      out.h = 0.5 * k.wp * base.R(ev, x, y);
      break;
    case ConnectionCase::vv: {
      const double p = params.p;
      const double q = params.q;
      const double xe = x.dot(ev);
      const double ye = y.dot(ev);
      const double radial = k.wq * ((p * k.w + q) * x.dot(y) + p * q * k.w * xe * ye);
      out.v = radial * ev - p * k.w * (xe * y + ye * x);
      break;
    }
  }
  return out;
}

LiftVector riemann(const Params& params, const FiberPoint& e, RiemannCase which, const Vec& x, const Vec& y,
                   const Vec& z, const BaseCurvature& base) {
  require_same_dim(e, base);
  const Weights k = weights_at(params, e);
  const int n = e.dim();
  const double p = params.p;
  const double q = params.q;
  const Vec& ev = e.e();
  const auto R = [&base](const Vec& a, const Vec& b, const Vec& c) { return base.R(a, b, c); };
  const double radial = (p * k.w + q) * k.wq;  // coefficient of U in (ii), (iii)

  LiftVector out = LiftVector::zero(n);
  switch (which) {
    case RiemannCase::hhh:
      out.h = R(x, y, z) - 0.25 * k.wp *
                               (R(ev, R(y, z, ev), x) - R(ev, R(x, z, ev), y) - 2.0 * R(ev, R(x, y, ev), z));
      out.v = 0.5 * base.nabla_R(z, x, y, ev);
      break;
    case RiemannCase::hhv: {
      const Vec rxye = R(x, y, ev);
      out.h = 0.5 * k.wp * (base.nabla_R(x, ev, z, y) - base.nabla_R(y, ev, z, x));
      out.v = R(x, y, z) + 0.25 * k.wp * (R(y, R(ev, z, x), ev) - R(x, R(ev, z, y), ev)) -
              p * k.w * z.dot(ev) * rxye + radial * rxye.dot(z) * ev;
      break;
    }
    case RiemannCase::hvh: {
      const Vec rxze = R(x, z, ev);
      out.h = 0.5 * k.wp * base.nabla_R(x, ev, y, z);
      out.v = -0.25 * k.wp * R(x, R(ev, y, z), ev) - 0.5 * p * k.w * y.dot(ev) * rxze + 0.5 * R(x, z, y) +
              0.5 * radial * rxze.dot(y) * ev;
      break;
    }
    case RiemannCase::hvv: {
      const double wp1 = k.wp * k.w;
      out.h = 0.5 * p * wp1 * (y.dot(ev) * R(ev, z, x) - z.dot(ev) * R(ev, y, x)) - 0.5 * k.wp * R(y, z, x) -
              0.25 * k.w2p * R(ev, y, R(ev, z, x));
      break;
    }
    case RiemannCase::vvh: {
      const double wp1 = k.wp * k.w;
      out.h = k.wp * R(x, y, z) + p * wp1 * (y.dot(ev) * R(ev, x, z) - x.dot(ev) * R(ev, y, z)) +
              0.25 * k.w2p * (R(ev, x, R(ev, y, z)) - R(ev, y, R(ev, x, z)));
      break;
    }
    case RiemannCase::vvv: {
      const CoefficientSet cs = coefficients(params, e.t(), n);
      const Vec rxyz = curvature_type_r(x, y, z);
      out.v = cs.A * z.dot(ev) * curvature_type_r(x, y, ev) + cs.B * rxyz + cs.C * rxyz.dot(ev) * ev;
      break;
    }
  }
  return out;
}

LiftVector riemann(const Params& params, const FiberPoint& e, const LiftVector& a, const LiftVector& b,
                   const LiftVector& c, const BaseCurvature& base) {
  using RC = RiemannCase;
  const auto term = [&](RC which, const Vec& x, const Vec& y, const Vec& z) {
    return riemann(params, e, which, x, y, z, base);
  };
  LiftVector out = term(RC::hhh, a.h, b.h, c.h);
  out += term(RC::hhv, a.h, b.h, c.v);
  out += term(RC::hvh, a.h, b.v, c.h);
  out += term(RC::hvv, a.h, b.v, c.v);
  out += -1.0 * term(RC::hvh, b.h, a.v, c.h);
  out += -1.0 * term(RC::hvv, b.h, a.v, c.v);
  out += term(RC::vvh, a.v, b.v, c.h);
  out += term(RC::vvv, a.v, b.v, c.v);
  return out;
}

double riemann4(const Params& params, const FiberPoint& e, const LiftVector& a, const LiftVector& b,
                const LiftVector& c, const LiftVector& d, const BaseCurvature& base) {
  return metric_h(params, e, riemann(params, e, a, b, c, base), d);
}

double sectional(const Params& params, const FiberPoint& e, PlaneKind plane, const Vec& x, const Vec& y,
                 const BaseCurvature& base) {
  require_same_dim(e, base);
  require_orthonormal(x, y);
  const Weights k = weights_at(params, e);
  const Vec& ev = e.e();
  const double xe = x.dot(ev);
  const double ye = y.dot(ev);
  switch (plane) {
    case PlaneKind::hh:
      return base.sectional(x, y) - 0.75 * k.wp * base.R(x, y, ev).squaredNorm();
    case PlaneKind::hv:
      return k.wp / (4.0 * (1.0 + params.q * ye * ye)) * base.R(ev, y, x).squaredNorm();
    case PlaneKind::vv: {
      const double sigma = xe * xe + ye * ye;
      const double denom = 1.0 + params.q * sigma;
      if (!(denom > 0.0)) {
        throw DomainError("vertical plane is not spacelike at this point");
      }
      const CoefficientSet cs = coefficients(params, e.t(), e.dim());
      return (cs.A * sigma + cs.B) / (k.wp * denom);
    }
  }
  return 0.0;
}

double sectional_plane(const Params& params, const FiberPoint& e, const LiftVector& a, const LiftVector& b,
                       const BaseCurvature& base) {
  const double aa = metric_h(params, e, a, a);
  const double bb = metric_h(params, e, b, b);
  const double ab = metric_h(params, e, a, b);
  const double area = aa * bb - ab * ab;
  if (!(area > 0.0)) {
    throw std::invalid_argument("sectional_plane: vectors do not span a non-degenerate plane");
  }
  return riemann4(params, e, a, b, b, a, base) / area;
}

double ricci(const Params& params, int n, const FiberPoint& e, RicciCase which, const Vec& x, const Vec& y,
             const BaseCurvature& base) {
  require_same_dim(e, base);
  if (n != e.dim()) {
    throw std::invalid_argument("ricci: n does not match the fibre point dimension");
  }
  const Weights k = weights_at(params, e);
  const Vec& ev = e.e();
  switch (which) {
    case RicciCase::hh: {
      double cross = 0.0;
      double fibre = 0.0;
      for (int i = 0; i < n; ++i) {
        const Vec ei = Vec::Unit(n, i);
        cross += base.R(x, ei, ev).dot(base.R(y, ei, ev));
        fibre += base.R(ev, ei, x).dot(base.R(ev, ei, y));
      }
      return base.ricci(x, y) - 0.75 * k.wp * cross + 0.25 * k.wp * fibre;
    }
    case RicciCase::hv:
      return 0.5 * k.wp * base.delta_R(x, ev).dot(y);
    case RicciCase::vv: {
      double pairing = 0.0;
      for (int i = 0; i < n; ++i) {
        const Vec ei = Vec::Unit(n, i);
        pairing += base.R(x, ev, ei).dot(base.R(y, ev, ei));
      }
      const CoefficientSet cs = coefficients(params, e.t(), n);
      return 0.25 * k.w2p * pairing + cs.alpha * x.dot(y) + cs.beta * x.dot(ev) * y.dot(ev);
    }
  }
  return 0.0;
}

double ricci(const Params& params, int n, const FiberPoint& e, const LiftVector& a, const LiftVector& b,
             const BaseCurvature& base) {
  double sum = ricci(params, n, e, RicciCase::hh, a.h, b.h, base) + ricci(params, n, e, RicciCase::vv, a.v, b.v, base);
  const bool mixed = a.h.squaredNorm() * b.v.squaredNorm() + a.v.squaredNorm() * b.h.squaredNorm() > 0.0;
  if (mixed) {
    sum += ricci(params, n, e, RicciCase::hv, a.h, b.v, base) + ricci(params, n, e, RicciCase::hv, b.h, a.v, base);
  }
  return sum;
}

double scalar(const Params& params, int n, const FiberPoint& e, const BaseCurvature& base) {
  require_same_dim(e, base);
  if (n != e.dim()) {
    throw std::invalid_argument("scalar: n does not match the fibre point dimension");
  }
  const Weights k = weights_at(params, e);
  double frame_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      frame_sum += base.R(Vec::Unit(n, i), Vec::Unit(n, j), e.e()).squaredNorm();
    }
  }
  const CoefficientSet cs = coefficients(params, e.t(), n);
  return base.scalar() - 0.25 * k.wp * frame_sum + (n - 1.0) / k.wp * (2.0 * cs.alpha - (n - 2.0) * cs.B);
}

std::vector<Vec> adapted_frame(const Vec& e) {
  const auto n = e.size();
  std::vector<Vec> frame;
  frame.reserve(static_cast<std::size_t>(n));
  const double norm = e.norm();
  if (norm > 0.0) {
    frame.push_back(e / norm);
  }
  for (Eigen::Index i = 0; i < n && static_cast<Eigen::Index>(frame.size()) < n; ++i) {
    Vec v = Vec::Unit(n, i);
    // Two Gram-Schmidt passes for stability.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& f : frame) {
        v -= v.dot(f) * f;
      }
    }
    const double len = v.norm();
    if (len > 1e-8) {
      frame.push_back(v / len);
    }
  }
  return frame;
}

std::vector<LiftVector> orthonormal_lift_frame(const Params& params, const FiberPoint& e) {
  const Weights k = weights_at(params, e);
  const int n = e.dim();
  const std::vector<Vec> base = adapted_frame(e.e());
  std::vector<LiftVector> frame;
  frame.reserve(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    frame.push_back(LiftVector::horizontal(Vec::Unit(n, i)));
  }
  const double scale = 1.0 / std::sqrt(k.wp);
  for (int i = 0; i < n; ++i) {
    double s = scale;
    if (i == 0 && e.t() > 0.0) {
      s *= std::sqrt(k.wq);
    }
    frame.push_back(LiftVector::vertical(s * base[static_cast<std::size_t>(i)]));
  }
  return frame;
}

namespace space_form {

double sectional_hh(const Params& params, double c, double t, double xe, double ye) {
  require_in_ball_bundle(params, t);
  return c - 0.75 * c * c * std::pow(omega(t), params.p) * (xe * xe + ye * ye);
}

double sectional_hv(const Params& params, double c, double t, double xe, double ye) {
  require_in_ball_bundle(params, t);
  return 0.25 * c * c * std::pow(omega(t), params.p) * xe * xe / (1.0 + params.q * ye * ye);
}

double sectional_vv(const Params& params, double t, double xe, double ye, int n) {
  if (n < 2) {
    throw DomainError("base dimension must be at least 2");
  }
  require_in_ball_bundle(params, t);
  // A sigma + B with A = p w^2 w_q (p+q-2-qt) and B = w^2 w_q Q(t); this
  // avoids the cancellation between A t and B at large t.
  const double p = params.p;
  const double q = params.q;
  const double sigma = xe * xe + ye * ye;
  const double fibre_q = 2.0 * p + q + (2.0 * p + 2.0 * q - p * p) * t + q * t * t;
  const double bracket = fibre_q + sigma * p * (p + q - 2.0 - q * t);
  return std::pow(omega(t), 2.0 - p) * omega_q(t, params) * bracket / (1.0 + q * sigma);
}

double ricci_hh(const Params& params, int n, double c, double t, double xy, double xe, double ye) {
  require_in_ball_bundle(params, t);
  const double wp = std::pow(omega(t), params.p);
  return c * (n - 1.0) * xy + 0.5 * c * c * wp * ((2.0 - n) * xe * ye - t * xy);
}

double ricci_vv(const Params& params, int n, double c, double t, double xy, double xe, double ye) {
  const CoefficientSet cs = coefficients(params, t, n);
  const double w2p = std::pow(omega(t), 2.0 * params.p);
  return (cs.alpha + 0.5 * c * c * t * w2p) * xy + (cs.beta - 0.5 * c * c * w2p) * xe * ye;
}

}  // namespace space_form

}  // namespace cgm
