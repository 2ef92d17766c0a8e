#include "cgm/oracle.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cgm::oracle {

Chart::Chart(int n, double c) : n_(n), c_(c) {
  if (n < 2) {
    throw DomainError("chart dimension must be at least 2");
  }
  kind_ = c == 0.0 ? Kind::Flat : (c > 0.0 ? Kind::StereographicSphere : Kind::PoincareBall);
}

bool Chart::contains(const Vec& x) const {
  if (x.size() != n_) {
    return false;
  }
  return kind_ != Kind::PoincareBall || x.squaredNorm() < 1.0;
}

double Chart::conformal_factor(const Vec& x) const {
  const double r2 = x.squaredNorm();
  switch (kind_) {
    case Kind::Flat:
      return 1.0;
    case Kind::StereographicSphere: {
      const double s = 2.0 / (1.0 + r2);
      return s * s / c_;
    }
    case Kind::PoincareBall: {
      const double s = 2.0 / (1.0 - r2);
      return s * s / -c_;
    }
  }
  return 1.0;
}

Mat Chart::metric(const Vec& x) const {
  if (!contains(x)) {
    throw DomainError("point outside the chart domain");
  }
  return conformal_factor(x) * Mat::Identity(n_, n_);
}

std::string to_string(Chart::Kind kind) {
  switch (kind) {
    case Chart::Kind::Flat: return "flat";
    case Chart::Kind::StereographicSphere: return "stereographic_sphere";
    case Chart::Kind::PoincareBall: return "poincare_ball";
  }
  return "?";
}

Vec TMPoint::stacked() const {
  Vec out(x.size() + u.size());
  out << x, u;
  return out;
}

TMPoint TMPoint::unstack(const Vec& xu) {
  const auto n = xu.size() / 2;
  return {xu.head(n), xu.tail(n)};
}

Vec Christoffel::contract(const Vec& v, const Vec& w) const {
  Vec out(dim());
  for (int a = 0; a < dim(); ++a) {
    out(a) = v.dot(slices_[static_cast<std::size_t>(a)] * w);
  }
  return out;
}

double Christoffel::max_abs() const {
  double m = 0.0;
  for (const auto& s : slices_) {
    m = std::max(m, s.cwiseAbs().maxCoeff());
  }
  return m;
}

double Christoffel::max_asymmetry() const {
  double m = 0.0;
  for (const auto& s : slices_) {
    m = std::max(m, (s - s.transpose()).cwiseAbs().maxCoeff());
  }
  return m;
}

Vec RiemannTensor::apply(const Vec& x, const Vec& y, const Vec& z) const {
  Vec out = Vec::Zero(dim_);
  for (int a = 0; a < dim_; ++a) {
    double acc = 0.0;
    for (int b = 0; b < dim_; ++b) {
      if (z(b) == 0.0) {
        continue;
      }
      for (int c = 0; c < dim_; ++c) {
        if (x(c) == 0.0) {
          continue;
        }
        for (int d = 0; d < dim_; ++d) {
          acc += (*this)(a, b, c, d) * z(b) * x(c) * y(d);
        }
      }
    }
    out(a) = acc;
  }
  return out;
}

double RiemannTensor::lowered(const Mat& g, const Vec& x, const Vec& y, const Vec& z, const Vec& w) const {
  return w.dot(g * apply(x, y, z));
}

Mat RiemannTensor::ricci() const {
  Mat ric = Mat::Zero(dim_, dim_);
  for (int b = 0; b < dim_; ++b) {
    for (int d = 0; d < dim_; ++d) {
      double acc = 0.0;
      for (int a = 0; a < dim_; ++a) {
        acc += (*this)(a, b, a, d);
      }
      ric(b, d) = acc;
    }
  }
  return ric;
}

double RiemannTensor::max_abs() const {
  double m = 0.0;
  for (double v : data_) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

namespace {

template <class F>
auto central_difference(const F& f, const Vec& at, int k, double step, int order) -> decltype(f(at)) {
  Vec plus = at;
  Vec minus = at;
  if (order == 2) {
    plus(k) += step;
    minus(k) -= step;
    return (f(plus) - f(minus)) / (2.0 * step);
  }
  if (order == 4) {
    Vec plus2 = at;
    Vec minus2 = at;
    plus(k) += step;
    minus(k) -= step;
    plus2(k) += 2.0 * step;
    minus2(k) -= 2.0 * step;
    return (8.0 * (f(plus) - f(minus)) - (f(plus2) - f(minus2))) / (12.0 * step);
  }
  throw std::invalid_argument("finite-difference order must be 2 or 4");
}

Christoffel christoffel_from(const Mat& h, const std::vector<Mat>& dh) {
  const int dim = static_cast<int>(h.rows());
  const Eigen::FullPivLU<Mat> lu(h);
  if (!lu.isInvertible()) {
    throw DomainError("metric is singular at the evaluation point");
  }
  const Mat hinv = lu.inverse();
  Christoffel gamma(dim);
  // first kind: [bc, d] = 1/2 (d_b h_dc + d_c h_bd - d_d h_bc)
  for (int b = 0; b < dim; ++b) {
    for (int c = b; c < dim; ++c) {
      Vec first(dim);
      for (int d = 0; d < dim; ++d) {
        first(d) = 0.5 * (dh[static_cast<std::size_t>(b)](d, c) + dh[static_cast<std::size_t>(c)](b, d) -
                          dh[static_cast<std::size_t>(d)](b, c));
      }
      const Vec second = hinv * first;
      for (int a = 0; a < dim; ++a) {
        gamma(a, b, c) = second(a);
        gamma(a, c, b) = second(a);
      }
    }
  }
  return gamma;
}

}  // namespace

Mat fd_partial(const MetricField& field, const Vec& at, int k, double step, int order) {
  return central_difference(field, at, k, step, order);
}

Christoffel fd_christoffel(const MetricField& field, const Vec& at, double step, int order) {
  const int dim = static_cast<int>(at.size());
  const Mat h = field(at);
  std::vector<Mat> dh;
  dh.reserve(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) {
    dh.push_back(fd_partial(field, at, k, step, order));
  }
  return christoffel_from(h, dh);
}

RiemannTensor fd_riemann(const MetricField& field, const Vec& at, const FdConfig& config) {
  const int dim = static_cast<int>(at.size());
  const Christoffel gamma = fd_christoffel(field, at, config.metric_step, config.order);

  // Christoffel symbols flattened so they can be differenced as a vector.
  const auto flat_gamma = [&](const Vec& point) -> Vec {
    const Christoffel g = fd_christoffel(field, point, config.metric_step, config.order);
    Vec out(dim * dim * dim);
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) {
        for (int c = 0; c < dim; ++c) {
          out((a * dim + b) * dim + c) = g(a, b, c);
        }
      }
    }
    return out;
  };
  std::vector<Vec> dgamma;
  dgamma.reserve(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) {
    dgamma.push_back(central_difference(flat_gamma, at, k, config.nested_step, config.order));
  }
  const auto dG = [&](int k, int a, int b, int c) {
    return dgamma[static_cast<std::size_t>(k)]((a * dim + b) * dim + c);
  };

  RiemannTensor riem(dim);
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      for (int c = 0; c < dim; ++c) {
        for (int d = c + 1; d < dim; ++d) {
          double value = dG(c, a, d, b) - dG(d, a, c, b);
          for (int e = 0; e < dim; ++e) {
            value += gamma(a, c, e) * gamma(e, d, b) - gamma(a, d, e) * gamma(e, c, b);
          }
          riem(a, b, c, d) = value;
          riem(a, b, d, c) = -value;
        }
      }
    }
  }
  return riem;
}

Christoffel base_christoffel(const Chart& chart, const Vec& x, const FdConfig& config) {
  const MetricField g = [&chart](const Vec& y) { return chart.metric(y); };
  return fd_christoffel(g, x, config.base_step, config.order);
}

double fibre_radius(const Chart& chart, const TMPoint& pt) { return pt.u.dot(chart.metric(pt.x) * pt.u); }

Mat tm_metric(const Params& params, const Chart& chart, const TMPoint& pt, const FdConfig& config) {
  const int n = chart.dim();
  if (pt.x.size() != n || pt.u.size() != n) {
    throw std::invalid_argument("tm_metric: point has the wrong dimension");
  }
  const Mat g = chart.metric(pt.x);
  const double t = pt.u.dot(g * pt.u);
  require_in_ball_bundle(params, t);
  const Christoffel gamma = base_christoffel(chart, pt.x, config);

  // Connection-map block: (KA)^k = du^k + M^k_i dx^i with M^k_i = Gamma^k_{ij} u^j.
  Mat m(n, n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) {
        acc += gamma(k, i, j) * pt.u(j);
      }
      m(k, i) = acc;
    }
  }
  const Vec gu = g * pt.u;
  const Mat vertical = std::pow(1.0 / (1.0 + t), params.p) * (g + params.q * gu * gu.transpose());

  Mat h(2 * n, 2 * n);
  h.topLeftCorner(n, n) = g + m.transpose() * vertical * m;
  h.topRightCorner(n, n) = m.transpose() * vertical;
  h.bottomLeftCorner(n, n) = vertical * m;
  h.bottomRightCorner(n, n) = vertical;
  return h;
}

MetricField tm_metric_field(const Params& params, const Chart& chart, const FdConfig& config) {
  return [params, chart, config](const Vec& xu) { return tm_metric(params, chart, TMPoint::unstack(xu), config); };
}

double chart_sectional_curvature(const Chart& chart, const Vec& x, const FdConfig& config) {
  const MetricField g = [&chart](const Vec& y) { return chart.metric(y); };
  FdConfig base_config = config;
  base_config.metric_step = config.base_step;
  const RiemannTensor riem = fd_riemann(g, x, base_config);
  const Mat gx = chart.metric(x);
  const Vec e0 = Vec::Unit(chart.dim(), 0);
  const Vec e1 = Vec::Unit(chart.dim(), 1);
  const double area = gx(0, 0) * gx(1, 1) - gx(0, 1) * gx(0, 1);
  return riem.lowered(gx, e0, e1, e1, e0) / area;
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::sectional: return "sectional";
    case Suite::ricci: return "ricci";
    case Suite::scalar: return "scalar";
    case Suite::connection: return "connection";
  }
  return "?";
}

double Tolerances::for_suite(Suite s) const {
  switch (s) {
    case Suite::sectional: return sectional;
    case Suite::ricci: return ricci;
    case Suite::scalar: return scalar;
    case Suite::connection: return connection;
  }
  return 0.0;
}

Tolerances Tolerances::scaled(double factor) const {
  Tolerances t = *this;
  t.sectional *= factor;
  t.ricci *= factor;
  t.scalar *= factor;
  t.connection *= factor;
  return t;
}

double ComparisonReport::max_rel_err() const {
  double m = 0.0;
  for (const auto& r : records) {
    m = std::max(m, r.rel_err);
  }
  return m;
}

void ComparisonReport::add(std::string name, double closed_form, double numeric, double tolerance,
                           double small_value) {
  ComparisonRecord r;
  r.name = std::move(name);
  r.closed_form = closed_form;
  r.numeric = numeric;
  r.abs_err = std::abs(closed_form - numeric);
  r.tolerance = tolerance;
  if (std::abs(closed_form) < small_value) {
    r.rel_err = r.abs_err;
  } else {
    r.rel_err = r.abs_err / std::abs(closed_form);
  }
  r.pass = std::isfinite(r.rel_err) && r.rel_err <= tolerance;
  pass = pass && r.pass;
  records.push_back(std::move(r));
}

void ComparisonReport::add_vector(std::string name, const Vec& closed_form, const Vec& numeric, const Mat& metric,
                                  double tolerance, double small_value) {
  const auto h_norm = [&metric](const Vec& v) { return std::sqrt(std::max(0.0, v.dot(metric * v))); };
  ComparisonRecord r;
  r.name = std::move(name);
  r.closed_form = h_norm(closed_form);
  r.numeric = h_norm(numeric);
  r.abs_err = h_norm(closed_form - numeric);
  r.tolerance = tolerance;
  r.rel_err = r.closed_form < small_value ? r.abs_err : r.abs_err / r.closed_form;
  r.pass = std::isfinite(r.rel_err) && r.rel_err <= tolerance;
  pass = pass && r.pass;
  records.push_back(std::move(r));
}

std::vector<Vec> chart_frame(const Chart& chart, const Vec& x) {
  const int n = chart.dim();
  const Mat g = chart.metric(x);
  std::vector<Vec> frame;
  frame.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Vec v = Vec::Unit(n, i);
    for (const auto& f : frame) {
      v -= v.dot(g * f) * f;
    }
    v /= std::sqrt(v.dot(g * v));
    frame.push_back(v);
  }
  return frame;
}

TMPoint make_point(const Chart& chart, const Vec& x, const Vec& direction, double t) {
  if (t < 0.0) {
    throw DomainError("make_point: negative fibre radius");
  }
  const Mat g = chart.metric(x);
  const double len = std::sqrt(direction.dot(g * direction));
  if (!(len > 0.0)) {
    return {x, Vec::Zero(chart.dim())};
  }
  return {x, direction * (std::sqrt(t) / len)};
}

namespace {

std::string label(const char* kind, int i, int j) {
  std::ostringstream os;
  os << kind << '(' << i << ',' << j << ')';
  return os.str();
}

}  // namespace

ComparisonReport compare(const Params& params, const Chart& chart, const TMPoint& pt, Suite suite,
                         const Tolerances& tolerances, const FdConfig& config) {
  ComparisonReport report;
  report.tolerances = tolerances;
  const int n = chart.dim();
  const double tol = tolerances.for_suite(suite);
  const double small = tolerances.small_value;

  if (!chart.contains(pt.x)) {
    report.pass = false;
    report.diagnostics = "base point outside chart domain";
    return report;
  }
  const Mat g = chart.metric(pt.x);
  const double t = pt.u.dot(g * pt.u);
  if (!(params.q * t > -1.0 + 1e-3)) {
    report.pass = false;
    report.diagnostics = "fibre point too close to (or beyond) the sphere bundle; need q|e|^2 > -1 + 1e-3";
    return report;
  }

  const std::vector<Vec> frame = chart_frame(chart, pt.x);
  Mat frame_mat(n, n);
  for (int i = 0; i < n; ++i) {
    frame_mat.col(i) = frame[static_cast<std::size_t>(i)];
  }
  const Vec e_components = frame_mat.transpose() * (g * pt.u);
  const FiberPoint fp(e_components);
  const BaseCurvature base = BaseCurvature::space_form(n, chart.c());
  const Christoffel gamma0 = base_christoffel(chart, pt.x, config);

  const auto to_coords = [&](const LiftVector& lift) {
    const Vec xi_h = frame_mat * lift.h;
    const Vec xi_v = frame_mat * lift.v;
    Vec out(2 * n);
    out << xi_h, xi_v - gamma0.contract(xi_h, pt.u);
    return out;
  };

  const MetricField field = tm_metric_field(params, chart, config);
  const Vec at = pt.stacked();
  const Mat h0 = field(at);

  try {
    if (suite == Suite::connection) {
      const Christoffel gamma_tm = fd_christoffel(field, at, config.metric_step, config.order);
      using CC = ConnectionCase;
      for (CC which : {CC::hh, CC::hv, CC::vh, CC::vv}) {
        const bool a_horizontal = which == CC::hh || which == CC::hv;
        const bool b_horizontal = which == CC::hh || which == CC::vh;
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            const Vec xc = Vec::Unit(n, i);
            const Vec yc = Vec::Unit(n, j);
            const Vec y0 = frame_mat * yc;
            // Y extended with vanishing covariant derivative at x.
            const auto y_field = [&](const Vec& x) -> Vec { return y0 - gamma0.contract(x - pt.x, y0); };
            const auto lifted = [&](const Vec& xu) -> Vec {
              const TMPoint q = TMPoint::unstack(xu);
              const Vec y = y_field(q.x);
              Vec out(2 * n);
              if (b_horizontal) {
                out << y, -base_christoffel(chart, q.x, config).contract(y, q.u);
              } else {
                out << Vec::Zero(n), y;
              }
              return out;
            };
            const Vec a_coords =
                to_coords(a_horizontal ? LiftVector::horizontal(xc) : LiftVector::vertical(xc));
            Vec numeric = gamma_tm.contract(a_coords, lifted(at));
            for (int k = 0; k < 2 * n; ++k) {
              if (a_coords(k) != 0.0) {
                numeric += a_coords(k) * central_difference(lifted, at, k, config.metric_step, config.order);
              }
            }
            const Vec closed = to_coords(connection(params, fp, which, xc, yc, base));
            const char* names[] = {"nabla_hh", "nabla_hv", "nabla_vh", "nabla_vv"};
            report.add_vector(label(names[static_cast<int>(which)], i, j), closed, numeric, h0, tol, small);
          }
        }
      }
      return report;
    }

    const RiemannTensor riem = fd_riemann(field, at, config);

    if (suite == Suite::sectional) {
      const auto numeric_k = [&](const LiftVector& a, const LiftVector& b) {
        const Vec ac = to_coords(a);
        const Vec bc = to_coords(b);
        const double area = ac.dot(h0 * ac) * bc.dot(h0 * bc) - std::pow(ac.dot(h0 * bc), 2);
        return riem.lowered(h0, ac, bc, bc, ac) / area;
      };
      const auto add_planes = [&](const std::string& suffix, const Vec& x, const Vec& y, bool symmetric_kinds) {
        if (symmetric_kinds) {
          report.add("K_hh" + suffix, sectional(params, fp, PlaneKind::hh, x, y, base),
                     numeric_k(LiftVector::horizontal(x), LiftVector::horizontal(y)), tol, small);
          report.add("K_vv" + suffix, sectional(params, fp, PlaneKind::vv, x, y, base),
                     numeric_k(LiftVector::vertical(x), LiftVector::vertical(y)), tol, small);
        }
        report.add("K_hv" + suffix, sectional(params, fp, PlaneKind::hv, x, y, base),
                   numeric_k(LiftVector::horizontal(x), LiftVector::vertical(y)), tol, small);
      };
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i != j) {
            add_planes(label("", i, j), Vec::Unit(n, i), Vec::Unit(n, j), i < j);
          }
        }
      }
      const Vec rot_x = (Vec::Unit(n, 0) + Vec::Unit(n, 1)) / std::sqrt(2.0);
      const Vec rot_y = (Vec::Unit(n, 0) - Vec::Unit(n, 1)) / std::sqrt(2.0);
      add_planes("(rot)", rot_x, rot_y, true);
      // A plane mixing horizontal and vertical directions exercises every
      // curvature case at once.
      const LiftVector a{Vec::Unit(n, 0), 0.7 * Vec::Unit(n, 1)};
      const LiftVector b{0.4 * Vec::Unit(n, 1) - 0.3 * Vec::Unit(n, 0), Vec::Unit(n, 0) + 0.2 * Vec::Unit(n, n - 1)};
      report.add("K_mixed", sectional_plane(params, fp, a, b, base), numeric_k(a, b), tol, small);
      return report;
    }

    const Mat ric = riem.ricci();
    const Mat ric_sym = 0.5 * (ric + ric.transpose());
    if (suite == Suite::ricci) {
      std::vector<LiftVector> basis;
      for (int i = 0; i < n; ++i) {
        basis.push_back(LiftVector::horizontal(Vec::Unit(n, i)));
      }
      for (int i = 0; i < n; ++i) {
        basis.push_back(LiftVector::vertical(Vec::Unit(n, i)));
      }
      for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = a; b < basis.size(); ++b) {
          const Vec ac = to_coords(basis[a]);
          const Vec bc = to_coords(basis[b]);
          const char* kind = a < static_cast<std::size_t>(n) ? (b < static_cast<std::size_t>(n) ? "rho_hh" : "rho_hv")
                                                             : "rho_vv";
          report.add(label(kind, static_cast<int>(a % n), static_cast<int>(b % n)),
                     ricci(params, n, fp, basis[a], basis[b], base), ac.dot(ric_sym * bc), tol, small);
        }
      }
      return report;
    }

    const double numeric_scalar = (h0.inverse() * ric_sym).trace();
    report.add("scalar", scalar(params, n, fp, base), numeric_scalar, tol, small);
  } catch (const std::exception& ex) {
    report.pass = false;
    report.diagnostics = ex.what();
  }
  return report;
}

}  // namespace cgm::oracle
