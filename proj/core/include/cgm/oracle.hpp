#pragma once

#include "cgm/curvature.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace cgm::oracle {

using Mat = Eigen::MatrixXd;

/// Coordinate model of an n-dimensional space form of curvature c:
/// Cartesian for c = 0, stereographic for c > 0, Poincare ball for c < 0.
class Chart {
 public:
  enum class Kind { Flat, StereographicSphere, PoincareBall };

  Chart(int n, double c);

  int dim() const { return n_; }
  double c() const { return c_; }
  Kind kind() const { return kind_; }

  bool contains(const Vec& x) const;
  /// Conformal factor: g(x) = factor(x) * identity.
  double conformal_factor(const Vec& x) const;
  Mat metric(const Vec& x) const;

 private:
  int n_;
  double c_;
  Kind kind_;
};

std::string to_string(Chart::Kind kind);

/// Stencil order and step sizes of the finite-difference pipeline.
struct FdConfig {
  int order = 4;               // 2 or 4 (central differences)
  double base_step = 1e-3;     // base Christoffel symbols from the chart metric
  double metric_step = 1e-3;   // first derivatives of the TM metric
  double nested_step = 1e-3;   // derivatives of the Christoffel symbols
};

/// Point of TM in induced coordinates: base point x, fibre coordinates u.
struct TMPoint {
  Vec x;
  Vec u;

  Vec stacked() const;
  static TMPoint unstack(const Vec& xu);
};

/// Gamma^a_{bc}, stored as one matrix per upper index.
class Christoffel {
 public:
  explicit Christoffel(int dim) : slices_(static_cast<std::size_t>(dim), Mat::Zero(dim, dim)) {}

  int dim() const { return static_cast<int>(slices_.size()); }
  double& operator()(int a, int b, int c) { return slices_[static_cast<std::size_t>(a)](b, c); }
  double operator()(int a, int b, int c) const { return slices_[static_cast<std::size_t>(a)](b, c); }

  /// Gamma(v, w)^a = Gamma^a_{bc} v^b w^c
  Vec contract(const Vec& v, const Vec& w) const;
  double max_abs() const;
  double max_asymmetry() const;

 private:
  std::vector<Mat> slices_;
};

/// R^a_{bcd}, with R(X,Y)Z^a = R^a_{bcd} Z^b X^c Y^d.
class RiemannTensor {
 public:
  explicit RiemannTensor(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim * dim * dim * dim), 0.0) {}

  int dim() const { return dim_; }
  double& operator()(int a, int b, int c, int d) { return data_[index(a, b, c, d)]; }
  double operator()(int a, int b, int c, int d) const { return data_[index(a, b, c, d)]; }

  /// R(X,Y)Z
  Vec apply(const Vec& x, const Vec& y, const Vec& z) const;
  /// g(R(X,Y)Z, W)
  double lowered(const Mat& g, const Vec& x, const Vec& y, const Vec& z, const Vec& w) const;
  /// Ric_{bd} = R^a_{bad}
  Mat ricci() const;
  double max_abs() const;

 private:
  std::size_t index(int a, int b, int c, int d) const {
    return static_cast<std::size_t>(((a * dim_ + b) * dim_ + c) * dim_ + d);
  }
  int dim_;
  std::vector<double> data_;
};

using MetricField = std::function<Mat(const Vec&)>;

/// Central-difference derivative of a matrix field along coordinate k.
Mat fd_partial(const MetricField& field, const Vec& at, int k, double step, int order);

/// Christoffel symbols of the metric field at `at`,
/// 1/2 h^{ad}(d_b h_dc + d_c h_bd - d_d h_bc), with central differences.
Christoffel fd_christoffel(const MetricField& field, const Vec& at, double step, int order = 4);

/// Riemann tensor from numerically differentiated Christoffel symbols:
/// R^a_{bcd} = d_c G^a_{db} - d_d G^a_{cb} + G^a_{ce} G^e_{db} - G^a_{de} G^e_{cb}.
RiemannTensor fd_riemann(const MetricField& field, const Vec& at, const FdConfig& config = {});

/// Base Christoffel symbols of the chart, by finite differences of g.
Christoffel base_christoffel(const Chart& chart, const Vec& x, const FdConfig& config = {});

/// Squared length of the fibre coordinate vector u under g(x).
double fibre_radius(const Chart& chart, const TMPoint& pt);

/// h_{p,q} in induced coordinates (dx, du): the connection map contributes
/// du^k + Gamma^k_{ij} dx^i u^j, the vertical block is
/// omega^p (g + q (g u)(g u)^T). Throws DomainError off the ball bundle.
Mat tm_metric(const Params& params, const Chart& chart, const TMPoint& pt, const FdConfig& config = {});

MetricField tm_metric_field(const Params& params, const Chart& chart, const FdConfig& config = {});

/// Numeric sectional curvature of the base chart in the coordinate plane (0,1).
double chart_sectional_curvature(const Chart& chart, const Vec& x, const FdConfig& config = {});

enum class Suite { sectional, ricci, scalar, connection };

std::string to_string(Suite suite);

struct ComparisonRecord {
  std::string name;
  double closed_form = 0.0;
  double numeric = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Tolerances {
  double sectional = 1e-3;
  double ricci = 1e-3;
  double scalar = 1e-3;
  double connection = 1e-4;
  /// Below this magnitude a closed-form value is compared absolutely.
  double small_value = 1e-8;

  double for_suite(Suite s) const;
  Tolerances scaled(double factor) const;
};

struct ComparisonReport {
  std::vector<ComparisonRecord> records;
  Tolerances tolerances;
  bool pass = true;
  std::string diagnostics;

  double max_rel_err() const;
  void add(std::string name, double closed_form, double numeric, double tolerance, double small_value);
  /// Vector comparison: errors measured in the h-norm `metric`.
  void add_vector(std::string name, const Vec& closed_form, const Vec& numeric, const Mat& metric, double tolerance,
                  double small_value);
};

/// Builds the closed-form and the finite-difference pipelines at `pt` and
/// compares the selected suite. Requires q|e|^2 > -1 + 1e-3.
ComparisonReport compare(const Params& params, const Chart& chart, const TMPoint& pt, Suite suite,
                         const Tolerances& tolerances = {}, const FdConfig& config = {});

/// A TM point over `x` whose fibre coordinates have g-length squared t,
/// pointing along `direction` (normalised internally).
TMPoint make_point(const Chart& chart, const Vec& x, const Vec& direction, double t);

/// g(x)-orthonormal frame from Gram-Schmidt on the coordinate basis.
std::vector<Vec> chart_frame(const Chart& chart, const Vec& x);

}  // namespace cgm::oracle
