#pragma once

// Closed forms on the standard simplex {x_i >= 0, sum x_i <= 1}: best ellipse
// constants, the generalized Minkowski functional, maximal chords, the Siciak
// extremal function and its normal derivative, the equilibrium density and the
// KR directional bound.

#include <complex>
#include <span>
#include <vector>

#include "bernstein/geometry.hpp"

namespace bernstein {

/// Strict interior point of the d-dimensional standard simplex. Coordinates
/// within kInteriorTolerance of a facet are rejected.
class SimplexPoint {
 public:
  static SimplexPoint make(std::vector<double> coords);
  static SimplexPoint make(double x1, double x2) { return make({x1, x2}); }

  std::size_t dim() const { return coords_.size(); }
  std::span<const double> coords() const { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }
  /// 1 - sum x_i.
  double slack() const { return slack_; }
  Vec2 planar() const;

 private:
  SimplexPoint(std::vector<double> c, double s)
      : coords_(std::move(c)), slack_(s) {}
  std::vector<double> coords_;
  double slack_;
};

inline constexpr std::size_t kPlanar = 2;

/// The centroid (1/3, 1/3) of the triangle.
SimplexPoint centroid();

/// E(Delta, x, y) for y != 0; y is normalized first (the raw expression is
/// homogeneous of degree -1 in y).
double ellipse_constant_dir(const SimplexPoint& x, std::span<const double> y);
double ellipse_constant_dir(const SimplexPoint& x, UnitDirection y);

/// E(Delta, x) = min over unit y of E(Delta, x, y). Planar only.
double ellipse_constant(const SimplexPoint& x);
/// D(x) = sqrt([x1(1-x1) - x2(1-x2)]^2 + 4 x1^2 x2^2).
double ellipse_discriminant(const SimplexPoint& x);

/// alpha(Delta, x) = 1 - 2 min(x1, x2, 1 - x1 - x2).
double alpha_simplex(const SimplexPoint& x);

/// tau(Delta, (cos phi, sin phi)); pi-periodic.
double tau_simplex(double phi);

/// D_y^+ V_Delta(x) = sqrt(sum y_i^2 / x_i + (sum y_i)^2 / (1 - sum x_i)),
/// with y normalized.
double baran_derivative(const SimplexPoint& x, std::span<const double> y);
double baran_derivative(const SimplexPoint& x, UnitDirection y);

/// h(w) = w + sqrt(w^2 - 1), branch chosen with |h(w)| >= 1.
std::complex<double> joukowski_inverse(std::complex<double> w);

/// V_Delta(z) = log |h(|z_1| + ... + |z_d| + |1 - (z_1 + ... + z_d)|)|.
double siciak_extremal(std::span<const std::complex<double>> z);

/// Density 2 pi / sqrt(x1 x2 (1 - x1 - x2)) of the equilibrium measure.
double equilibrium_density(const SimplexPoint& x);

/// 2 / (tau(Delta, y) sqrt(1 - alpha(Delta, x))) with y = (cos phi, sin phi).
double kr_bound_dir(const SimplexPoint& x, double phi);

}  // namespace bernstein
