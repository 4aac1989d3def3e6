#pragma once

// Kernel sets of directional derivative bounds.
//
// Given bounds r(theta) on |<v, y(theta)>|, the "cloud" H = {t y : |t| <= r(y)}
// is generally not convex; its kernel H~ = intersection of the slabs
// |<v, y>| <= r(y) is a convex, origin-symmetric outer bound on the set of
// normalized gradients.

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "bernstein/geometry.hpp"
#include "bernstein/simplex.hpp"

namespace bernstein {

/// Bounds sampled at N uniform angles theta_k = pi k / N in [0, pi).
struct DirectionalBoundTable {
  std::vector<double> thetas;
  std::vector<double> r;

  /// Throws std::invalid_argument for N < 16 and DomainError for r <= 0.
  static DirectionalBoundTable sample(int n,
                                      const std::function<double(double)>& bound);
  std::size_t size() const { return thetas.size(); }
};

DirectionalBoundTable kr_table(const SimplexPoint& x, int n);
DirectionalBoundTable baran_table(const SimplexPoint& x, int n);

struct KernelRegion {
  ConvexPolygon polygon;
  int n_halfplanes;
  double area;
};

/// Intersects the 2N slab half-planes inside a square of half-width 2 max r.
KernelRegion kernel_intersect(const DirectionalBoundTable& table);

namespace reference {
/// Same region by successive Sutherland-Hodgman clipping, O(N^2).
KernelRegion kernel_intersect(const DirectionalBoundTable& table);
}  // namespace reference

/// Vertex set closed under v -> -v within tol.
bool is_origin_symmetric(const ConvexPolygon& polygon, double tol = 1e-9);

/// Area of the polar region {t y(theta) : |t| <= r(theta)}, i.e. the integral
/// of r^2 over [0, pi). `breakpoints` split the range where r has kinks.
double polar_area(const std::function<double(double)>& r,
                  std::span<const double> breakpoints, double rel_tol = 1e-10);

/// Area of the cloud H(Delta, x) of the KR bounds.
double cloud_area(const SimplexPoint& x);

struct Disk {
  Vec2 center;
  double radius;
};

/// Each tau-branch of the KR bound traces a circle through the
/// origin; the upper half of the cloud is the part of the union of these
/// three disks above the horizontal axis.
std::array<Disk, 3> kr_cloud_disks(const SimplexPoint& x);

/// Area of (union of disks) intersected with {y >= y_floor}, by integrating
/// the length of horizontal sections.
double disk_union_area_above(std::span<const Disk> disks, double y_floor,
                             double tol = 1e-10);

/// The kernel ellipse a u1^2 + b u2^2 - c u1 u2 <= 1 of the exact bounds.
struct KernelEllipse {
  double a;
  double b;
  double c;
  double discriminant;  // D = sqrt((a - b)^2 + c^2)
  double rotation;  // angle annihilating the mixed term
  double minor;  // mu
  double major;  // nu

  double form(Vec2 u) const { return a * u.x * u.x + b * u.y * u.y - c * u.x * u.y; }
  double area() const;
};

KernelEllipse kernel_ellipse_closed_form(const SimplexPoint& x);
/// pi / sqrt(x1 x2 (1 - x1 - x2)).
double kernel_area_closed(const SimplexPoint& x);
/// Major semi-axis nu(x), the largest norm in the kernel ellipse.
double kernel_max_norm(const SimplexPoint& x);

}  // namespace bernstein
