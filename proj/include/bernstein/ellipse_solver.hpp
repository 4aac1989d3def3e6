#pragma once

// Best inscribed ellipse constants E(K, x, y) and E(K, x) for convex polygons.
//
// The ellipse r(t) = cos t a + b sin t y + (x - a) passes through x at t = 0
// with tangent b y. Its support value along an outward unit normal n is
// <n, x - a> + sqrt(<n, a>^2 + b^2 <n, y>^2), so it lies in K iff that value is
// at most the edge offset for every edge.

#include "bernstein/geometry.hpp"

namespace bernstein {

struct InscribedEllipse {
  Vec2 base;  // x, the point of tangency
  UnitDirection direction;  // y
  Vec2 axis;  // a
  double b = 0.0;

  Vec2 center() const { return base - axis; }
  Vec2 at(double t) const {
    return center() + axis * std::cos(t) + direction.vec() * (b * std::sin(t));
  }
};

/// Largest per-edge excess of the ellipse's support value over the edge
/// offset (<= 0 means contained).
double containment_residual(const InscribedEllipse& e, const ConvexPolygon& body);

/// True iff every edge certificate holds with slack >= -tol.
bool ellipse_in_polygon(const InscribedEllipse& e, const ConvexPolygon& body,
                        double tol = 1e-9);

struct EllipseSolveReport {
  double best_b = 0.0;
  InscribedEllipse witness;
  int iterations = 0;
  double feasibility_residual = 0.0;
};

struct EllipseSolveOptions {
  /// Bisection stops when the bracket is below this multiple of diam(K).
  double bracket_tol = 1e-8;
};

/// E(K, x, y): bisection on b with an exact feasibility test in a.
EllipseSolveReport best_ellipse(const ConvexPolygon& body, const InteriorPoint& x,
                                UnitDirection y,
                                const EllipseSolveOptions& options = {});

struct DirectionalMinimum {
  double value;
  double angle;
};

/// E(K, x): minimum of E(K, x, y) over n_dirs uniform angles in [0, pi) and a
/// golden-section refinement around the best cell. Ties go to the smallest
/// angle. Requires n_dirs >= 16.
DirectionalMinimum best_ellipse_all_dirs(const ConvexPolygon& body,
                                         const InteriorPoint& x, int n_dirs,
                                         const EllipseSolveOptions& options = {});

}  // namespace bernstein
