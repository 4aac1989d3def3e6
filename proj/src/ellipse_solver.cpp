#include "bernstein/ellipse_solver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "bernstein/numeric.hpp"

namespace bernstein {

double containment_residual(const InscribedEllipse& e,
                            const ConvexPolygon& body) {
  const Vec2 c = e.center();
  const Vec2 y = e.direction.vec();
  double worst = -std::numeric_limits<double>::infinity();
  for (const HalfPlane& h : body.edges()) {
    const double na = dot(h.normal, e.axis);
    const double ny = dot(h.normal, y);
    const double reach = dot(h.normal, c) + std::hypot(na, e.b * ny);
    worst = std::max(worst, reach - h.offset);
  }
  return worst;
}

bool ellipse_in_polygon(const InscribedEllipse& e, const ConvexPolygon& body,
                        double tol) {
  return containment_residual(e, body) <= tol;
}

namespace {

// With d = offset - <n, x> > 0 and s = <n, a>, the edge certificate
//   sqrt(s^2 + b^2 <n,y>^2) - s <= d
// is equivalent to s >= (b^2 <n,y>^2 - d^2) / (2 d), a half-plane in a.
std::vector<Vec2> feasible_axes(const ConvexPolygon& body, Vec2 x, Vec2 y,
                                double b, double box) {
  std::vector<Vec2> region = {{-box, -box}, {box, -box}, {box, box}, {-box, box}};
  for (const HalfPlane& h : body.edges()) {
    const double d = h.slack(x);
    const double ny = dot(h.normal, y);
    const double lower = (b * b * ny * ny - d * d) / (2.0 * d);
    region = clip(region, HalfPlane{-h.normal, -lower});
    if (region.empty()) break;
  }
  return region;
}

Vec2 vertex_mean(const std::vector<Vec2>& ring) {
  Vec2 m;
  for (const Vec2& p : ring) m = m + p;
  return m * (1.0 / static_cast<double>(ring.size()));
}

}  // namespace

EllipseSolveReport best_ellipse(const ConvexPolygon& body, const InteriorPoint& x,
                                UnitDirection y,
                                const EllipseSolveOptions& options) {
  const Vec2 p = InteriorPoint::make(body, x.point()).point();
  const double diam = diameter(body);
  // The far point x - 2a also lies in K, so |a| <= diam / 2.
  const double box = diam;

  double lo = 0.0;
  double hi = diam;
  std::vector<Vec2> lo_region = feasible_axes(body, p, y.vec(), lo, box);
  int iterations = 0;
  while (hi - lo > options.bracket_tol * diam) {
    const double mid = 0.5 * (lo + hi);
    std::vector<Vec2> region = feasible_axes(body, p, y.vec(), mid, box);
    if (!region.empty()) {
      lo = mid;
      lo_region = std::move(region);
    } else {
      hi = mid;
    }
    ++iterations;
  }

  const InscribedEllipse witness{p, y, vertex_mean(lo_region), lo};
  return {lo, witness, iterations, containment_residual(witness, body)};
}

DirectionalMinimum best_ellipse_all_dirs(const ConvexPolygon& body,
                                         const InteriorPoint& x, int n_dirs,
                                         const EllipseSolveOptions& options) {
  if (n_dirs < 16) throw std::invalid_argument("n_dirs must be at least 16");
  const double step = kPi / n_dirs;
  const auto value_at = [&](double angle) {
    return best_ellipse(body, x, UnitDirection::from_angle(angle), options)
        .best_b;
  };

  int best = 0;
  double best_value = value_at(0.0);
  for (int k = 1; k < n_dirs; ++k) {
    const double v = value_at(k * step);
    if (v < best_value) {
      best_value = v;
      best = k;
    }
  }
  const ScalarMinimum refined = golden_section_min(
      value_at, best * step - step, best * step + step, 1e-9);
  if (refined.value < best_value) {
    double angle = std::fmod(refined.arg, kPi);
    if (angle < 0.0) angle += kPi;
    return {refined.value, angle};
  }
  return {best_value, best * step};
}

}  // namespace bernstein
