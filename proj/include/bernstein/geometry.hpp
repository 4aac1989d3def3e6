#pragma once

// Planar convex geometry: support function, widths, maximal chords, the
// Minkowski gauge and the generalized Minkowski functional alpha(K, x).

#include <cmath>
#include <optional>
#include <span>
#include <vector>

namespace bernstein {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// Unit vector (cos theta, sin theta).
class UnitDirection {
 public:
  static UnitDirection from_angle(double theta);
  /// Normalizes `v`; throws DomainError for the zero vector.
  static UnitDirection from_vector(Vec2 v);

  double theta() const { return theta_; }
  Vec2 vec() const { return vec_; }
  UnitDirection opposite() const;

 private:
  UnitDirection(double theta, Vec2 v) : theta_(theta), vec_(v) {}
  double theta_;
  Vec2 vec_;
};

/// Closed half-plane {v : <normal, v> <= offset} with unit normal.
struct HalfPlane {
  Vec2 normal;
  double offset;

  double slack(Vec2 v) const { return offset - dot(normal, v); }
};

/// Compact convex polygon with nonzero area, vertices counterclockwise.
class ConvexPolygon {
 public:
  /// Validates and stores `vertices`. Throws GeometryError naming the first
  /// offending vertex index on failure.
  static ConvexPolygon make(std::vector<Vec2> vertices);

  std::span<const Vec2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  /// Outward edge half-planes; edge i joins vertex i to vertex i+1.
  std::span<const HalfPlane> edges() const { return edges_; }
  double area() const { return area_; }

  /// Smallest signed distance from `p` to the edge lines (positive inside).
  double interior_margin(Vec2 p) const;

 private:
  explicit ConvexPolygon(std::vector<Vec2> vertices);
  std::vector<Vec2> vertices_;
  std::vector<HalfPlane> edges_;
  double area_ = 0.0;
};

/// Points closer than this to the boundary are not interior.
inline constexpr double kInteriorTolerance = 1e-12;

/// A point verified to lie strictly inside a given polygon.
class InteriorPoint {
 public:
  /// Throws DomainError when `p` is not strictly interior to `body`.
  static InteriorPoint make(const ConvexPolygon& body, Vec2 p);
  Vec2 point() const { return point_; }

 private:
  explicit InteriorPoint(Vec2 p) : point_(p) {}
  Vec2 point_;
};

// Common bodies.
ConvexPolygon standard_triangle();
ConvexPolygon axis_box(double x0, double y0, double x1, double y1);
/// Image under the reflection (x, y) -> (x, -y), reoriented counterclockwise.
ConvexPolygon mirror_x(const ConvexPolygon& body);

/// Signed shoelace area (positive for counterclockwise order).
double signed_area(std::span<const Vec2> ring);

double support(const ConvexPolygon& body, UnitDirection u);
double width(const ConvexPolygon& body, UnitDirection u);

struct WidthResult {
  double value;
  UnitDirection direction;
};
/// Minimal width; for polygons it is attained at an edge normal.
WidthResult min_width(const ConvexPolygon& body);
double diameter(const ConvexPolygon& body);

/// Minkowski sum by merging edge vectors in angular order.
ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q);
/// K + (-K).
ConvexPolygon difference_body(const ConvexPolygon& body);

/// Distance from `origin` to the boundary along `u`; origin must be inside.
double ray_exit(const ConvexPolygon& body, Vec2 origin, Vec2 u);

/// tau(K, v) = sup{lambda >= 0 : lambda v in K - K}.
double maximal_chord(const ConvexPolygon& body, UnitDirection v);

/// inf{lambda > 0 : p in lambda K}. Requires the origin strictly inside K.
double minkowski_gauge(const ConvexPolygon& body, Vec2 p);

struct ChordInfimum {
  double value;  // gamma(K, x)
  double angle;  // chord angle in [0, pi) where the infimum was found
  double grid_value;  // best value on the angular grid before refinement
};

struct ChordSweepOptions {
  int grid = 2048;
  int refine_starts = 3;
  double rel_tol = 1e-10;
};

/// gamma(K, x): infimum over chords [a, b] through x of
/// 2 sqrt(|x - a| |x - b|) / |a - b|.
ChordInfimum gamma(const ConvexPolygon& body, const InteriorPoint& x,
                   const ChordSweepOptions& options = {});
/// Chord-balance value of the chord through `x` at `angle`.
double chord_balance(const ConvexPolygon& body, Vec2 x, double angle);

/// Generalized Minkowski functional sqrt(1 - gamma^2).
double alpha(const ConvexPolygon& body, const InteriorPoint& x,
             const ChordSweepOptions& options = {});

/// Sutherland-Hodgman clip of a convex ring by one half-plane.
std::vector<Vec2> clip(std::span<const Vec2> ring, const HalfPlane& h);

/// Intersection of half-planes by the sorted-angle deque method. Returns the
/// counterclockwise vertex ring, or an empty vector if the intersection is
/// empty or unbounded. Parallel constraints keep the tighter offset.
std::vector<Vec2> intersect_halfplanes(std::vector<HalfPlane> planes);

/// Drops repeated and collinear vertices of a ring.
std::vector<Vec2> simplify_ring(std::span<const Vec2> ring, double eps = 1e-12);

/// Andrew's monotone chain; counterclockwise, collinear points removed.
std::vector<Vec2> convex_hull(std::vector<Vec2> points);

}  // namespace bernstein
