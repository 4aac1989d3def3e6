#include "bernstein/geometry.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "bernstein/errors.hpp"
#include "bernstein/numeric.hpp"

namespace bernstein {

UnitDirection UnitDirection::from_angle(double theta) {
  return UnitDirection(theta, {std::cos(theta), std::sin(theta)});
}

UnitDirection UnitDirection::from_vector(Vec2 v) {
  const double len = norm(v);
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw DomainError("direction must be a finite nonzero vector");
  }
  const Vec2 u = v * (1.0 / len);
  return UnitDirection(std::atan2(u.y, u.x), u);
}

UnitDirection UnitDirection::opposite() const {
  const double t = theta_ > 0.0 ? theta_ - kPi : theta_ + kPi;
  return UnitDirection(t, -vec_);
}

double signed_area(std::span<const Vec2> ring) {
  double twice = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    twice += cross(ring[i], ring[(i + 1) % ring.size()]);
  }
  return 0.5 * twice;
}

ConvexPolygon::ConvexPolygon(std::vector<Vec2> vertices)
    : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  edges_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = vertices_[i];
    const Vec2 e = vertices_[(i + 1) % n] - a;
    const Vec2 normal = Vec2{e.y, -e.x} * (1.0 / norm(e));
    edges_.push_back({normal, dot(normal, a)});
  }
  area_ = signed_area(vertices_);
}

ConvexPolygon ConvexPolygon::make(std::vector<Vec2> vertices) {
  const int n = static_cast<int>(vertices.size());
  if (n < 3) {
    throw GeometryError("polygon needs at least 3 vertices, got " +
                            std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(vertices[i].x) || !std::isfinite(vertices[i].y)) {
      throw GeometryError("vertex " + std::to_string(i) + " is not finite", i);
    }
  }
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (vertices[i] == vertices[j]) {
      throw GeometryError("vertex " + std::to_string(j) +
                              " repeats its predecessor",
                          j);
    }
  }
  double turning = 0.0;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    const int k = (i + 2) % n;
    const Vec2 e1 = vertices[j] - vertices[i];
    const Vec2 e2 = vertices[k] - vertices[j];
    const double c = cross(e1, e2);
    if (c < -1e-14 * norm(e1) * norm(e2)) {
      throw GeometryError("polygon is not convex counterclockwise at vertex " +
                              std::to_string(j),
                          j);
    }
    turning += std::atan2(c, dot(e1, e2));
  }
  if (std::abs(turning - 2.0 * kPi) > 1e-6) {
    throw GeometryError("polygon boundary winds more than once");
  }
  if (!(signed_area(vertices) > 0.0)) {
    throw GeometryError("polygon has zero area");
  }
  return ConvexPolygon(std::move(vertices));
}

double ConvexPolygon::interior_margin(Vec2 p) const {
  double m = std::numeric_limits<double>::infinity();
  for (const HalfPlane& h : edges_) m = std::min(m, h.slack(p));
  return m;
}

InteriorPoint InteriorPoint::make(const ConvexPolygon& body, Vec2 p) {
  if (!(body.interior_margin(p) > kInteriorTolerance)) {
    throw DomainError("point (" + std::to_string(p.x) + ", " +
                      std::to_string(p.y) + ") is not strictly interior");
  }
  return InteriorPoint(p);
}

ConvexPolygon standard_triangle() {
  return ConvexPolygon::make({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}});
}

ConvexPolygon axis_box(double x0, double y0, double x1, double y1) {
  return ConvexPolygon::make({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

ConvexPolygon mirror_x(const ConvexPolygon& body) {
  std::vector<Vec2> v;
  v.reserve(body.size());
  for (const Vec2& p : body.vertices()) v.push_back({p.x, -p.y});
  std::reverse(v.begin(), v.end());
  return ConvexPolygon::make(std::move(v));
}

double support(const ConvexPolygon& body, UnitDirection u) {
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec2& p : body.vertices()) best = std::max(best, dot(u.vec(), p));
  return best;
}

double width(const ConvexPolygon& body, UnitDirection u) {
  return support(body, u) + support(body, u.opposite());
}

WidthResult min_width(const ConvexPolygon& body) {
  std::optional<WidthResult> best;
  for (const HalfPlane& h : body.edges()) {
    const UnitDirection u = UnitDirection::from_vector(h.normal);
    const double w = width(body, u);
    if (!best || w < best->value) best = WidthResult{w, u};
  }
  return *best;
}

double diameter(const ConvexPolygon& body) {
  const auto v = body.vertices();
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      d = std::max(d, norm(v[i] - v[j]));
    }
  }
  return d;
}

namespace {

// Rotates the ring so that it starts at the lowest (then leftmost) vertex.
std::vector<Vec2> from_bottom(std::span<const Vec2> ring) {
  std::vector<Vec2> out(ring.begin(), ring.end());
  const auto lowest = std::min_element(
      out.begin(), out.end(), [](const Vec2& a, const Vec2& b) {
        return a.y < b.y || (a.y == b.y && a.x < b.x);
      });
  std::rotate(out.begin(), lowest, out.end());
  return out;
}

}  // namespace

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q) {
  std::vector<Vec2> a = from_bottom(p.vertices());
  std::vector<Vec2> b = from_bottom(q.vertices());
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  a.push_back(a[0]);
  a.push_back(a[1]);
  b.push_back(b[0]);
  b.push_back(b[1]);

  std::vector<Vec2> sum;
  sum.reserve(n + m);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    sum.push_back(a[i] + b[j]);
    const double c = cross(a[i + 1] - a[i], b[j + 1] - b[j]);
    if (c >= 0.0 && i < n) ++i;
    if (c <= 0.0 && j < m) ++j;
  }
  return ConvexPolygon::make(simplify_ring(sum));
}

ConvexPolygon difference_body(const ConvexPolygon& body) {
  std::vector<Vec2> neg;
  neg.reserve(body.size());
  for (const Vec2& v : body.vertices()) neg.push_back(-v);
  return minkowski_sum(body, ConvexPolygon::make(std::move(neg)));
}

double ray_exit(const ConvexPolygon& body, Vec2 origin, Vec2 u) {
  double t = std::numeric_limits<double>::infinity();
  for (const HalfPlane& h : body.edges()) {
    const double rate = dot(h.normal, u);
    if (rate > 0.0) t = std::min(t, h.slack(origin) / rate);
  }
  return t;
}

double maximal_chord(const ConvexPolygon& body, UnitDirection v) {
  return ray_exit(difference_body(body), {0.0, 0.0}, v.vec());
}

double minkowski_gauge(const ConvexPolygon& body, Vec2 p) {
  if (!(body.interior_margin({0.0, 0.0}) > kInteriorTolerance)) {
    throw DomainError("Minkowski gauge needs the origin strictly inside");
  }
  double g = 0.0;
  for (const HalfPlane& h : body.edges()) {
    g = std::max(g, dot(h.normal, p) / h.offset);
  }
  return g;
}

double chord_balance(const ConvexPolygon& body, Vec2 x, double angle) {
  const Vec2 u{std::cos(angle), std::sin(angle)};
  const double forward = ray_exit(body, x, u);
  const double backward = ray_exit(body, x, -u);
  return 2.0 * std::sqrt(forward * backward) / (forward + backward);
}

ChordInfimum gamma(const ConvexPolygon& body, const InteriorPoint& x,
                   const ChordSweepOptions& options) {
  const Vec2 p = InteriorPoint::make(body, x.point()).point();
  const int grid = std::max(options.grid, 4);
  const double step = kPi / grid;

  std::vector<double> values(grid);
  for (int k = 0; k < grid; ++k) values[k] = chord_balance(body, p, k * step);

  std::vector<int> order(grid);
  std::iota(order.begin(), order.end(), 0);
  const int starts = std::clamp(options.refine_starts, 1, grid);
  std::partial_sort(order.begin(), order.begin() + starts, order.end(),
                    [&](int a, int b) {
                      return values[a] < values[b] ||
                             (values[a] == values[b] && a < b);
                    });

  ChordInfimum result{values[order[0]], order[0] * step, values[order[0]]};
  const auto objective = [&](double angle) {
    return chord_balance(body, p, angle);
  };
  for (int s = 0; s < starts; ++s) {
    const double center = order[s] * step;
    const ScalarMinimum m = golden_section_min(objective, center - step,
                                               center + step, options.rel_tol);
    if (m.value < result.value) {
      result.value = m.value;
      result.angle = m.arg;
    }
  }
  result.angle = std::fmod(result.angle, kPi);
  if (result.angle < 0.0) result.angle += kPi;
  return result;
}

double alpha(const ConvexPolygon& body, const InteriorPoint& x,
             const ChordSweepOptions& options) {
  const double g = gamma(body, x, options).value;
  return std::sqrt(std::max(0.0, 1.0 - g * g));
}

std::vector<Vec2> clip(std::span<const Vec2> ring, const HalfPlane& h) {
  std::vector<Vec2> out;
  const std::size_t n = ring.size();
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 cur = ring[i];
    const Vec2 next = ring[(i + 1) % n];
    const double sc = h.slack(cur);
    const double sn = h.slack(next);
    if (sc >= 0.0) out.push_back(cur);
    if ((sc >= 0.0) != (sn >= 0.0)) {
      const double t = sc / (sc - sn);
      out.push_back(cur + (next - cur) * t);
    }
  }
  return out;
}

namespace {

Vec2 boundary_intersection(const HalfPlane& a, const HalfPlane& b) {
  const double det = cross(a.normal, b.normal);
  return {(a.offset * b.normal.y - b.offset * a.normal.y) / det,
          (a.normal.x * b.offset - b.normal.x * a.offset) / det};
}

}  // namespace

std::vector<Vec2> intersect_halfplanes(std::vector<HalfPlane> planes) {
  if (planes.size() < 3) return {};
  struct Keyed {
    double angle;
    HalfPlane plane;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(planes.size());
  for (const HalfPlane& h : planes) {
    keyed.push_back({std::atan2(h.normal.y, h.normal.x), h});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return a.angle < b.angle ||
           (a.angle == b.angle && a.plane.offset < b.plane.offset);
  });

  constexpr double kParallel = 1e-12;
  std::vector<Keyed> unique;
  unique.reserve(keyed.size());
  for (const Keyed& k : keyed) {
    if (!unique.empty() && k.angle - unique.back().angle < kParallel) {
      if (k.plane.offset < unique.back().plane.offset) unique.back() = k;
      continue;
    }
    unique.push_back(k);
  }
  if (unique.size() >= 2 &&
      unique.back().angle - unique.front().angle > 2.0 * kPi - kParallel) {
    if (unique.back().plane.offset < unique.front().plane.offset) {
      unique.front() = unique.back();
    }
    unique.pop_back();
  }
  if (unique.size() < 3) return {};
  for (std::size_t i = 0; i < unique.size(); ++i) {
    const double next = i + 1 < unique.size()
                            ? unique[i + 1].angle
                            : unique.front().angle + 2.0 * kPi;
    if (next - unique[i].angle >= kPi - kParallel) return {};  // unbounded
  }

  double scale = 1.0;
  for (const Keyed& k : unique) scale = std::max(scale, std::abs(k.plane.offset));
  const double eps = 1e-12 * scale;
  const auto outside = [eps](const HalfPlane& h, Vec2 p) {
    return h.slack(p) < -eps;
  };

  std::deque<HalfPlane> dq;
  for (const Keyed& k : unique) {
    const HalfPlane& h = k.plane;
    while (dq.size() >= 2 &&
           outside(h, boundary_intersection(dq[dq.size() - 2], dq.back()))) {
      dq.pop_back();
    }
    while (dq.size() >= 2 &&
           outside(h, boundary_intersection(dq[0], dq[1]))) {
      dq.pop_front();
    }
    if (!dq.empty() && cross(dq.back().normal, h.normal) <= 0.0) {
      // Consecutive normals turned by pi or more: empty intersection.
      return {};
    }
    dq.push_back(h);
  }
  while (dq.size() >= 3 &&
         outside(dq.front(),
                 boundary_intersection(dq[dq.size() - 2], dq.back()))) {
    dq.pop_back();
  }
  while (dq.size() >= 3 &&
         outside(dq.back(), boundary_intersection(dq[0], dq[1]))) {
    dq.pop_front();
  }
  if (dq.size() < 3) return {};

  std::vector<Vec2> ring;
  ring.reserve(dq.size());
  for (std::size_t i = 0; i < dq.size(); ++i) {
    ring.push_back(boundary_intersection(dq[i], dq[(i + 1) % dq.size()]));
  }
  if (!(signed_area(ring) > 0.0)) return {};
  return ring;
}

std::vector<Vec2> simplify_ring(std::span<const Vec2> ring, double eps) {
  const auto same = [eps](Vec2 a, Vec2 b) {
    return norm(a - b) <= eps * std::max({1.0, norm(a), norm(b)});
  };
  // Compare against the last kept point, so a cluster collapses to one
  // representative instead of vanishing.
  std::vector<Vec2> out;
  out.reserve(ring.size());
  for (const Vec2& p : ring) {
    if (out.empty() || !same(out.back(), p)) out.push_back(p);
  }
  while (out.size() > 1 && same(out.front(), out.back())) out.pop_back();

  const auto straight = [eps](Vec2 a, Vec2 b, Vec2 c) {
    const Vec2 u = b - a;
    const Vec2 v = c - b;
    return std::abs(cross(u, v)) <= eps * norm(u) * norm(v) && dot(u, v) > 0.0;
  };
  bool changed = true;
  while (changed && out.size() >= 3) {
    changed = false;
    std::vector<Vec2> kept;
    kept.reserve(out.size());
    for (const Vec2& p : out) {
      while (kept.size() >= 2 && straight(kept[kept.size() - 2], kept.back(), p)) {
        kept.pop_back();
        changed = true;
      }
      kept.push_back(p);
    }
    while (kept.size() >= 3 && straight(kept[kept.size() - 2], kept.back(), kept[0])) {
      kept.pop_back();
      changed = true;
    }
    while (kept.size() >= 3 && straight(kept.back(), kept[0], kept[1])) {
      kept.erase(kept.begin());
      changed = true;
    }
    out.swap(kept);
  }
  return out;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> points) {
  std::sort(points.begin(), points.end(), [](const Vec2& a, const Vec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;

  std::vector<Vec2> hull(2 * points.size());
  std::size_t k = 0;
  for (const Vec2& p : points) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) {
      --k;
    }
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
    while (k >= lower &&
           cross(hull[k - 1] - hull[k - 2], *it - hull[k - 2]) <= 0.0) {
      --k;
    }
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace bernstein
