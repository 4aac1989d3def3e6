#include "bernstein/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bernstein/errors.hpp"
#include "bernstein/numeric.hpp"

namespace bernstein {

DirectionalBoundTable DirectionalBoundTable::sample(
    int n, const std::function<double(double)>& bound) {
  if (n < 16) throw std::invalid_argument("bound table needs N >= 16");
  DirectionalBoundTable t;
  t.thetas.resize(n);
  t.r.resize(n);
  for (int k = 0; k < n; ++k) {
    t.thetas[k] = kPi * k / n;
    t.r[k] = bound(t.thetas[k]);
    if (!(t.r[k] > 0.0) || !std::isfinite(t.r[k])) {
      throw DomainError("directional bound must be positive and finite");
    }
  }
  return t;
}

DirectionalBoundTable kr_table(const SimplexPoint& x, int n) {
  return DirectionalBoundTable::sample(
      n, [&](double theta) { return kr_bound_dir(x, theta); });
}

DirectionalBoundTable baran_table(const SimplexPoint& x, int n) {
  return DirectionalBoundTable::sample(n, [&](double theta) {
    return baran_derivative(x, UnitDirection::from_angle(theta));
  });
}

namespace {

void check_table(const DirectionalBoundTable& table) {
  if (table.size() < 16 || table.r.size() != table.thetas.size()) {
    throw std::invalid_argument("bound table needs N >= 16 matched entries");
  }
  for (double r : table.r) {
    if (!(r > 0.0)) throw DomainError("directional bound must be positive");
  }
}

std::vector<HalfPlane> slab_planes(const DirectionalBoundTable& table) {
  std::vector<HalfPlane> planes;
  planes.reserve(2 * table.size());
  for (std::size_t k = 0; k < table.size(); ++k) {
    const Vec2 y{std::cos(table.thetas[k]), std::sin(table.thetas[k])};
    planes.push_back({y, table.r[k]});
    planes.push_back({-y, table.r[k]});
  }
  return planes;
}

double bounding_half_width(const DirectionalBoundTable& table) {
  return 2.0 * *std::max_element(table.r.begin(), table.r.end());
}

KernelRegion finish(std::vector<Vec2> ring, int n_halfplanes) {
  ConvexPolygon polygon = ConvexPolygon::make(simplify_ring(ring));
  const double area = polygon.area();
  return {std::move(polygon), n_halfplanes, area};
}

}  // namespace

KernelRegion kernel_intersect(const DirectionalBoundTable& table) {
  check_table(table);
  std::vector<HalfPlane> planes = slab_planes(table);
  const int n_slab = static_cast<int>(planes.size());
  const double box = bounding_half_width(table);
  planes.push_back({{1.0, 0.0}, box});
  planes.push_back({{0.0, 1.0}, box});
  planes.push_back({{-1.0, 0.0}, box});
  planes.push_back({{0.0, -1.0}, box});
  return finish(intersect_halfplanes(std::move(planes)), n_slab);
}

KernelRegion reference::kernel_intersect(const DirectionalBoundTable& table) {
  check_table(table);
  const double box = bounding_half_width(table);
  std::vector<Vec2> ring = {{-box, -box}, {box, -box}, {box, box}, {-box, box}};
  const std::vector<HalfPlane> planes = slab_planes(table);
  for (const HalfPlane& h : planes) ring = clip(ring, h);
  return finish(std::move(ring), static_cast<int>(planes.size()));
}

bool is_origin_symmetric(const ConvexPolygon& polygon, double tol) {
  const auto v = polygon.vertices();
  for (const Vec2& p : v) {
    const bool matched = std::any_of(v.begin(), v.end(), [&](const Vec2& q) {
      return norm(q + p) <= tol;
    });
    if (!matched) return false;
  }
  return true;
}

double polar_area(const std::function<double(double)>& r,
                  std::span<const double> breakpoints, double rel_tol) {
  std::vector<double> cuts = {0.0, kPi};
  for (double b : breakpoints) {
    if (b > 0.0 && b < kPi) cuts.push_back(b);
  }
  std::sort(cuts.begin(), cuts.end());
  const auto r2 = [&](double t) {
    const double v = r(t);
    return v * v;
  };

  // Coarse pass fixes the scale for the absolute tolerance.
  double coarse = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double m = 0.5 * (cuts[i] + cuts[i + 1]);
    coarse += (cuts[i + 1] - cuts[i]) * r2(m);
  }
  const double tol = rel_tol * std::max(coarse, 1e-300);

  double area = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double share = (cuts[i + 1] - cuts[i]) / kPi;
    area += adaptive_simpson(r2, cuts[i], cuts[i + 1], tol * share);
  }
  return area;
}

double cloud_area(const SimplexPoint& x) {
  const double kinks[] = {kPi / 2.0, 3.0 * kPi / 4.0};
  return polar_area([&](double t) { return kr_bound_dir(x, t); }, kinks, 1e-12);
}

std::array<Disk, 3> kr_cloud_disks(const SimplexPoint& x) {
  // r(theta) = s / tau(theta) with s = 2 / sqrt(1 - alpha). The branches
  // s (cos + sin), s sin and -s cos are polar forms of circles through 0.
  const double s = 2.0 / std::sqrt(1.0 - alpha_simplex(x));
  return {Disk{{s / 2.0, s / 2.0}, s / std::sqrt(2.0)},
          Disk{{0.0, s / 2.0}, s / 2.0}, Disk{{-s / 2.0, 0.0}, s / 2.0}};
}

namespace {

double section_length(std::span<const Disk> disks, double y) {
  struct Interval {
    double lo, hi;
  };
  std::vector<Interval> parts;
  parts.reserve(disks.size());
  for (const Disk& d : disks) {
    const double dy = y - d.center.y;
    const double h2 = d.radius * d.radius - dy * dy;
    if (h2 <= 0.0) continue;
    const double h = std::sqrt(h2);
    parts.push_back({d.center.x - h, d.center.x + h});
  }
  std::sort(parts.begin(), parts.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  double length = 0.0;
  double cur_lo = 0.0;
  double cur_hi = -std::numeric_limits<double>::infinity();
  for (const Interval& p : parts) {
    if (p.lo > cur_hi) {
      if (std::isfinite(cur_hi)) length += cur_hi - cur_lo;
      cur_lo = p.lo;
      cur_hi = p.hi;
    } else {
      cur_hi = std::max(cur_hi, p.hi);
    }
  }
  if (std::isfinite(cur_hi)) length += cur_hi - cur_lo;
  return length;
}

}  // namespace

double disk_union_area_above(std::span<const Disk> disks, double y_floor,
                             double tol) {
  if (disks.empty()) return 0.0;
  std::vector<double> cuts = {y_floor};
  double top = y_floor;
  for (const Disk& d : disks) {
    top = std::max(top, d.center.y + d.radius);
    cuts.push_back(d.center.y + d.radius);
    cuts.push_back(d.center.y - d.radius);
    cuts.push_back(d.center.y);
  }
  // Heights where two boundary circles cross are kinks of the section length.
  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      const Vec2 delta = disks[j].center - disks[i].center;
      const double dist = norm(delta);
      const double ri = disks[i].radius;
      const double rj = disks[j].radius;
      if (dist == 0.0 || dist > ri + rj || dist < std::abs(ri - rj)) continue;
      const double along = (dist * dist + ri * ri - rj * rj) / (2.0 * dist);
      const double off = std::sqrt(std::max(0.0, ri * ri - along * along));
      const Vec2 unit = delta * (1.0 / dist);
      const Vec2 mid = disks[i].center + unit * along;
      cuts.push_back(mid.y + unit.x * off);
      cuts.push_back(mid.y - unit.x * off);
    }
  }
  std::erase_if(cuts, [&](double c) { return c < y_floor || c > top; });
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const auto f = [&](double y) { return section_length(disks, y); };
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    // Section lengths have square-root endpoints; y = lo + w s^2 on the lower
    // half and y = hi - w s^2 on the upper half make the integrands smooth.
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    const double mid = 0.5 * (lo + hi);
    const double share = tol / static_cast<double>(cuts.size());
    area += adaptive_simpson(
        [&](double s) {
          const double w = mid - lo;
          return f(lo + w * s * s) * 2.0 * w * s;
        },
        0.0, 1.0, 0.5 * share);
    area += adaptive_simpson(
        [&](double s) {
          const double w = hi - mid;
          return f(hi - w * s * s) * 2.0 * w * s;
        },
        0.0, 1.0, 0.5 * share);
  }
  return area;
}

double KernelEllipse::area() const { return kPi * minor * major; }

KernelEllipse kernel_ellipse_closed_form(const SimplexPoint& x) {
  const Vec2 p = x.planar();
  KernelEllipse e{};
  e.a = p.x * (1.0 - p.x);
  e.b = p.y * (1.0 - p.y);
  e.c = 2.0 * p.x * p.y;
  e.discriminant = ellipse_discriminant(x);
  e.rotation = e.a == e.b ? kPi / 4.0 : 0.5 * std::atan(e.c / (e.a - e.b));
  const double sum = e.a + e.b;
  // (a + b)^2 - D^2 = 4 x1 x2 x3, so a + b - D avoids cancellation this way.
  const double gap = 4.0 * p.x * p.y * x.slack() / (sum + e.discriminant);
  e.minor = std::sqrt(2.0 / (sum + e.discriminant));
  e.major = std::sqrt(2.0 / gap);
  return e;
}

double kernel_area_closed(const SimplexPoint& x) {
  const Vec2 p = x.planar();
  return kPi / std::sqrt(p.x * p.y * x.slack());
}

double kernel_max_norm(const SimplexPoint& x) {
  return kernel_ellipse_closed_form(x).major;
}

}  // namespace bernstein
