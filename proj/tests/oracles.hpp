#pragma once

// Brute-force reference computations used only by the tests. They share no
// code with the library beyond the Vec2 type.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "bernstein/geometry.hpp"

namespace oracle {

using bernstein::Vec2;

inline constexpr double pi = std::numbers::pi;

inline double support(const std::vector<Vec2>& v, Vec2 u) {
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec2& p : v) best = std::max(best, p.x * u.x + p.y * u.y);
  return best;
}

inline double width_sampled_min(const std::vector<Vec2>& v, int samples) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const double t = pi * k / samples;
    const Vec2 u{std::cos(t), std::sin(t)};
    best = std::min(best, support(v, u) + support(v, -u));
  }
  return best;
}

// Longest chord of the polygon parallel to u: for convex polygons it starts at
// a vertex, so shoot from every vertex in both directions along u.
inline double chord_along(const std::vector<Vec2>& v, Vec2 u) {
  const std::size_t n = v.size();
  double best = 0.0;
  for (const Vec2& start : v) {
    for (double s : {1.0, -1.0}) {
      const Vec2 d = u * s;
      // exit distance from start along d
      double t_exit = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = v[i], b = v[(i + 1) % n];
        const Vec2 e = b - a;
        const Vec2 nrm{e.y, -e.x};  // outward for ccw
        const double rate = nrm.x * d.x + nrm.y * d.y;
        if (rate <= 1e-15) continue;
        const double gap = nrm.x * (a.x - start.x) + nrm.y * (a.y - start.y);
        t_exit = std::min(t_exit, std::max(0.0, gap) / rate);
      }
      if (std::isfinite(t_exit)) best = std::max(best, t_exit);
    }
  }
  return best;
}

// Both boundary hits of the line x + t d; returns (t_minus <= 0, t_plus >= 0).
inline std::pair<double, double> line_hits(const std::vector<Vec2>& v, Vec2 x,
                                           Vec2 d) {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = v[i], b = v[(i + 1) % n];
    const Vec2 e = b - a;
    const Vec2 nrm{e.y, -e.x};
    const double rate = nrm.x * d.x + nrm.y * d.y;
    const double gap = nrm.x * (a.x - x.x) + nrm.y * (a.y - x.y);
    if (rate > 0) hi = std::min(hi, gap / rate);
    if (rate < 0) lo = std::max(lo, gap / rate);
  }
  return {lo, hi};
}

// Dense chord sweep for gamma; no refinement.
inline double gamma_sweep(const std::vector<Vec2>& v, Vec2 x, int samples) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const double t = pi * k / samples;
    const auto [lo, hi] = line_hits(v, x, {std::cos(t), std::sin(t)});
    best = std::min(best, 2.0 * std::sqrt(-lo * hi) / (hi - lo));
  }
  return best;
}

// E(Delta, x, y) straight from the closed form with y normalized.
inline double evalue(double x1, double x2, double y1, double y2) {
  const double n = std::hypot(y1, y2);
  y1 /= n;
  y2 /= n;
  const double s = y1 * y1 / x1 + y2 * y2 / x2 +
                   (y1 + y2) * (y1 + y2) / (1.0 - x1 - x2);
  return 1.0 / std::sqrt(s);
}

inline double evalue_min(double x1, double x2, int dirs) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < dirs; ++k) {
    const double t = pi * k / dirs;
    best = std::min(best, evalue(x1, x2, std::cos(t), std::sin(t)));
  }
  return best;
}

inline double shoelace(const std::vector<Vec2>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2 a = v[i], b = v[(i + 1) % v.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return 0.5 * s;
}

inline bool point_in_convex(const std::vector<Vec2>& v, Vec2 p, double tol) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2 a = v[i], b = v[(i + 1) % v.size()];
    const double c = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    if (c < -tol * std::hypot(b.x - a.x, b.y - a.y)) return false;
  }
  return true;
}

// Random convex polygon: hull of points on a jittered ellipse.
inline std::vector<Vec2> random_convex(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double ax = 0.5 + 2.0 * u(rng), ay = 0.5 + 2.0 * u(rng);
  const double cx = 4.0 * u(rng) - 2.0, cy = 4.0 * u(rng) - 2.0;
  std::vector<double> angles(n);
  for (double& a : angles) a = 2.0 * pi * u(rng);
  std::sort(angles.begin(), angles.end());
  std::vector<Vec2> pts;
  for (double a : angles) pts.push_back({cx + ax * std::cos(a), cy + ay * std::sin(a)});
  // points on an ellipse in angular order are already convex position; drop
  // near-duplicates
  std::vector<Vec2> out;
  for (const Vec2& p : pts) {
    if (out.empty() || std::hypot(p.x - out.back().x, p.y - out.back().y) > 1e-3) {
      out.push_back(p);
    }
  }
  if (out.size() > 1 &&
      std::hypot(out.front().x - out.back().x, out.front().y - out.back().y) < 1e-3) {
    out.pop_back();
  }
  return out;
}

}  // namespace oracle
