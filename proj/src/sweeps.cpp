#include "bernstein/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "bernstein/geometry.hpp"
#include "bernstein/kernel.hpp"
#include "bernstein/numeric.hpp"
#include "parallel_for.hpp"

namespace bernstein {

std::vector<SimplexPoint> interior_grid(int grid, double margin) {
  if (grid < 2) throw std::invalid_argument("grid must be >= 2");
  if (!(margin > 0.0 && margin < 1.0 / 3.0)) {
    throw std::invalid_argument("margin must lie in (0, 1/3)");
  }
  std::vector<SimplexPoint> points;
  const double span = 1.0 - 3.0 * margin;
  for (int i = 0; i < grid; ++i) {
    const double x1 = margin + span * i / (grid - 1);
    for (int j = 0; j < grid; ++j) {
      const double x2 = margin + span * j / (grid - 1);
      if (1.0 - x1 - x2 < margin - 1e-15) continue;
      points.push_back(SimplexPoint::make(x1, x2));
    }
  }
  return points;
}

ComparisonRow comparison_row(const SimplexPoint& x, double phi) {
  const UnitDirection y = UnitDirection::from_angle(phi);
  ComparisonRow row;
  row.x1 = x[0];
  row.x2 = x[1];
  row.phi = phi;
  row.inv_e = 1.0 / ellipse_constant_dir(x, y);
  row.kr = kr_bound_dir(x, phi);
  row.baran = baran_derivative(x, y);
  row.quotient = row.kr / row.inv_e;
  if (row.quotient < 1.0 - 1e-9) {
    throw std::logic_error("KR bound below 1/E at x = (" +
                           std::to_string(row.x1) + ", " + std::to_string(row.x2) +
                           "), phi = " + std::to_string(phi));
  }
  if (std::abs(row.inv_e - row.baran) > 1e-12 * std::max(1.0, row.baran)) {
    throw std::logic_error("1/E and D_y^+ V differ at x = (" +
                           std::to_string(row.x1) + ", " +
                           std::to_string(row.x2) + ")");
  }
  return row;
}

namespace {

void check_compare_args(int grid, int dirs) {
  if (grid < 4) throw std::invalid_argument("comparison grid must be >= 4");
  if (dirs < 1) throw std::invalid_argument("dirs must be >= 1");
}

ComparisonSummary summarize(const std::vector<ComparisonRow>& rows, int dirs) {
  ComparisonSummary s;
  s.rows = rows.size();
  if (rows.empty()) return s;
  std::size_t arg = 0;
  std::set<int> near;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].quotient < rows[arg].quotient) arg = i;
    if (rows[i].quotient < 1.0 + 1e-6) {
      ++s.near_equality;
      near.insert(static_cast<int>(i % dirs));
    }
  }
  s.min_quotient = rows[arg].quotient;
  s.argmin_x1 = rows[arg].x1;
  s.argmin_x2 = rows[arg].x2;
  s.argmin_phi = rows[arg].phi;
  s.near_equality_dirs.assign(near.begin(), near.end());
  return s;
}

struct PointRatios {
  double alpha1;
  double alpha2;
};

PointRatios constant_ratios(const SimplexPoint& x, double min_width) {
  const double e = ellipse_constant(x);
  const double a = alpha_simplex(x);
  return {min_width * std::sqrt(1.0 - a) / (2.0 * e),
          min_width * std::sqrt(1.0 - a * a) / (2.0 * e)};
}

ConstantSweepResult reduce_constants(int grid, double margin,
                                     const std::vector<SimplexPoint>& points,
                                     const std::vector<PointRatios>& ratios) {
  ConstantSweepResult r;
  r.grid = grid;
  r.margin = margin;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (ratios[i].alpha1 > r.sup_ratio_alpha) {
      r.sup_ratio_alpha = ratios[i].alpha1;
      r.argmax_alpha_x1 = points[i][0];
      r.argmax_alpha_x2 = points[i][1];
    }
    if (ratios[i].alpha2 > r.sup_ratio_alpha2) {
      r.sup_ratio_alpha2 = ratios[i].alpha2;
      r.argmax_alpha2_x1 = points[i][0];
      r.argmax_alpha2_x2 = points[i][1];
    }
  }
  return r;
}

void check_constants_args(int grid) {
  if (grid < 50) throw std::invalid_argument("constants grid must be >= 50");
}

KernelAreaSample kernel_area_at(const SimplexPoint& x, int n_dirs) {
  return {x[0], x[1], kernel_intersect(baran_table(x, n_dirs)).area,
          kernel_area_closed(x)};
}

}  // namespace

ComparisonSweep comparison_sweep(int grid, int dirs, double margin) {
  check_compare_args(grid, dirs);
  const std::vector<SimplexPoint> points = interior_grid(grid, margin);
  std::vector<ComparisonRow> rows(points.size() * dirs);
  const int n = static_cast<int>(points.size());
  detail::parallel_for(n, [&](int i) {
    for (int k = 0; k < dirs; ++k) {
      rows[static_cast<std::size_t>(i) * dirs + k] =
          comparison_row(points[i], kPi * k / dirs);
    }
  });
  ComparisonSummary summary = summarize(rows, dirs);
  return {grid, dirs, margin, std::move(rows), std::move(summary)};
}

ComparisonSweep reference::comparison_sweep(int grid, int dirs, double margin) {
  check_compare_args(grid, dirs);
  std::vector<ComparisonRow> rows;
  for (const SimplexPoint& x : interior_grid(grid, margin)) {
    for (int k = 0; k < dirs; ++k) rows.push_back(comparison_row(x, kPi * k / dirs));
  }
  ComparisonSummary summary = summarize(rows, dirs);
  return {grid, dirs, margin, std::move(rows), std::move(summary)};
}

ConstantSweepResult constants_sweep(int grid, double margin) {
  check_constants_args(grid);
  const double w = min_width(standard_triangle()).value;
  const std::vector<SimplexPoint> points = interior_grid(grid, margin);
  std::vector<PointRatios> ratios(points.size());
  const int n = static_cast<int>(points.size());
  detail::parallel_for(n, [&](int i) { ratios[i] = constant_ratios(points[i], w); });
  return reduce_constants(grid, margin, points, ratios);
}

ConstantSweepResult reference::constants_sweep(int grid, double margin) {
  check_constants_args(grid);
  const double w = min_width(standard_triangle()).value;
  const std::vector<SimplexPoint> points = interior_grid(grid, margin);
  std::vector<PointRatios> ratios;
  ratios.reserve(points.size());
  for (const SimplexPoint& x : points) ratios.push_back(constant_ratios(x, w));
  return reduce_constants(grid, margin, points, ratios);
}

std::vector<KernelAreaSample> kernel_area_sweep(int grid, double margin,
                                                int n_dirs) {
  const std::vector<SimplexPoint> points = interior_grid(grid, margin);
  std::vector<KernelAreaSample> out(points.size());
  const int n = static_cast<int>(points.size());
  detail::parallel_for(n, [&](int i) { out[i] = kernel_area_at(points[i], n_dirs); });
  return out;
}

std::vector<KernelAreaSample> reference::kernel_area_sweep(int grid,
                                                           double margin,
                                                           int n_dirs) {
  std::vector<KernelAreaSample> out;
  for (const SimplexPoint& x : interior_grid(grid, margin)) {
    out.push_back(kernel_area_at(x, n_dirs));
  }
  return out;
}

}  // namespace bernstein
