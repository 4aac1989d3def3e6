#pragma once

// Grid sweeps over the interior of the triangle. Each sweep has an OpenMP
// version and a serial version in `reference`; both produce identical output
// in (x-index, y-index, direction-index) order.

#include <vector>

#include "bernstein/simplex.hpp"

namespace bernstein {

/// Grid points x_i = m + (1 - 3m) i / (grid - 1) in both coordinates, kept
/// when 1 - x1 - x2 >= m, so every barycentric coordinate is at least m.
std::vector<SimplexPoint> interior_grid(int grid, double margin);

struct ComparisonRow {
  double x1, x2, phi;
  double inv_e;  // 1 / E(Delta, x, y)
  double kr;  // KR bound
  double baran;  // D_y^+ V_Delta(x)
  double quotient;  // kr / inv_e
};

/// Throws std::logic_error if quotient < 1 - 1e-9 or inv_e and baran differ
/// by more than 1e-12 relative.
ComparisonRow comparison_row(const SimplexPoint& x, double phi);

struct ComparisonSummary {
  std::size_t rows = 0;
  double min_quotient = 0.0;
  double argmin_x1 = 0.0, argmin_x2 = 0.0, argmin_phi = 0.0;
  /// Rows with quotient < 1 + 1e-6.
  std::size_t near_equality = 0;
  /// Distinct direction indices among the near-equality rows.
  std::vector<int> near_equality_dirs;
};

struct ComparisonSweep {
  int grid = 0;
  int dirs = 0;
  double margin = 0.0;
  std::vector<ComparisonRow> rows;
  ComparisonSummary summary;
};

/// Directions phi_k = pi k / dirs, k < dirs.
ComparisonSweep comparison_sweep(int grid, int dirs, double margin);

struct ConstantSweepResult {
  int grid = 0;
  double margin = 0.0;
  double sup_ratio_alpha = 0.0;  // sup w sqrt(1 - alpha) / (2 E)
  double sup_ratio_alpha2 = 0.0;  // sup w sqrt(1 - alpha^2) / (2 E)
  double argmax_alpha_x1 = 0.0, argmax_alpha_x2 = 0.0;
  double argmax_alpha2_x1 = 0.0, argmax_alpha2_x2 = 0.0;
};

ConstantSweepResult constants_sweep(int grid, double margin);

struct KernelAreaSample {
  double x1, x2;
  double numeric;  // kernel_intersect area from the exact bounds
  double closed;  // pi / sqrt(x1 x2 x3)
};

std::vector<KernelAreaSample> kernel_area_sweep(int grid, double margin,
                                                int n_dirs);

namespace reference {
ComparisonSweep comparison_sweep(int grid, int dirs, double margin);
ConstantSweepResult constants_sweep(int grid, double margin);
std::vector<KernelAreaSample> kernel_area_sweep(int grid, double margin,
                                                int n_dirs);
}  // namespace reference

}  // namespace bernstein
