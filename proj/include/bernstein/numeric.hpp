#pragma once

#include <functional>
#include <numbers>

namespace bernstein {

inline constexpr double kPi = std::numbers::pi;

struct ScalarMinimum {
  double arg;
  double value;
};

/// Golden-section search for a minimum of `f` on [lo, hi]. Stops when the
/// bracket is shorter than `rel_tol * max(1, |lo|, |hi|)`. The returned value
/// is the best evaluation seen, including both end points.
ScalarMinimum golden_section_min(const std::function<double(double)>& f,
                                 double lo, double hi, double rel_tol = 1e-10);

/// Adaptive Simpson quadrature of `f` on [a, b] to absolute tolerance `tol`.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth = 48);

}  // namespace bernstein
