#pragma once

// Serialization of sweep results: CSV with 12 significant digits, JSON objects
// with "meta" and "rows" at full double precision, and diagnostic SVG.

#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "bernstein/geometry.hpp"
#include "bernstein/kernel.hpp"
#include "bernstein/sweeps.hpp"
#include "bernstein/verify.hpp"
#include "json.hpp"

namespace bernstein {

inline constexpr int kCsvDigits = 12;

void write_comparison_csv(std::ostream& out, const ComparisonSweep& sweep);
nlohmann::json comparison_json(const ComparisonSweep& sweep);

nlohmann::json verify_json(const VerifyReport& report);

void write_region_csv(std::ostream& out, std::span<const Vec2> ring);

/// Samples the boundary of the kernel ellipse at `n` points.
std::vector<Vec2> ellipse_outline(const KernelEllipse& e, int n = 256);
/// Boundary of the polar region {t y(theta) : |t| <= r(theta)}.
std::vector<Vec2> polar_outline(const DirectionalBoundTable& table);

struct SvgLayer {
  std::vector<Vec2> ring;
  const char* stroke;
};

/// One closed path per layer; the view box fits all layers.
void write_svg(std::ostream& out, std::span<const SvgLayer> layers);

}  // namespace bernstein
