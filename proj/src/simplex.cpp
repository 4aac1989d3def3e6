#include "bernstein/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bernstein/errors.hpp"
#include "bernstein/numeric.hpp"

namespace bernstein {

SimplexPoint SimplexPoint::make(std::vector<double> coords) {
  if (coords.empty()) throw DomainError("simplex point needs d >= 1");
  double sum = 0.0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!(coords[i] > kInteriorTolerance)) {
      throw DomainError("coordinate " + std::to_string(i) + " = " +
                        std::to_string(coords[i]) +
                        " is not strictly inside the simplex");
    }
    sum += coords[i];
  }
  const double slack = 1.0 - sum;
  if (!(slack > kInteriorTolerance)) {
    throw DomainError("coordinates sum to " + std::to_string(sum) +
                      ", not strictly below 1");
  }
  return SimplexPoint(std::move(coords), slack);
}

Vec2 SimplexPoint::planar() const {
  if (dim() != kPlanar) throw DomainError("operation is defined for d = 2 only");
  return {coords_[0], coords_[1]};
}

SimplexPoint centroid() { return SimplexPoint::make(1.0 / 3.0, 1.0 / 3.0); }

namespace {

// sum y_i^2 / x_i + (sum y_i)^2 / (1 - sum x_i) for unit y.
double quadratic_weight(const SimplexPoint& x, std::span<const double> y) {
  if (y.size() != x.dim()) throw DomainError("direction dimension mismatch");
  double len2 = 0.0;
  for (double v : y) len2 += v * v;
  if (!(len2 > 0.0) || !std::isfinite(len2)) {
    throw DomainError("direction must be a finite nonzero vector");
  }
  double q = 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    q += y[i] * y[i] / x[i];
    s += y[i];
  }
  q += s * s / x.slack();
  return q / len2;
}

void require_planar(const SimplexPoint& x) { (void)x.planar(); }

}  // namespace

double ellipse_constant_dir(const SimplexPoint& x, std::span<const double> y) {
  return 1.0 / std::sqrt(quadratic_weight(x, y));
}

double ellipse_constant_dir(const SimplexPoint& x, UnitDirection y) {
  const double v[2] = {y.vec().x, y.vec().y};
  return ellipse_constant_dir(x, v);
}

double ellipse_discriminant(const SimplexPoint& x) {
  require_planar(x);
  const double a = x[0] * (1.0 - x[0]);
  const double b = x[1] * (1.0 - x[1]);
  return std::sqrt((a - b) * (a - b) + 4.0 * x[0] * x[0] * x[1] * x[1]);
}

double ellipse_constant(const SimplexPoint& x) {
  require_planar(x);
  const double a = x[0] * (1.0 - x[0]);
  const double b = x[1] * (1.0 - x[1]);
  const double num = 2.0 * x[0] * x[1] * x.slack();
  return std::sqrt(num / (a + b + ellipse_discriminant(x)));
}

double alpha_simplex(const SimplexPoint& x) {
  require_planar(x);
  return 1.0 - 2.0 * std::min({x[0], x[1], x.slack()});
}

double tau_simplex(double phi) {
  double t = std::fmod(phi, kPi);
  if (t < 0.0) t += kPi;
  const double c = std::cos(t);
  const double s = std::sin(t);
  if (t <= kPi / 2.0) return 1.0 / (c + s);
  if (t <= 3.0 * kPi / 4.0) return 1.0 / s;
  return -1.0 / c;
}

double baran_derivative(const SimplexPoint& x, std::span<const double> y) {
  return std::sqrt(quadratic_weight(x, y));
}

double baran_derivative(const SimplexPoint& x, UnitDirection y) {
  const double v[2] = {y.vec().x, y.vec().y};
  return baran_derivative(x, v);
}

std::complex<double> joukowski_inverse(std::complex<double> w) {
  std::complex<double> h = w + std::sqrt(w - 1.0) * std::sqrt(w + 1.0);
  if (std::abs(h) < 1.0) h = 1.0 / h;
  return h;
}

namespace {

// |z| - Re z without cancellation.
double modulus_excess(std::complex<double> z) {
  const double m = std::abs(z);
  if (z.real() > 0.0) return z.imag() * z.imag() / (m + z.real());
  return m - z.real();
}

}  // namespace

double siciak_extremal(std::span<const std::complex<double>> z) {
  // The argument w = sum |z_i| + |1 - sum z_i| is real and >= 1; write it as
  // 1 + excess with excess = sum (|zeta| - Re zeta) over the d + 1 terms.
  std::complex<double> total = 0.0;
  double excess = 0.0;
  for (const auto& zi : z) {
    if (!std::isfinite(zi.real()) || !std::isfinite(zi.imag())) {
      throw DomainError("siciak_extremal needs finite arguments");
    }
    excess += modulus_excess(zi);
    total += zi;
  }
  excess += modulus_excess(1.0 - total);
  if (excess <= 0.0) return 0.0;
  // log |h(1 + e)| = acosh(1 + e).
  return std::log1p(excess + std::sqrt(excess * (excess + 2.0)));
}

double equilibrium_density(const SimplexPoint& x) {
  require_planar(x);
  return 2.0 * kPi / std::sqrt(x[0] * x[1] * x.slack());
}

double kr_bound_dir(const SimplexPoint& x, double phi) {
  return 2.0 / (tau_simplex(phi) * std::sqrt(1.0 - alpha_simplex(x)));
}

}  // namespace bernstein
