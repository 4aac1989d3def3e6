#pragma once

// Polynomial-side checks of the directional Bernstein bound on the triangle:
// Bernstein ratios of explicit polynomials, randomized upper-bound trials,
// normalized gradient clouds and one-dimensional sharpness.

#include <cstdint>
#include <vector>

#include "bernstein/polynomial.hpp"
#include "bernstein/simplex.hpp"

namespace bernstein {

/// |<grad p(x), y>| / (n sqrt(|p|^2 - p(x)^2)) with |p| taken from `sup`.
/// Throws DomainError when |p(x)| >= sup.value or n < 1.
double bernstein_ratio(const TotalDegreePolynomial& p, double sup,
                       const SimplexPoint& x, UnitDirection y);
double bernstein_ratio(const TotalDegreePolynomial& p, const SimplexPoint& x,
                       UnitDirection y);

/// Exact sup of |T_n o l| over the triangle: the range of l is the interval
/// spanned by its vertex values.
double transplant_sup_norm(int n, const AffineFunctional& l);

struct VerifyOptions {
  int min_degree = 1;
  int max_degree = 1;
  int trials = 1000;
  std::uint64_t seed = 42;
  double slack = 1e-3;
  double boundary_margin = 1e-3;
  bool inject_witness = true;
};

struct TrialRecord {
  int trial = 0;  // -1 for the injected witness
  int degree = 0;
  std::uint64_t seed = 0;
  double x1 = 0, x2 = 0, phi = 0;
  double sup_norm = 0;
  double ratio = 0;
  double bound = 0;
  double quotient = 0;  // ratio / bound
  bool skipped = false;  // |p(x)| reached the certified norm
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<TrialRecord> trials;
  std::vector<int> violations;  // indices into `trials`
  double max_quotient = 0.0;
  int skipped = 0;
};

/// Per-trial seed derived from (seed, trial) by SplitMix64.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

/// Runs one randomized trial: coefficients uniform in [-1, 1], x uniform in the
/// triangle (rejecting a boundary margin), direction angle uniform.
TrialRecord run_trial(const VerifyOptions& options, int trial);

/// The linear witness 2 x1 + 2 x2 - 1 at the centroid in direction (1,1)/sqrt 2.
TrialRecord witness_trial();

/// Parallel over trials; results do not depend on the schedule.
VerifyReport verify_upper_bound(const VerifyOptions& options);

namespace reference {
VerifyReport verify_upper_bound(const VerifyOptions& options);
}  // namespace reference

struct GradientSample {
  enum class Source { kRandom, kTransplant };
  Vec2 vector;  // grad p(x) / (n sqrt(|p|^2 - p(x)^2))
  int degree;
  Source source;
};

/// The 64 functionals with vertex values in {-1, -1/3, 1/3, 1}^3.
std::vector<AffineFunctional> transplant_catalog();

/// Normalized gradients at x from `trials` random polynomials (degrees cycling
/// through 1..degree) and all catalog transplants of degree 1..degree.
std::vector<GradientSample> empirical_gradient_cloud(const SimplexPoint& x,
                                                     int degree, int trials,
                                                     std::uint64_t seed);

struct SzegoResult {
  double factor;  // best |p'(x)| / sqrt(|p|^2 - p(x)^2) over the family
  double bound;  // n / sqrt((b - x)(x - a))
};

/// One-dimensional Bernstein-Szego check on [a, b] over the Chebyshev family
/// T_n(lambda u + mu), u the affine map of [a, b] onto [-1, 1],
/// |lambda| + |mu| = 1.
SzegoResult bernstein_szego_1d(int n, double x, double a, double b);

}  // namespace bernstein
