#include "bernstein/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "bernstein/errors.hpp"
#include "bernstein/numeric.hpp"
#include "parallel_for.hpp"

namespace bernstein {

double bernstein_ratio(const TotalDegreePolynomial& p, double sup,
                       const SimplexPoint& x, UnitDirection y) {
  if (p.degree() < 1) throw DomainError("Bernstein ratio needs degree >= 1");
  const Vec2 pt = x.planar();
  const double value = p(pt);
  if (!(std::abs(value) < sup)) {
    throw DomainError("|p(x)| reaches the sup norm; ratio undefined");
  }
  const double slope = std::abs(dot(p.gradient(pt), y.vec()));
  return slope / (p.degree() * std::sqrt(sup * sup - value * value));
}

double bernstein_ratio(const TotalDegreePolynomial& p, const SimplexPoint& x,
                       UnitDirection y) {
  return bernstein_ratio(p, sup_norm_simplex(p).value, x, y);
}

double transplant_sup_norm(int n, const AffineFunctional& l) {
  const double v[3] = {l({0, 0}), l({1, 0}), l({0, 1})};
  const double lo = std::min({v[0], v[1], v[2]});
  const double hi = std::max({v[0], v[1], v[2]});
  if (n == 0) return 1.0;
  // |T_n| = 1 exactly at the nodes cos(k pi / n).
  for (int k = 0; k <= n; ++k) {
    const double node = std::cos(k * kPi / n);
    if (node >= lo - 1e-15 && node <= hi + 1e-15) return 1.0;
  }
  return std::max(std::abs(chebyshev(n, lo).value),
                  std::abs(chebyshev(n, hi).value));
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

void check_options(const VerifyOptions& o) {
  if (o.min_degree < 1 || o.max_degree > 8 || o.min_degree > o.max_degree) {
    throw std::invalid_argument("degrees must satisfy 1 <= min <= max <= 8");
  }
  if (o.trials < 1) throw std::invalid_argument("trials must be >= 1");
}

TotalDegreePolynomial random_polynomial(int degree, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<double> c(TotalDegreePolynomial::coeff_count(degree));
  for (double& v : c) v = coeff(rng);
  return TotalDegreePolynomial(degree, std::move(c));
}

// Uniform on the triangle, all barycentric coordinates >= margin.
Vec2 random_interior(std::mt19937_64& rng, double margin) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    double u = unit(rng);
    double v = unit(rng);
    if (u + v > 1.0) {
      u = 1.0 - u;
      v = 1.0 - v;
    }
    if (u >= margin && v >= margin && 1.0 - u - v >= margin) return {u, v};
  }
}

TrialRecord evaluate_trial(const TotalDegreePolynomial& p, double sup, Vec2 pt,
                           double phi) {
  TrialRecord r;
  r.degree = p.degree();
  r.x1 = pt.x;
  r.x2 = pt.y;
  r.phi = phi;
  r.sup_norm = sup;
  const SimplexPoint x = SimplexPoint::make(pt.x, pt.y);
  const UnitDirection y = UnitDirection::from_angle(phi);
  r.bound = baran_derivative(x, y);
  if (!(std::abs(p(pt)) < sup)) {
    r.skipped = true;
    return r;
  }
  r.ratio = bernstein_ratio(p, sup, x, y);
  r.quotient = r.ratio / r.bound;
  return r;
}

VerifyReport summarize(const VerifyOptions& options,
                       std::vector<TrialRecord> trials) {
  VerifyReport report;
  report.options = options;
  report.trials = std::move(trials);
  for (std::size_t i = 0; i < report.trials.size(); ++i) {
    const TrialRecord& t = report.trials[i];
    if (t.skipped) {
      ++report.skipped;
      continue;
    }
    report.max_quotient = std::max(report.max_quotient, t.quotient);
    if (t.ratio > (1.0 + options.slack) * t.bound) {
      report.violations.push_back(static_cast<int>(i));
    }
  }
  return report;
}

std::vector<TrialRecord> allocate(const VerifyOptions& options) {
  return std::vector<TrialRecord>(options.trials + (options.inject_witness ? 1 : 0));
}

}  // namespace

TrialRecord run_trial(const VerifyOptions& options, int trial) {
  const int span = options.max_degree - options.min_degree + 1;
  const int degree = options.min_degree + trial % span;
  const std::uint64_t seed = trial_seed(options.seed, trial);
  std::mt19937_64 rng(seed);
  const TotalDegreePolynomial p = random_polynomial(degree, rng);
  const Vec2 pt = random_interior(rng, options.boundary_margin);
  const double phi = std::uniform_real_distribution<double>(0.0, 2.0 * kPi)(rng);

  const SupNormCertificate cert = sup_norm_simplex(p);
  TrialRecord r = evaluate_trial(p, cert.value, pt, phi);
  r.trial = trial;
  r.seed = seed;
  return r;
}

TrialRecord witness_trial() {
  const TotalDegreePolynomial p(1, {-1.0, 2.0, 2.0});
  const SupNormCertificate cert = sup_norm_simplex(p);
  TrialRecord r = evaluate_trial(p, cert.value, {1.0 / 3.0, 1.0 / 3.0}, kPi / 4.0);
  r.trial = -1;
  return r;
}

VerifyReport verify_upper_bound(const VerifyOptions& options) {
  check_options(options);
  std::vector<TrialRecord> trials = allocate(options);
  const int n = options.trials;
  detail::parallel_for(n, [&](int t) { trials[t] = run_trial(options, t); });
  if (options.inject_witness) trials.back() = witness_trial();
  return summarize(options, std::move(trials));
}

VerifyReport reference::verify_upper_bound(const VerifyOptions& options) {
  check_options(options);
  std::vector<TrialRecord> trials = allocate(options);
  for (int t = 0; t < options.trials; ++t) trials[t] = run_trial(options, t);
  if (options.inject_witness) trials.back() = witness_trial();
  return summarize(options, std::move(trials));
}

std::vector<AffineFunctional> transplant_catalog() {
  const double levels[4] = {-1.0, -1.0 / 3.0, 1.0 / 3.0, 1.0};
  std::vector<AffineFunctional> out;
  out.reserve(64);
  for (double o : levels) {
    for (double a : levels) {
      for (double b : levels) out.push_back({o, {a - o, b - o}});
    }
  }
  return out;
}

std::vector<GradientSample> empirical_gradient_cloud(const SimplexPoint& x,
                                                     int degree, int trials,
                                                     std::uint64_t seed) {
  if (degree < 1 || degree > 8) throw std::invalid_argument("degree must be in [1, 8]");
  const Vec2 pt = x.planar();
  std::vector<GradientSample> samples;

  const auto push = [&](const TotalDegreePolynomial& p, double sup,
                        GradientSample::Source source) {
    const double v = p(pt);
    const double gap = sup * sup - v * v;
    if (!(gap > 1e-14 * sup * sup)) return;
    const Vec2 g = p.gradient(pt) * (1.0 / (p.degree() * std::sqrt(gap)));
    samples.push_back({g, p.degree(), source});
  };

  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(trial_seed(seed, t));
    const TotalDegreePolynomial p = random_polynomial(1 + t % degree, rng);
    push(p, sup_norm_simplex(p).value, GradientSample::Source::kRandom);
  }
  for (const AffineFunctional& l : transplant_catalog()) {
    for (int n = 1; n <= degree; ++n) {
      push(chebyshev_transplant(n, l), transplant_sup_norm(n, l),
           GradientSample::Source::kTransplant);
    }
  }
  return samples;
}

SzegoResult bernstein_szego_1d(int n, double x, double a, double b) {
  if (!(a < x && x < b)) throw DomainError("need a < x < b");
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  const double bound = n / std::sqrt((b - x) * (x - a));
  const double slope = 2.0 / (b - a);
  const double u = (2.0 * x - a - b) / (b - a);

  double best = 0.0;
  const double shifts[] = {0.0, 1e-5, -1e-5, 1e-4, -1e-4, 1e-3, -1e-3};
  for (double mu : shifts) {
    const double lambda = 1.0 - std::abs(mu);
    const ChebyshevValue t = chebyshev(n, lambda * u + mu);
    const double gap = 1.0 - t.value * t.value;
    if (!(gap > 1e-12)) continue;
    best = std::max(best, std::abs(t.derivative) * lambda * slope / std::sqrt(gap));
  }
  return {best, bound};
}

}  // namespace bernstein
