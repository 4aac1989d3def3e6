#include "bernstein/polynomial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bernstein/errors.hpp"
#include "bernstein/numeric.hpp"

namespace bernstein {

TotalDegreePolynomial::TotalDegreePolynomial(int degree)
    : TotalDegreePolynomial(degree,
                            std::vector<double>(coeff_count(std::max(degree, 0)))) {}

TotalDegreePolynomial::TotalDegreePolynomial(int degree,
                                             std::vector<double> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  if (coeffs_.size() != coeff_count(degree)) {
    throw std::invalid_argument("coefficient array must have (n+1)(n+2)/2 entries");
  }
}

std::size_t TotalDegreePolynomial::index(int i, int j) const {
  return static_cast<std::size_t>(i * (degree_ + 1) - i * (i - 1) / 2 + j);
}

namespace {

// Partial derivatives up to second order in one pass: the polynomial is
// sum_i x1^i q_i(x2), each q_i evaluated by Horner together with q_i', q_i''.
struct Jet {
  double v = 0, d1 = 0, d2 = 0, d11 = 0, d12 = 0, d22 = 0;
};

Jet evaluate(const TotalDegreePolynomial& p, Vec2 pt) {
  const int n = p.degree();
  Jet out;
  // Outer Horner in x1 over (q, q', q'').
  double r0 = 0, r0d = 0, r0dd = 0;  // sum x1^i q_i and its x1-derivatives
  double r1 = 0, r1d = 0;  // sum x1^i q_i' and x1-derivative
  double r2 = 0;  // sum x1^i q_i''
  for (int i = n; i >= 0; --i) {
    double q = 0, dq = 0, ddq = 0;
    for (int j = n - i; j >= 0; --j) {
      ddq = ddq * pt.y + 2.0 * dq;
      dq = dq * pt.y + q;
      q = q * pt.y + p.coeff(i, j);
    }
    r0dd = r0dd * pt.x + 2.0 * r0d;
    r0d = r0d * pt.x + r0;
    r0 = r0 * pt.x + q;
    r1d = r1d * pt.x + r1;
    r1 = r1 * pt.x + dq;
    r2 = r2 * pt.x + ddq;
  }
  out.v = r0;
  out.d1 = r0d;
  out.d2 = r1;
  out.d11 = r0dd;
  out.d12 = r1d;
  out.d22 = r2;
  return out;
}

}  // namespace

double TotalDegreePolynomial::operator()(Vec2 p) const {
  double result = 0.0;
  for (int i = degree_; i >= 0; --i) {
    double q = 0.0;
    for (int j = degree_ - i; j >= 0; --j) q = q * p.y + coeff(i, j);
    result = result * p.x + q;
  }
  return result;
}

Vec2 TotalDegreePolynomial::gradient(Vec2 p) const {
  const Jet j = evaluate(*this, p);
  return {j.d1, j.d2};
}

TotalDegreePolynomial::Hessian TotalDegreePolynomial::hessian(Vec2 p) const {
  const Jet j = evaluate(*this, p);
  return {j.d11, j.d12, j.d22};
}

TotalDegreePolynomial TotalDegreePolynomial::scaled(double s) const {
  std::vector<double> c(coeffs_);
  for (double& v : c) v *= s;
  return TotalDegreePolynomial(degree_, std::move(c));
}

ChebyshevValue chebyshev(int n, double t) {
  if (n < 0) throw std::invalid_argument("Chebyshev degree must be >= 0");
  if (n == 0) return {1.0, 0.0};
  double prev = 1.0, prev_d = 0.0;
  double cur = t, cur_d = 1.0;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * t * cur - prev;
    const double next_d = 2.0 * cur + 2.0 * t * cur_d - prev_d;
    prev = cur;
    prev_d = cur_d;
    cur = next;
    cur_d = next_d;
  }
  return {cur, cur_d};
}

namespace {

// out = l * p, all stored at the common degree of `out`.
TotalDegreePolynomial times_affine(const TotalDegreePolynomial& p,
                                   const AffineFunctional& l) {
  const int n = p.degree();
  TotalDegreePolynomial out(n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      double v = l.c0 * p.coeff(i, j);
      if (i > 0) v += l.c.x * p.coeff(i - 1, j);
      if (j > 0) v += l.c.y * p.coeff(i, j - 1);
      out.coeff(i, j) = v;
    }
  }
  return out;
}

}  // namespace

TotalDegreePolynomial chebyshev_transplant(int n, const AffineFunctional& l) {
  if (n < 0) throw std::invalid_argument("Chebyshev degree must be >= 0");
  for (Vec2 v : {Vec2{0.0, 0.0}, Vec2{1.0, 0.0}, Vec2{0.0, 1.0}}) {
    if (std::abs(l(v)) > 1.0 + 1e-12) {
      throw DomainError("affine functional exceeds 1 in modulus on the triangle");
    }
  }
  TotalDegreePolynomial prev(n);
  prev.coeff(0, 0) = 1.0;
  if (n == 0) return prev;
  TotalDegreePolynomial cur(n);
  cur.coeff(0, 0) = l.c0;
  cur.coeff(1, 0) = l.c.x;
  cur.coeff(0, 1) = l.c.y;
  for (int k = 1; k < n; ++k) {
    TotalDegreePolynomial next = times_affine(cur, l);
    std::vector<double> c(next.coeffs().begin(), next.coeffs().end());
    for (std::size_t q = 0; q < c.size(); ++q) {
      c[q] = 2.0 * c[q] - prev.coeffs()[q];
    }
    prev = std::move(cur);
    cur = TotalDegreePolynomial(n, std::move(c));
  }
  return cur;
}

Vec2 project_to_triangle(Vec2 p) {
  if (p.x >= 0.0 && p.y >= 0.0 && p.x + p.y <= 1.0) return p;
  const std::array<std::array<Vec2, 2>, 3> edges = {{
      {Vec2{0.0, 0.0}, Vec2{1.0, 0.0}},
      {Vec2{1.0, 0.0}, Vec2{0.0, 1.0}},
      {Vec2{0.0, 1.0}, Vec2{0.0, 0.0}},
  }};
  Vec2 best = p;
  double best_d = std::numeric_limits<double>::infinity();
  for (const auto& e : edges) {
    const Vec2 d = e[1] - e[0];
    const double t = std::clamp(dot(p - e[0], d) / dot(d, d), 0.0, 1.0);
    const Vec2 q = e[0] + d * t;
    const double dist = norm(p - q);
    if (dist < best_d) {
      best_d = dist;
      best = q;
    }
  }
  return best;
}

namespace {

struct Candidate {
  double value;
  Vec2 point;
};

// Projected Newton ascent of sign * p; only improving steps are taken.
Candidate ascend(const TotalDegreePolynomial& p, Vec2 start, double sign) {
  Vec2 x = start;
  double f = sign * p(x);
  for (int it = 0; it < 60; ++it) {
    const Jet j = evaluate(p, x);
    const Vec2 g{sign * j.d1, sign * j.d2};
    const double hxx = sign * j.d11, hxy = sign * j.d12, hyy = sign * j.d22;
    const double det = hxx * hyy - hxy * hxy;
    Vec2 step;
    if (hxx < 0.0 && det > 0.0) {
      step = {-(hyy * g.x - hxy * g.y) / det, -(-hxy * g.x + hxx * g.y) / det};
    } else {
      const double lip = 1.0 + std::abs(hxx) + 2.0 * std::abs(hxy) + std::abs(hyy);
      step = g * (1.0 / lip);
    }
    bool improved = false;
    for (double t = 1.0; t > 1e-12; t *= 0.5) {
      const Vec2 cand = project_to_triangle(x + step * t);
      const double fc = sign * p(cand);
      if (fc > f) {
        improved = norm(cand - x) > 1e-16;
        x = cand;
        f = fc;
        break;
      }
    }
    if (!improved) break;
  }
  return {f, x};
}

// Golden-section maximization of sign * p along a triangle edge near `t0`.
Candidate along_edge(const TotalDegreePolynomial& p, Vec2 from, Vec2 to,
                     double t0, double h, double sign) {
  const auto at = [&](double t) { return from + (to - from) * t; };
  const ScalarMinimum m = golden_section_min(
      [&](double t) { return -sign * p(at(t)); }, std::max(0.0, t0 - h),
      std::min(1.0, t0 + h), 1e-12);
  return {-m.value, at(m.arg)};
}

}  // namespace

SupNormCertificate sup_norm_simplex(const TotalDegreePolynomial& p,
                                    const SupNormOptions& options) {
  const int n = p.degree();
  const int m = std::max(options.min_resolution, 8 * n * n);
  const int keep = std::max(options.refine_starts, 1);

  struct GridPoint {
    double value;
    int i, j;
  };
  std::vector<GridPoint> top;
  top.reserve(keep + 1);
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; i + j <= m; ++j) {
      const double v = std::abs(p({static_cast<double>(i) / m,
                                   static_cast<double>(j) / m}));
      if (static_cast<int>(top.size()) < keep || v > top.back().value) {
        GridPoint g{v, i, j};
        auto pos = std::upper_bound(
            top.begin(), top.end(), g,
            [](const GridPoint& a, const GridPoint& b) { return a.value > b.value; });
        top.insert(pos, g);
        if (static_cast<int>(top.size()) > keep) top.pop_back();
      }
    }
  }

  SupNormCertificate cert;
  cert.grid_resolution = m;
  cert.value = top.front().value;
  cert.argmax = {static_cast<double>(top.front().i) / m,
                 static_cast<double>(top.front().j) / m};

  const double h = 1.0 / m;
  for (const GridPoint& g : top) {
    const Vec2 start{g.i * h, g.j * h};
    const double s0 = p(start);
    if (s0 == 0.0) continue;
    const double sign = s0 > 0.0 ? 1.0 : -1.0;

    std::vector<Candidate> found = {ascend(p, start, sign)};
    if (g.j == 0) found.push_back(along_edge(p, {0, 0}, {1, 0}, g.i * h, h, sign));
    if (g.i == 0) found.push_back(along_edge(p, {0, 0}, {0, 1}, g.j * h, h, sign));
    if (g.i + g.j == m) {
      found.push_back(along_edge(p, {1, 0}, {0, 1}, g.j * h, h, sign));
    }
    for (const Candidate& c : found) {
      if (c.value > cert.value) {
        cert.value = c.value;
        cert.argmax = c.point;
        cert.refined = true;
      }
    }
  }
  return cert;
}

}  // namespace bernstein
