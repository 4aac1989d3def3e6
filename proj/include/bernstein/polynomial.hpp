#pragma once

#include <span>
#include <vector>

#include "bernstein/geometry.hpp"

namespace bernstein {

/// Bivariate polynomial of total degree <= n in the monomial basis
/// x1^i x2^j, coefficients stored row by row (i outer, j inner, i + j <= n).
class TotalDegreePolynomial {
 public:
  explicit TotalDegreePolynomial(int degree);
  TotalDegreePolynomial(int degree, std::vector<double> coeffs);

  int degree() const { return degree_; }
  std::span<const double> coeffs() const { return coeffs_; }

  static std::size_t coeff_count(int degree) {
    return static_cast<std::size_t>(degree + 1) * (degree + 2) / 2;
  }
  std::size_t index(int i, int j) const;
  double coeff(int i, int j) const { return coeffs_[index(i, j)]; }
  double& coeff(int i, int j) { return coeffs_[index(i, j)]; }

  double operator()(Vec2 p) const;
  Vec2 gradient(Vec2 p) const;

  struct Hessian {
    double xx, xy, yy;
  };
  Hessian hessian(Vec2 p) const;

  TotalDegreePolynomial scaled(double s) const;

 private:
  int degree_;
  std::vector<double> coeffs_;
};

/// Affine functional l(x) = c0 + <c, x>.
struct AffineFunctional {
  double c0;
  Vec2 c;

  double operator()(Vec2 p) const { return c0 + dot(c, p); }
};

/// Chebyshev polynomial T_n and its derivative at t.
struct ChebyshevValue {
  double value;
  double derivative;
};
ChebyshevValue chebyshev(int n, double t);

/// T_n o l expanded in the monomial basis. Throws DomainError unless
/// |l| <= 1 + 1e-12 at the three vertices of the triangle.
TotalDegreePolynomial chebyshev_transplant(int n, const AffineFunctional& l);

struct SupNormCertificate {
  double value = 0.0;
  int grid_resolution = 0;
  bool refined = false;
  /// Always true: the value is a maximum over sampled points.
  bool lower_bound = true;
  Vec2 argmax;
};

struct SupNormOptions {
  int min_resolution = 64;
  int refine_starts = 10;
};

/// Max of |p| on the triangle: barycentric grid of max(64, 8 n^2) cells per
/// side, then projected Newton ascent from the best grid points.
SupNormCertificate sup_norm_simplex(const TotalDegreePolynomial& p,
                                    const SupNormOptions& options = {});

/// Euclidean projection onto the standard triangle.
Vec2 project_to_triangle(Vec2 p);

}  // namespace bernstein
