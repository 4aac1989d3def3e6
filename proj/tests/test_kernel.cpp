#include <cmath>
#include <random>

#include "bernstein/errors.hpp"
#include "bernstein/kernel.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bernstein;

namespace {

const double kPiT = oracle::pi;
const SimplexPoint M = SimplexPoint::make(1.0 / 3, 1.0 / 3);

double segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double t = std::clamp(dot(p - a, ab) / dot(ab, ab), 0.0, 1.0);
  return norm(p - (a + ab * t));
}

double boundary_distance(const ConvexPolygon& k, Vec2 p) {
  const auto v = k.vertices();
  double best = 1e300;
  for (std::size_t i = 0; i < v.size(); ++i) {
    best = std::min(best, segment_distance(p, v[i], v[(i + 1) % v.size()]));
  }
  return best;
}

std::vector<Vec2> hexagon() {
  const double s = std::sqrt(6.0);
  return {{s, 0}, {s, s}, {0, s}, {-s, 0}, {-s, -s}, {0, -s}};
}

}  // namespace

TEST_CASE("table validation") {
  CHECK_THROWS_AS(DirectionalBoundTable::sample(15, [](double) { return 1.0; }),
                  std::invalid_argument);
  CHECK_THROWS_AS(DirectionalBoundTable::sample(32, [](double t) { return t < 1 ? 1.0 : 0.0; }),
                  DomainError);
  const auto t = DirectionalBoundTable::sample(16, [](double) { return 1.0; });
  CHECK(t.size() == 16);
  CHECK(t.thetas[4] == doctest::Approx(kPiT / 4));
}

TEST_CASE("isotropic table gives the disk") {
  const auto t = DirectionalBoundTable::sample(1024, [](double) { return 1.0; });
  const KernelRegion k = kernel_intersect(t);
  CHECK(k.n_halfplanes == 2048);
  CHECK(k.polygon.size() == 2048);
  CHECK(std::abs(k.area - kPiT) <= 1e-4 * kPiT);
  CHECK(is_origin_symmetric(k.polygon));
  const double none[] = {0.0};
  CHECK(polar_area([](double) { return 1.0; }, std::span<const double>(none, 0)) ==
        doctest::Approx(kPiT).epsilon(1e-12));
}

TEST_CASE("hexagon at the centroid") {
  const KernelRegion k = kernel_intersect(kr_table(M, 4096));
  CHECK(std::abs(k.area - 18.0) <= 1e-3);
  CHECK(is_origin_symmetric(k.polygon));
  for (const Vec2& v : hexagon()) {
    CHECK(boundary_distance(k.polygon, v) <= 1e-3);
    // some kernel vertex sits on each hexagon corner
    double nearest = 1e300;
    for (const Vec2& p : k.polygon.vertices()) nearest = std::min(nearest, norm(p - v));
    CHECK(nearest <= 1e-3);
  }
  CHECK(oracle::shoelace(hexagon()) == doctest::Approx(18.0));
}

TEST_CASE("hexagon area converges with N") {
  double prev_err = 1e300;
  for (int n : {256, 512, 1024, 2048}) {
    const double err = kernel_intersect(kr_table(M, n)).area - 18.0;
    CHECK(err >= -1e-9);
    CHECK(err <= prev_err + 1e-12);
    prev_err = err;
  }
}

TEST_CASE("kernel ellipse area at the centroid from Baran bounds") {
  const KernelRegion k = kernel_intersect(baran_table(M, 4096));
  CHECK(std::abs(k.area - kPiT * 3 * std::sqrt(3.0)) <= 1e-3 * kPiT * 3 * std::sqrt(3.0));
  CHECK(k.area == doctest::Approx(16.3242).epsilon(1e-3));
}

TEST_CASE("fast and reference intersections agree") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(0.05, 0.9);
  for (int trial = 0; trial < 6; ++trial) {
    double x1 = u(rng), x2 = u(rng);
    if (x1 + x2 > 0.95) continue;
    const SimplexPoint x = SimplexPoint::make(x1, x2);
    for (const DirectionalBoundTable& t : {kr_table(x, 256), baran_table(x, 256)}) {
      const KernelRegion fast = kernel_intersect(t);
      const KernelRegion ref = reference::kernel_intersect(t);
      CHECK(fast.area == doctest::Approx(ref.area).epsilon(1e-10));
      CHECK(is_origin_symmetric(fast.polygon));
      CHECK(is_origin_symmetric(ref.polygon));
    }
  }
}

TEST_CASE("nested refinements shrink the kernel") {
  const SimplexPoint x = SimplexPoint::make(0.2, 0.3);
  double prev = 1e300;
  for (int n : {64, 128, 256, 512, 1024}) {
    const double a = kernel_intersect(baran_table(x, n)).area;
    CHECK(a <= prev + 1e-12);
    prev = a;
  }
}

TEST_CASE("cloud area at the centroid") {
  const double expect = 9 + 4.5 * kPiT;
  CHECK(cloud_area(M) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(std::abs(cloud_area(M) - 23.137) <= 1e-3);

  const auto disks = kr_cloud_disks(M);
  const double h = std::sqrt(1.5);
  CHECK(disks[0].center.x == doctest::Approx(h));
  CHECK(disks[0].center.y == doctest::Approx(h));
  CHECK(disks[0].radius == doctest::Approx(std::sqrt(3.0)));
  CHECK(disks[1].center.x == doctest::Approx(0.0));
  CHECK(disks[1].center.y == doctest::Approx(h));
  CHECK(disks[1].radius == doctest::Approx(h));
  CHECK(disks[2].center.x == doctest::Approx(-h));
  CHECK(disks[2].center.y == doctest::Approx(0.0));
  CHECK(disks[2].radius == doctest::Approx(h));
  // upper half doubled by central symmetry
  CHECK(std::abs(2 * disk_union_area_above(disks, 0.0) - cloud_area(M)) <= 1e-4);
}

TEST_CASE("disk union area") {
  const Disk one[] = {{{0, 0}, 1}};
  CHECK(disk_union_area_above(one, -5) == doctest::Approx(kPiT).epsilon(1e-9));
  CHECK(disk_union_area_above(one, 0) == doctest::Approx(kPiT / 2).epsilon(1e-9));
  // two unit disks at distance 1: lens area 2 pi / 3 - sqrt(3) / 2
  const Disk two[] = {{{0, 0}, 1}, {{1, 0}, 1}};
  const double lens = 2 * kPiT / 3 - std::sqrt(3.0) / 2;
  CHECK(disk_union_area_above(two, -5) == doctest::Approx(2 * kPiT - lens).epsilon(1e-9));
}

TEST_CASE("cloud area by disks away from the centroid") {
  for (auto [x1, x2] : {std::pair{0.2, 0.3}, {0.1, 0.6}, {0.5, 0.25}}) {
    const SimplexPoint x = SimplexPoint::make(x1, x2);
    CHECK(2 * disk_union_area_above(kr_cloud_disks(x), 0.0) ==
          doctest::Approx(cloud_area(x)).epsilon(1e-8));
  }
}

TEST_CASE("closed-form kernel ellipse examples") {
  const KernelEllipse e = kernel_ellipse_closed_form(M);
  CHECK(e.a == doctest::Approx(2.0 / 9));
  CHECK(e.b == doctest::Approx(2.0 / 9));
  CHECK(e.c == doctest::Approx(2.0 / 9));
  CHECK(e.discriminant == doctest::Approx(2.0 / 9));
  CHECK(e.minor == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(e.major == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(e.rotation == doctest::Approx(kPiT / 4));
  CHECK(e.area() == doctest::Approx(16.3242).epsilon(1e-5));

  const KernelEllipse q = kernel_ellipse_closed_form(SimplexPoint::make(0.25, 0.25));
  CHECK(q.a == doctest::Approx(3.0 / 16));
  CHECK(q.c == doctest::Approx(1.0 / 8));
  CHECK(q.discriminant == doctest::Approx(1.0 / 8));
  CHECK(q.minor == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(q.major == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(kernel_area_closed(SimplexPoint::make(0.25, 0.25)) ==
        doctest::Approx(4 * kPiT * std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("ellipse boundary matches the Baran bounds") {
  // the support function of the ellipse in direction y equals D_y V
  for (auto [x1, x2] : {std::pair{0.2, 0.3}, {0.6, 0.1}}) {
    const SimplexPoint x = SimplexPoint::make(x1, x2);
    const KernelEllipse e = kernel_ellipse_closed_form(x);
    for (int k = 0; k < 64; ++k) {
      const double t = kPiT * k / 64;
      const UnitDirection y = UnitDirection::from_angle(t);
      // support of {v : v^T Q v <= 1} is sqrt(y^T Q^{-1} y) with
      // Q = [[a, -c/2], [-c/2, b]]
      const double det = e.a * e.b - e.c * e.c / 4;
      const Vec2 u = y.vec();
      const double s = std::sqrt((e.b * u.x * u.x + e.a * u.y * u.y + e.c * u.x * u.y) / det);
      CHECK(s == doctest::Approx(baran_derivative(x, y)).epsilon(1e-12));
    }
  }
}

TEST_CASE("closed-form identities on grids") {
  for (int i = 1; i < 30; ++i) {
    for (int j = 1; i + j < 30; ++j) {
      const SimplexPoint x = SimplexPoint::make(i / 30.0, j / 30.0);
      const KernelEllipse e = kernel_ellipse_closed_form(x);
      CHECK(kernel_area_closed(x) / (0.5 * equilibrium_density(x)) ==
            doctest::Approx(1.0).epsilon(1e-14));
      CHECK(std::abs(e.area() - kernel_area_closed(x)) <= 1e-12 * kernel_area_closed(x));
      CHECK(e.minor <= e.major);
      CHECK(e.a > 0);
      CHECK(e.b > 0);
      CHECK(e.c > 0);
    }
  }
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const double x1 = 0.001 + 0.997 * i / 99, x2 = 0.001 + 0.997 * j / 99;
      if (1 - x1 - x2 < 0.001) continue;
      const SimplexPoint x = SimplexPoint::make(x1, x2);
      worst = std::max(worst, std::abs(kernel_max_norm(x) * ellipse_constant(x) - 1));
    }
  }
  CHECK(worst <= 1e-12);
  CHECK(kernel_max_norm(M) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(kernel_max_norm(SimplexPoint::make(0.25, 0.25)) ==
        doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("numeric kernel area matches the closed form on a grid") {
  for (int i = 1; i < 8; ++i) {
    for (int j = 1; i + j < 8; ++j) {
      const SimplexPoint x = SimplexPoint::make(i / 8.0, j / 8.0);
      const double a = kernel_intersect(baran_table(x, 2048)).area;
      CHECK(std::abs(a / kernel_area_closed(x) - 1) <= 1e-3);
    }
  }
}
