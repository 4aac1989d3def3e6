// Command-line front end. Exit codes: 0 ok, 2 parse/usage, 3 domain, 4 io.

#include <complex>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bernstein/ellipse_solver.hpp"
#include "bernstein/errors.hpp"
#include "bernstein/geometry.hpp"
#include "bernstein/kernel.hpp"
#include "bernstein/numeric.hpp"
#include "bernstein/polygon_io.hpp"
#include "bernstein/report.hpp"
#include "bernstein/simplex.hpp"
#include "bernstein/sweeps.hpp"
#include "bernstein/verify.hpp"

using namespace bernstein;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

// Writes to `path`, or stdout when empty. Throws ios_base::failure.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw std::ios_base::failure("write to '" + path + "' failed");
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(kCsvDigits) << v;
  return s.str();
}

struct Args {
  std::string body;
  std::vector<double> coords;
  double x1 = 0, x2 = 0, phi = 0;
  int grid = 0;
  int dirs = 0;
  int degree = 1;
  int min_degree = 0;
  int trials = 1000;
  std::uint64_t seed = 42;
  double margin = 1e-3;
  std::string out;
  std::string format;
  std::string source = "kr";
};

void cmd_alpha(const Args& a) {
  const ConvexPolygon k = read_polygon_file(a.body);
  std::cout << fmt(alpha(k, InteriorPoint::make(k, {a.x1, a.x2}))) << '\n';
}

void cmd_ellipse(const Args& a) {
  const ConvexPolygon k = read_polygon_file(a.body);
  const InteriorPoint x = InteriorPoint::make(k, {a.x1, a.x2});
  if (a.dirs > 0) {
    const DirectionalMinimum m = best_ellipse_all_dirs(k, x, a.dirs);
    std::cout << fmt(m.value) << '\n';
    return;
  }
  std::cout << fmt(best_ellipse(k, x, UnitDirection::from_angle(a.phi)).best_b) << '\n';
}

void cmd_extremal(const Args& a) {
  if (a.coords.empty() || a.coords.size() % 2 != 0) {
    throw std::invalid_argument("extremal expects pairs: re1 im1 re2 im2 ...");
  }
  std::vector<std::complex<double>> z;
  for (std::size_t i = 0; i < a.coords.size(); i += 2) z.emplace_back(a.coords[i], a.coords[i + 1]);
  std::cout << fmt(siciak_extremal(z)) << '\n';
}

void cmd_compare(const Args& a) {
  const ComparisonSweep s = comparison_sweep(a.grid, a.dirs, a.margin);
  std::ostringstream text;
  if (a.format == "json") {
    text << comparison_json(s).dump(1) << '\n';
  } else {
    write_comparison_csv(text, s);
  }
  emit(a.out, text.str());
  if (!a.out.empty()) {
    const ComparisonSummary& m = s.summary;
    std::cout << "rows " << m.rows << "\nmin_quotient " << fmt(m.min_quotient) << " at x = ("
              << fmt(m.argmin_x1) << ", " << fmt(m.argmin_x2) << "), phi = "
              << fmt(m.argmin_phi) << "\nnear_equality_rows " << m.near_equality << '\n';
  }
}

void cmd_constants(const Args& a) {
  const ConstantSweepResult r = constants_sweep(a.grid, a.margin);
  const double s3 = std::sqrt(3.0);
  const double s35 = std::sqrt(3.0 + std::sqrt(5.0));
  std::cout << "grid " << r.grid << " margin " << fmt(r.margin) << '\n'
            << "sup w*sqrt(1-alpha)/(2E)   " << fmt(r.sup_ratio_alpha) << "  (sqrt(3)/2 = "
            << fmt(s3 / 2) << ") at (" << fmt(r.argmax_alpha_x1) << ", "
            << fmt(r.argmax_alpha_x2) << ")\n"
            << "sup w*sqrt(1-alpha^2)/(2E) " << fmt(r.sup_ratio_alpha2)
            << "  (sqrt(3+sqrt(5))/2 = " << fmt(s35 / 2) << ") at (" << fmt(r.argmax_alpha2_x1)
            << ", " << fmt(r.argmax_alpha2_x2) << ")\n"
            << "constants: 2*sqrt(2) = " << std::setprecision(8) << 2 * std::sqrt(2.0)
            << " > sqrt(3+sqrt(5)) = " << s35 << " > sqrt(3) = " << s3 << '\n';
}

void cmd_kernel(const Args& a) {
  const SimplexPoint x = SimplexPoint::make(a.x1, a.x2);
  const bool baran = a.source == "baran";
  const DirectionalBoundTable table = baran ? baran_table(x, a.dirs) : kr_table(x, a.dirs);
  const KernelRegion region = kernel_intersect(table);

  std::cout << "source " << a.source << " dirs " << a.dirs << '\n'
            << "vertices " << region.polygon.size() << '\n'
            << "area " << fmt(region.area) << '\n';
  const KernelEllipse e = kernel_ellipse_closed_form(x);
  if (baran) {
    const double closed = kernel_area_closed(x);
    std::cout << "ellipse a " << fmt(e.a) << " b " << fmt(e.b) << " c " << fmt(e.c) << '\n'
              << "ellipse rotation " << fmt(e.rotation) << " minor " << fmt(e.minor)
              << " major " << fmt(e.major) << '\n'
              << "closed_area " << fmt(closed) << '\n'
              << "relative_discrepancy " << fmt(region.area / closed - 1) << '\n';
  } else {
    std::cout << "cloud_area " << fmt(cloud_area(x)) << '\n';
  }

  if (a.out.empty()) return;
  std::ostringstream text;
  const auto ring = region.polygon.vertices();
  if (a.format == "svg") {
    std::vector<SvgLayer> layers;
    layers.push_back({{ring.begin(), ring.end()}, "black"});
    layers.push_back({ellipse_outline(e), "red"});
    if (!baran) layers.push_back({polar_outline(table), "blue"});
    write_svg(text, layers);
  } else {
    write_region_csv(text, ring);
  }
  emit(a.out, text.str());
}

void cmd_verify(const Args& a) {
  VerifyOptions o;
  o.max_degree = a.degree;
  o.min_degree = a.min_degree > 0 ? a.min_degree : a.degree;
  o.trials = a.trials;
  o.seed = a.seed;
  o.boundary_margin = a.margin;
  const VerifyReport r = verify_upper_bound(o);
  emit(a.out, verify_json(r).dump(1) + "\n");
  if (!a.out.empty()) {
    std::cout << "trials " << o.trials << " degrees " << o.min_degree << ".." << o.max_degree
              << " seed " << o.seed << '\n'
              << "violations " << r.violations.size() << '\n'
              << "skipped " << r.skipped << '\n'
              << "max_quotient " << fmt(r.max_quotient) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bernstein-type directional derivative bounds on convex bodies and the simplex"};
  app.require_subcommand(1);
  Args a;
  std::function<void(const Args&)> run;

  auto* alpha_cmd = app.add_subcommand("alpha", "generalized Minkowski functional of a polygon");
  alpha_cmd->add_option("body", a.body, "polygon file")->required();
  alpha_cmd->add_option("x1", a.x1)->required();
  alpha_cmd->add_option("x2", a.x2)->required();
  alpha_cmd->callback([&] { run = cmd_alpha; });

  auto* ellipse_cmd = app.add_subcommand("ellipse", "best inscribed ellipse constant E(K, x, y)");
  ellipse_cmd->add_option("body", a.body, "polygon file")->required();
  ellipse_cmd->add_option("x1", a.x1)->required();
  ellipse_cmd->add_option("x2", a.x2)->required();
  ellipse_cmd->add_option("phi", a.phi, "direction angle");
  ellipse_cmd->add_option("--dirs", a.dirs, "minimize over this many directions instead");
  ellipse_cmd->callback([&] { run = cmd_ellipse; });

  auto* extremal_cmd = app.add_subcommand("extremal", "Siciak extremal function of the simplex");
  extremal_cmd->add_option("z", a.coords, "re1 im1 re2 im2 ...")->required();
  extremal_cmd->callback([&] { run = cmd_extremal; });

  auto* compare_cmd = app.add_subcommand("compare", "1/E, KR and Baran bounds on a grid");
  compare_cmd->add_option("--grid", a.grid, "grid resolution (default 20)");
  compare_cmd->add_option("--dirs", a.dirs, "number of directions (default 36)");
  compare_cmd->add_option("--margin", a.margin)->capture_default_str();
  compare_cmd->add_option("--out", a.out);
  compare_cmd->add_option("--format", a.format)->check(CLI::IsMember({"csv", "json"}));
  compare_cmd->callback([&] {
    if (compare_cmd->count("--grid") == 0) a.grid = 20;
    if (compare_cmd->count("--dirs") == 0) a.dirs = 36;
    run = cmd_compare;
  });

  auto* constants_cmd = app.add_subcommand("constants", "sup of the constant ratios on a grid");
  constants_cmd->add_option("--grid", a.grid, "grid resolution (>= 50)");
  constants_cmd->add_option("--margin", a.margin)->capture_default_str();
  constants_cmd->callback([&] {
    if (constants_cmd->count("--grid") == 0) a.grid = 200;
    run = cmd_constants;
  });

  auto* kernel_cmd = app.add_subcommand("kernel", "kernel set of directional bounds at x");
  kernel_cmd->add_option("x1", a.x1)->required();
  kernel_cmd->add_option("x2", a.x2)->required();
  kernel_cmd->add_option("--source", a.source)->check(CLI::IsMember({"kr", "baran"}))
      ->capture_default_str();
  kernel_cmd->add_option("--dirs", a.dirs, "number of directions (default 2048)");
  kernel_cmd->add_option("--out", a.out);
  kernel_cmd->add_option("--format", a.format)->check(CLI::IsMember({"csv", "svg"}));
  kernel_cmd->callback([&] {
    if (kernel_cmd->count("--dirs") == 0) a.dirs = 2048;
    run = cmd_kernel;
  });

  auto* verify_cmd = app.add_subcommand("verify", "randomized check of the Baran upper bound");
  verify_cmd->add_option("--degree", a.degree, "maximal degree (1..8)")->capture_default_str();
  verify_cmd->add_option("--min-degree", a.min_degree, "minimal degree (default: --degree)");
  verify_cmd->add_option("--trials", a.trials)->capture_default_str();
  verify_cmd->add_option("--seed", a.seed)->capture_default_str();
  verify_cmd->add_option("--margin", a.margin)->capture_default_str();
  verify_cmd->add_option("--out", a.out);
  verify_cmd->add_option("--format", a.format)->check(CLI::IsMember({"json"}));
  verify_cmd->callback([&] { run = cmd_verify; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    run(a);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return 0;
}
