#include "bernstein/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "bernstein/numeric.hpp"

namespace bernstein {

void write_comparison_csv(std::ostream& out, const ComparisonSweep& sweep) {
  std::ostringstream buf;
  buf << std::setprecision(kCsvDigits);
  buf << "x1,x2,phi,inv_E,kr,baran,quotient\n";
  for (const ComparisonRow& r : sweep.rows) {
    buf << r.x1 << ',' << r.x2 << ',' << r.phi << ',' << r.inv_e << ',' << r.kr
        << ',' << r.baran << ',' << r.quotient << '\n';
  }
  out << buf.str();
}

nlohmann::json comparison_json(const ComparisonSweep& sweep) {
  const ComparisonSummary& s = sweep.summary;
  nlohmann::json meta = {
      {"grid", sweep.grid},
      {"dirs", sweep.dirs},
      {"margin", sweep.margin},
      {"rows", s.rows},
      {"min_quotient", s.min_quotient},
      {"argmin", {{"x1", s.argmin_x1}, {"x2", s.argmin_x2}, {"phi", s.argmin_phi}}},
      {"near_equality_rows", s.near_equality},
      {"near_equality_dirs", s.near_equality_dirs},
  };
  nlohmann::json rows = nlohmann::json::array();
  for (const ComparisonRow& r : sweep.rows) {
    rows.push_back({{"x1", r.x1},
                    {"x2", r.x2},
                    {"phi", r.phi},
                    {"inv_E", r.inv_e},
                    {"kr", r.kr},
                    {"baran", r.baran},
                    {"quotient", r.quotient}});
  }
  return {{"meta", meta}, {"rows", rows}};
}

nlohmann::json verify_json(const VerifyReport& report) {
  const VerifyOptions& o = report.options;
  nlohmann::json meta = {
      {"min_degree", o.min_degree},
      {"max_degree", o.max_degree},
      {"trials", o.trials},
      {"seed", o.seed},
      {"slack", o.slack},
      {"boundary_margin", o.boundary_margin},
      {"ensemble", "monomial coefficients uniform in [-1, 1]"},
      {"max_quotient", report.max_quotient},
      {"skipped", report.skipped},
      {"violations", report.violations},
  };
  nlohmann::json rows = nlohmann::json::array();
  for (const TrialRecord& t : report.trials) {
    rows.push_back({{"trial", t.trial},
                    {"degree", t.degree},
                    {"seed", t.seed},
                    {"x1", t.x1},
                    {"x2", t.x2},
                    {"phi", t.phi},
                    {"sup_norm", t.sup_norm},
                    {"ratio", t.ratio},
                    {"bound", t.bound},
                    {"quotient", t.quotient},
                    {"skipped", t.skipped}});
  }
  return {{"meta", meta}, {"rows", rows}};
}

void write_region_csv(std::ostream& out, std::span<const Vec2> ring) {
  std::ostringstream buf;
  buf << std::setprecision(kCsvDigits);
  buf << "x,y\n";
  for (const Vec2& v : ring) buf << v.x << ',' << v.y << '\n';
  out << buf.str();
}

std::vector<Vec2> ellipse_outline(const KernelEllipse& e, int n) {
  // In the rotated frame the form is A v1^2 + B v2^2 with semi-axes 1/sqrt(A),
  // 1/sqrt(B); sample the boundary radially instead: r(t) = 1/sqrt(form(u_t)).
  std::vector<Vec2> ring;
  ring.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * kPi * k / n;
    const Vec2 u{std::cos(t), std::sin(t)};
    ring.push_back(u * (1.0 / std::sqrt(e.form(u))));
  }
  return ring;
}

std::vector<Vec2> polar_outline(const DirectionalBoundTable& table) {
  std::vector<Vec2> ring;
  ring.reserve(2 * table.size());
  for (int sign : {1, -1}) {
    for (std::size_t k = 0; k < table.size(); ++k) {
      const double t = table.thetas[k];
      ring.push_back(Vec2{std::cos(t), std::sin(t)} * (sign * table.r[k]));
    }
  }
  return ring;
}

void write_svg(std::ostream& out, std::span<const SvgLayer> layers) {
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  for (const SvgLayer& l : layers) {
    for (const Vec2& v : l.ring) {
      lo_x = std::min(lo_x, v.x);
      hi_x = std::max(hi_x, v.x);
      lo_y = std::min(lo_y, v.y);
      hi_y = std::max(hi_y, v.y);
    }
  }
  if (!std::isfinite(lo_x)) lo_x = lo_y = -1.0, hi_x = hi_y = 1.0;
  const double pad = 0.05 * std::max(hi_x - lo_x, hi_y - lo_y);
  std::ostringstream buf;
  buf << std::setprecision(8);
  // SVG's y axis points down; flip so the picture is in math orientation.
  buf << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << lo_x - pad
      << ' ' << -hi_y - pad << ' ' << hi_x - lo_x + 2 * pad << ' '
      << hi_y - lo_y + 2 * pad << "\">\n";
  const double stroke_width = 0.003 * std::max(hi_x - lo_x, hi_y - lo_y);
  for (const SvgLayer& l : layers) {
    if (l.ring.empty()) continue;
    buf << "  <path fill=\"none\" stroke=\"" << l.stroke << "\" stroke-width=\""
        << stroke_width << "\" d=\"";
    for (std::size_t i = 0; i < l.ring.size(); ++i) {
      buf << (i == 0 ? 'M' : 'L') << l.ring[i].x << ',' << -l.ring[i].y << ' ';
    }
    buf << "Z\"/>\n";
  }
  buf << "</svg>\n";
  out << buf.str();
}

}  // namespace bernstein
