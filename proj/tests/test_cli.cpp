#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " BERNSTEIN_CLI " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

double first_number(const std::string& s) { return std::stod(s); }

const std::string kTri = BERNSTEIN_DATA "/triangle.poly";
const std::string kSquare = BERNSTEIN_DATA "/square.poly";

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "bernstein_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("alpha") {
  Result r = run("alpha " + kTri + " 0.3333333 0.3333333");
  CHECK(r.code == 0);
  CHECK(first_number(r.out) == doctest::Approx(1.0 / 3).epsilon(1e-6));
  r = run("alpha " + kSquare + " 0 0");
  CHECK(r.code == 0);
  CHECK(std::abs(first_number(r.out)) <= 1e-6);
  CHECK(run("alpha " + kTri + " 0.9 0.9").code == 3);
}

TEST_CASE("exit codes for bad input") {
  const auto bad = scratch("bad.poly");
  std::ofstream(bad) << "# header\n0 0\n1 zero\n0 1\n";
  CHECK(run("alpha " + bad.string() + " 0.1 0.1").code == 2);
  const auto concave = scratch("concave.poly");
  std::ofstream(concave) << "0 0\n2 0\n1 0.2\n2 2\n0 2\n";
  CHECK(run("alpha " + concave.string() + " 0.5 1").code == 2);
  CHECK(run("alpha /nonexistent/file.poly 0.1 0.1").code == 4);
  CHECK(run("compare --grid 4 --dirs 4 --out /nonexistent/dir/out.csv").code == 4);
  CHECK(run("kernel 0.6 0.6").code == 3);
  CHECK(run("compare --grid 3").code == 2);
  CHECK(run("verify --degree 9").code == 2);
}

TEST_CASE("extremal and ellipse") {
  Result r = run("extremal 0.3 0 0.3 0");
  CHECK(r.code == 0);
  CHECK(first_number(r.out) == 0.0);
  r = run("extremal 2 0 0 0");
  CHECK(first_number(r.out) == doctest::Approx(std::log(3 + std::sqrt(8.0))).epsilon(1e-11));
  r = run("ellipse " + kTri + " 0.3333333333333333 0.3333333333333333 0");
  CHECK(r.code == 0);
  CHECK(first_number(r.out) == doctest::Approx(1 / std::sqrt(6.0)).epsilon(1e-7));
  r = run("ellipse " + kTri + " 0.3333 0.3333 0");
  CHECK(first_number(r.out) == doctest::Approx(0.408248).epsilon(1e-3));
}

TEST_CASE("compare output") {
  const auto csv = scratch("compare.csv");
  Result r = run("compare --grid 20 --dirs 36 --out " + csv.string());
  CHECK(r.code == 0);
  const std::string text = slurp(csv);
  CHECK(text.rfind("x1,x2,phi,inv_E,kr,baran,quotient\n", 0) == 0);
  const auto json = scratch("compare.json");
  CHECK(run("compare --grid 20 --dirs 36 --format json --out " + json.string()).code == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp(json));
  CHECK(j["meta"]["min_quotient"].get<double>() >= 1 - 1e-9);
  CHECK(j["rows"].size() == 210 * 36);
}

TEST_CASE("kernel and constants output") {
  Result r = run("kernel 0.3333333333333333 0.3333333333333333 --dirs 4096");
  CHECK(r.code == 0);
  CHECK(r.out.find("area 18\n") != std::string::npos);
  r = run("kernel 0.25 0.25 --source baran --dirs 4096");
  CHECK(r.out.find("closed_area 17.7715") != std::string::npos);
  const auto svg = scratch("kernel.svg");
  CHECK(run("kernel 0.2 0.3 --format svg --out " + svg.string()).code == 0);
  CHECK(slurp(svg).rfind("<svg", 0) == 0);
  const auto csv = scratch("kernel.csv");
  CHECK(run("kernel 0.2 0.3 --format csv --out " + csv.string()).code == 0);
  CHECK(slurp(csv).rfind("x,y\n", 0) == 0);
  r = run("constants --grid 60");
  CHECK(r.code == 0);
  CHECK(r.out.find("2.8284271 > sqrt(3+sqrt(5)) = 2.2882456") != std::string::npos);
}

TEST_CASE("byte-identical output for identical flags") {
  const auto a = scratch("v1.json"), b = scratch("v2.json");
  CHECK(run("verify --degree 4 --trials 200 --seed 42 --out " + a.string(), "OMP_NUM_THREADS=1").code == 0);
  CHECK(run("verify --degree 4 --trials 200 --seed 42 --out " + b.string(), "OMP_NUM_THREADS=4").code == 0);
  CHECK(slurp(a) == slurp(b));
  const nlohmann::json j = nlohmann::json::parse(slurp(a));
  CHECK(j["meta"]["violations"].empty());

  const auto c = scratch("c1.csv"), d = scratch("c2.csv");
  run("compare --grid 12 --dirs 16 --out " + c.string(), "OMP_NUM_THREADS=1");
  run("compare --grid 12 --dirs 16 --out " + d.string(), "OMP_NUM_THREADS=3");
  CHECK(slurp(c) == slurp(d));

  const auto e = scratch("v3.json");
  run("verify --degree 4 --trials 200 --seed 43 --out " + e.string());
  CHECK(slurp(a) != slurp(e));
}
