#include "bernstein/polygon_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "bernstein/errors.hpp"

namespace bernstein {

ConvexPolygon read_polygon(std::istream& in) {
  std::vector<Vec2> vertices;
  std::vector<int> lines;
  std::string text;
  int line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;

    std::istringstream fields(text);
    Vec2 v;
    std::string extra;
    if (!(fields >> v.x >> v.y)) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected two numbers, got '" + text + "'",
                       line_no);
    }
    if (fields >> extra) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": unexpected trailing text '" + extra + "'",
                       line_no);
    }
    vertices.push_back(v);
    lines.push_back(line_no);
  }

  try {
    return ConvexPolygon::make(std::move(vertices));
  } catch (const GeometryError& e) {
    const int at = e.index() >= 0 && e.index() < static_cast<int>(lines.size())
                       ? lines[e.index()]
                       : line_no;
    throw ParseError("line " + std::to_string(at) + ": " + e.what(), at);
  }
}

ConvexPolygon read_polygon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open polygon file '" + path + "'");
  return read_polygon(in);
}

}  // namespace bernstein
