#pragma once

#include <istream>
#include <string>

#include "bernstein/geometry.hpp"

namespace bernstein {

/// Reads the polygon text format: one vertex per line as two whitespace
/// separated decimals, counterclockwise; lines whose first non-blank
/// character is `#` and blank lines are ignored. Throws ParseError naming
/// the 1-based line of the offending vertex. An unreadable file throws
/// std::ios_base::failure.
ConvexPolygon read_polygon(std::istream& in);
ConvexPolygon read_polygon_file(const std::string& path);

}  // namespace bernstein
