#pragma once

#include <stdexcept>
#include <string>

namespace bernstein {

/// A point or argument lies outside the domain where a quantity is defined
/// (boundary points, zero directions, non-interior evaluation points).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid geometric input, e.g. a non-convex or degenerate polygon.
/// `index` names the offending vertex when one can be identified.
class GeometryError : public std::invalid_argument {
 public:
  GeometryError(const std::string& what, int index = -1)
      : std::invalid_argument(what), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// Malformed text input; `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace bernstein
