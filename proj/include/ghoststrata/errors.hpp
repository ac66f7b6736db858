#pragma once

#include <stdexcept>
#include <string>

namespace ghoststrata {

/// A configured size bound (vertex count, group order, decoration count) was exceeded.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed decorated-graph input. `where()` is a byte offset or a JSON pointer.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}

  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace ghoststrata
