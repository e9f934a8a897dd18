#pragma once

#include <stdexcept>
#include <string>

namespace casctree {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input data: bad node ids, probabilities outside (0,1],
/// duplicate edges or observation points, and similar.
struct InputError : Error {
  using Error::Error;
};

/// A structure references entities that do not exist, e.g. a tree edge
/// absent from the host graph, or a parent map with a cycle.
struct StructureError : Error {
  using Error::Error;
};

/// An operation was invoked outside its contract, e.g. a bounded-tree
/// inference on an exact-mode observation.
struct ContractError : Error {
  using Error::Error;
};

/// Text input could not be parsed. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line)
      : Error(message + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Cascade generation gave up (retry cap exhausted).
struct GenerationError : Error {
  using Error::Error;
};

}  // namespace casctree
