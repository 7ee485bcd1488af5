/// @file errors.hpp
/// @brief Exception taxonomy shared by the library, the CLI and the bindings.
#pragma once

#include <stdexcept>
#include <string>

namespace sdct {

/// Out-of-range element access on a tensor.
class BoundsError : public std::out_of_range {
 public:
  explicit BoundsError(const std::string& what) : std::out_of_range(what) {}
};

/// Rank or dimension mismatch between arguments.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// A transform plan was used with data of a different shape than it was built
/// for — a special case of shape mismatch, hence the inheritance.
class PlanError : public ShapeError {
 public:
  explicit PlanError(const std::string& what) : ShapeError(what) {}
};

/// Malformed file contents (bad magic, truncated payload, unsupported version).
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sdct
