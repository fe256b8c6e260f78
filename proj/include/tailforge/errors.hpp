#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tailforge {

// Invalid value handed to an operation (non-positive table entry, negative t, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Two tables (or a table and an index) that should live on the same space don't.
class ShapeError : public std::runtime_error {
 public:
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

// A product space or candidate set larger than the configured cap.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical precondition failed; carries the first offending location.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, std::size_t point_index, std::size_t coordinate)
      : std::runtime_error(what), point_index_(point_index), coordinate_(coordinate) {}
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what), point_index_(0), coordinate_(0) {}

  std::size_t point_index() const { return point_index_; }
  std::size_t coordinate() const { return coordinate_; }

 private:
  std::size_t point_index_;
  std::size_t coordinate_;
};

// Bad run configuration (inconsistent dimensions, unknown keys, unsupported combinations).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure (eigensolver non-convergence, eigenvalue below the clamp window).
// The message carries the seed tag of the offending sample so it can be replayed.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file; message includes position information where available.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tailforge
