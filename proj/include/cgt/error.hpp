#pragma once

#include <stdexcept>
#include <string>

namespace cgt {

// all library errors derive from this so callers can catch one type
struct Error : std::runtime_error {
  explicit Error(std::string const &what) : std::runtime_error(what) {}
};

struct DegreeMismatch : Error {
  explicit DegreeMismatch(std::string const &what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(std::string const &what) : Error(what) {}
};

// an operation refused to run because a configured bound would be exceeded
// (enumeration bound, degree cap, class-count cap, ...)
struct BoundExceeded : Error {
  explicit BoundExceeded(std::string const &what) : Error(what) {}
};

// a search or iteration exhausted its resource budget; results are never
// silently truncated, the caller sees this instead
struct ResourceLimit : Error {
  explicit ResourceLimit(std::string const &what) : Error(what) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(std::string const &what) : Error(what) {}
};

// something that can only happen if the library itself is wrong
struct InternalError : Error {
  explicit InternalError(std::string const &what) : Error(what) {}
};

} // namespace cgt
