#pragma once

#include <stdexcept>
#include <string>

namespace gtdraw {

// Base for errors that mean "the input (or request) is unusable".
// cli_exit() is the process exit code the command-line tool maps this to.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual int cli_exit() const { return 2; }
};

// Malformed file content; `path` is a JSON-pointer-ish location when known.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& what, std::string path = "")
      : Error(path.empty() ? what : what + " (at " + path + ")"), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class RationalParseError : public Error {
 public:
  using Error::Error;
};

class ModeMismatchError : public Error {
 public:
  using Error::Error;
};

// Two sweep events at the same angle parameter; the sweep order is undefined.
class CoincidentAnglesError : public Error {
 public:
  using Error::Error;
};

// A probe vertex sits at exactly the same radius as a boundary arc.
class DegenerateRadiusError : public Error {
 public:
  using Error::Error;
};

// Two arcs leave a vertex in exactly the same direction.
class AmbiguousRotationError : public Error {
 public:
  using Error::Error;
};

// Randomized search ran out of node budget before finding a completion.
class SearchExhaustedError : public Error {
 public:
  using Error::Error;
  int cli_exit() const override { return 3; }
};

}  // namespace gtdraw
