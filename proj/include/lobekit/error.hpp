#pragma once

#include <stdexcept>
#include <string>

namespace lobekit {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (graph files, build specs, maps).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Text parse failure; carries the 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An operation was called outside its domain (disconnected graph, bad lobe id, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (vertex count, group degree) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace lobekit
