#pragma once

#include <stdexcept>
#include <string>

namespace hopfgraph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed a configured cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Operation requested for a configuration that does not support it.
class UnsupportedConfig : public Error {
 public:
  using Error::Error;
};

// A broken invariant inside the library.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace hopfgraph
