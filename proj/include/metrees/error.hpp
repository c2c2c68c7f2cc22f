#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metrees {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `offset` locates the first offending byte; for
// line-oriented formats (b-files) it is a 1-based line number instead,
// as stated in the message.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  struct at_line_t {};
  ParseError(const std::string& what, std::size_t line, at_line_t)
      : Error(what + " (at line " + std::to_string(line) + ")"), offset_(line) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

// Well-formed value outside an operation's domain (e.g. the single-node
// tree fed to the bijection).
class DomainError : public Error {
public:
  using Error::Error;
};

}  // namespace metrees
