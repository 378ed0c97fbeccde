#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ufc {

/// Base class for every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed dataset input; `line()` is 1-based, 0 when not tied to a line.
class DatasetError : public Error {
 public:
  DatasetError(const std::string& what, std::size_t line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Expression syntax error at a byte offset of the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Pearson r requested on a table with a zero marginal (a constant feature).
class UndefinedCorrelation : public Error {
 public:
  using Error::Error;
};

}  // namespace ufc
