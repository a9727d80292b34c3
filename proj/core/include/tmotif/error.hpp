#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tmotif {

/// Malformed or inconsistent input data (files, labels, amounts).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A row of a delimited file could not be parsed.
class ParseError : public DataError {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : DataError(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tmotif
