#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace tmotif::csv {

/// Splits one CSV record. Handles double-quoted fields with "" escapes;
/// quoted fields may not span lines. Unquoted fields are trimmed; blanks
/// around a quoted field are dropped.
std::vector<std::string> split_record(std::string_view line);

/// Quotes a field only when it contains a comma, quote, or line break.
std::string escape(std::string_view field);

/// Line-oriented reader that tracks 1-based line numbers for error reporting.
class Reader {
 public:
  Reader(std::istream& in, std::string source_name);

  /// Reads the header row. Returns false on an empty stream.
  bool read_header();
  const std::vector<std::string>& header() const { return header_; }
  std::optional<std::size_t> column(std::string_view name) const;
  std::size_t require_column(std::string_view name) const;

  /// Next non-blank record; false at end of input.
  bool next(std::vector<std::string>& fields);

  std::size_t line() const { return line_; }
  const std::string& source() const { return source_; }

  [[noreturn]] void fail(const std::string& what) const;

 private:
  std::istream& in_;
  std::string source_;
  std::vector<std::string> header_;
  std::size_t line_ = 0;
};

void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace tmotif::csv
