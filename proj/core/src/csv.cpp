#include "tmotif/csv.hpp"

#include <algorithm>

#include "tmotif/error.hpp"

namespace tmotif::csv {
namespace {

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

std::vector<std::string> split_record(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current.push_back(c);
      }
    } else if (c == '"' && !was_quoted && trim(current).empty()) {
      current.clear();
      quoted = true;
      was_quoted = true;
    } else if (was_quoted && (c == ' ' || c == '\t')) {
      continue;
    } else if (c == ',') {
      fields.push_back(was_quoted ? current : trim(current));
      current.clear();
      was_quoted = false;
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(was_quoted ? current : trim(current));
  return fields;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

Reader::Reader(std::istream& in, std::string source_name)
    : in_(in), source_(std::move(source_name)) {}

bool Reader::read_header() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    strip_cr(line);
    if (line_ == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    header_ = split_record(line);
    return true;
  }
  return false;
}

std::optional<std::size_t> Reader::column(std::string_view name) const {
  const auto it = std::find(header_.begin(), header_.end(), name);
  if (it == header_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - header_.begin());
}

std::size_t Reader::require_column(std::string_view name) const {
  if (auto c = column(name)) return *c;
  throw ParseError(source_, line_, "missing column '" + std::string(name) + "' in header");
}

bool Reader::next(std::vector<std::string>& fields) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    strip_cr(line);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    fields = split_record(line);
    return true;
  }
  return false;
}

void Reader::fail(const std::string& what) const { throw ParseError(source_, line_, what); }

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << escape(fields[i]);
  }
  out << '\n';
}

}  // namespace tmotif::csv
