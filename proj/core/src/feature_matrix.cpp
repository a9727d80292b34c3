#include "tmotif/feature_matrix.hpp"

#include <charconv>
#include <stdexcept>

#include "tmotif/csv.hpp"

namespace tmotif {

FeatureMatrix FeatureMatrix::select_rows(std::span<const std::size_t> picks) const {
  FeatureMatrix out(picks.size(), column_names);
  for (std::size_t r = 0; r < picks.size(); ++r) {
    const auto src = row(picks[r]);
    std::copy(src.begin(), src.end(), out.row(r).begin());
  }
  return out;
}

FeatureMatrix FeatureMatrix::hconcat(const FeatureMatrix& other) const {
  if (other.rows != rows) throw std::invalid_argument("hconcat: row counts differ");
  std::vector<std::string> names = column_names;
  names.insert(names.end(), other.column_names.begin(), other.column_names.end());
  FeatureMatrix out(rows, std::move(names));
  for (std::size_t r = 0; r < rows; ++r) {
    auto dst = out.row(r);
    const auto a = row(r);
    const auto b = other.row(r);
    std::copy(a.begin(), a.end(), dst.begin());
    std::copy(b.begin(), b.end(), dst.begin() + static_cast<std::ptrdiff_t>(cols));
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

void write_feature_csv(std::ostream& out, const FeatureMatrix& m,
                       std::span<const std::string> id_headers,
                       std::span<const std::vector<std::string>> ids,
                       std::optional<std::span<const int>> labels) {
  if (ids.size() != m.rows) throw std::invalid_argument("write_feature_csv: id count != rows");
  if (labels && labels->size() != m.rows) throw std::invalid_argument("write_feature_csv: label count != rows");
  std::vector<std::string> row(id_headers.begin(), id_headers.end());
  row.insert(row.end(), m.column_names.begin(), m.column_names.end());
  if (labels) row.emplace_back("label");
  csv::write_row(out, row);
  for (std::size_t r = 0; r < m.rows; ++r) {
    row = ids[r];
    for (const double v : m.row(r)) row.push_back(format_double(v));
    if (labels) row.push_back(std::to_string((*labels)[r]));
    csv::write_row(out, row);
  }
}

}  // namespace tmotif
