#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace tmotif {

/// Dense row-major matrix of named features.
struct FeatureMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;
  std::vector<std::string> column_names;

  FeatureMatrix() = default;
  FeatureMatrix(std::size_t r, std::vector<std::string> names)
      : rows(r), cols(names.size()), values(r * names.size(), 0.0), column_names(std::move(names)) {}

  std::span<double> row(std::size_t r) { return {values.data() + r * cols, cols}; }
  std::span<const double> row(std::size_t r) const { return {values.data() + r * cols, cols}; }
  double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }

  /// Rows picked by index, in the given order.
  FeatureMatrix select_rows(std::span<const std::size_t> picks) const;
  /// Columns of `other` appended to the right; row counts must match.
  FeatureMatrix hconcat(const FeatureMatrix& other) const;
};

/// Feature-matrix CSV: id columns, one column per feature, optional `label`.
/// `ids[r]` supplies the id column values of row r.
void write_feature_csv(std::ostream& out, const FeatureMatrix& m,
                       std::span<const std::string> id_headers,
                       std::span<const std::vector<std::string>> ids,
                       std::optional<std::span<const int>> labels = std::nullopt);

/// Shortest decimal text that round-trips the value.
std::string format_double(double v);

}  // namespace tmotif
