#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tmotif/feature_matrix.hpp"
#include "tmotif/logistic.hpp"

namespace tmotif {

struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double auc_roc = 0.5;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;
};

/// 2pr/(p+r), or 0 when p + r = 0.
double f1_score(double precision, double recall);

/// Precision, recall and F1 from confusion counts; precision (recall) is 0
/// when nothing is predicted (present) positive. auc_roc stays 0.5.
Metrics metrics_from_confusion(std::size_t tp, std::size_t fp, std::size_t tn, std::size_t fn);

/// Mann-Whitney AUC with mid-rank ties: P(score+ > score-) + ½P(tie).
/// Returns 0.5 when either class is absent.
double auc_roc(std::span<const int> labels, std::span<const double> scores);

/// Thresholded confusion metrics (score >= threshold predicts 1) plus
/// rank-based AUC. Throws std::invalid_argument on length mismatch or
/// non-finite scores.
Metrics evaluate(std::span<const int> labels, std::span<const double> scores, double threshold = 0.5);

/// Returns test-set scores of a model fit on the training rows.
using Trainer = std::function<std::vector<double>(const FeatureMatrix& train, std::span<const int> train_labels,
                                                  const FeatureMatrix& test)>;

Trainer logistic_trainer(const LogisticConfig& config);

struct HoldoutConfig {
  double train_fraction = 0.75;
  std::size_t repeats = 25;
  std::uint64_t seed = 0;
  double threshold = 0.5;
};

struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// Stratified split: round(fraction·n) training rows overall, with
/// round(fraction·n_pos) of them positive. Both sides keep both classes.
Split stratified_split(std::span<const int> labels, double train_fraction, std::uint64_t seed);

struct HoldoutResult {
  /// Component-wise mean of precision/recall/F1/AUC; confusion counts are
  /// totals over all repeats.
  Metrics mean;
  std::vector<Metrics> runs;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
};

/// Repeats stratified splitting, training and evaluation; repeat r uses
/// seed + r. Throws std::invalid_argument when the fraction is outside
/// (0, 1), repeats is 0, or a split cannot keep both classes in train.
HoldoutResult repeated_holdout(const FeatureMatrix& X, std::span<const int> labels,
                               const HoldoutConfig& config, const Trainer& trainer);

}  // namespace tmotif
