#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tmotif/feature_matrix.hpp"

namespace tmotif {

struct LogisticConfig {
  double learning_rate = 0.5;
  std::size_t epochs = 1500;
  double l2 = 1e-3;
  /// Recorded for provenance; full-batch descent from a zero start does not
  /// consume randomness.
  std::uint64_t seed = 0;
  /// Z-score each feature with training-set statistics before fitting.
  bool standardize = true;
};

/// Binary logistic regression p(y=1|x) = sigmoid(w·z(x) + b), where z is the
/// stored standardization (identity when disabled).
struct LogisticModel {
  std::vector<double> weights;
  double bias = 0.0;
  LogisticConfig config;
  std::vector<std::string> feature_names;
  std::vector<double> feature_mean;
  std::vector<double> feature_scale;
  double final_loss = 0.0;

  bool trained() const { return !weights.empty(); }
  double predict(std::span<const double> x) const;
  std::vector<double> predict(const FeatureMatrix& X) const;
};

struct LossGradient {
  double loss = 0.0;
  std::vector<double> grad_weights;
  double grad_bias = 0.0;
};

/// Mean log-loss plus (l2/2)·||w||² (bias unpenalized) and its gradient,
/// evaluated on X as given.
LossGradient logistic_loss_gradient(const FeatureMatrix& X, std::span<const int> y,
                                    std::span<const double> weights, double bias, double l2);

/// Full-batch gradient descent. Throws std::invalid_argument on dimension
/// mismatch, fewer than two rows, labels outside {0,1}, a single class, or
/// non-finite features. `loss_trace`, when given, receives the loss before
/// every epoch and after the last.
LogisticModel train_logistic(const FeatureMatrix& X, std::span<const int> y, const LogisticConfig& config,
                             std::vector<double>* loss_trace = nullptr);

struct FeatureImportance {
  std::string name;
  std::size_t index = 0;
  double weight = 0.0;
};

/// Features by |weight| descending, ties by index. Throws std::logic_error
/// for an untrained model and std::invalid_argument on a name-count mismatch.
std::vector<FeatureImportance> feature_importance(const LogisticModel& model,
                                                  std::span<const std::string> names);

void save_model(std::ostream& out, const LogisticModel& model);
LogisticModel load_model(std::istream& in);

}  // namespace tmotif
