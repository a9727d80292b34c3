#include "tmotif/logistic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "tmotif/error.hpp"

namespace tmotif {
namespace {

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow.
double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

void validate(const FeatureMatrix& X, std::span<const int> y) {
  if (X.rows != y.size()) throw std::invalid_argument("train_logistic: rows(X) != len(y)");
  if (X.rows < 2) throw std::invalid_argument("train_logistic: need at least two rows");
  if (X.cols == 0) throw std::invalid_argument("train_logistic: no features");
  bool pos = false, neg = false;
  for (const int label : y) {
    if (label != 0 && label != 1) throw std::invalid_argument("train_logistic: labels must be 0 or 1");
    (label ? pos : neg) = true;
  }
  if (!pos || !neg) throw std::invalid_argument("train_logistic: both classes must be present");
  for (const double v : X.values) {
    if (!std::isfinite(v)) throw std::invalid_argument("train_logistic: non-finite feature value");
  }
}

}  // namespace

double LogisticModel::predict(std::span<const double> x) const {
  if (x.size() != weights.size()) throw std::invalid_argument("predict: feature dimension mismatch");
  double z = bias;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double v = feature_mean.empty() ? x[j] : (x[j] - feature_mean[j]) / feature_scale[j];
    z += weights[j] * v;
  }
  return sigmoid(z);
}

std::vector<double> LogisticModel::predict(const FeatureMatrix& X) const {
  std::vector<double> out(X.rows);
  for (std::size_t r = 0; r < X.rows; ++r) out[r] = predict(X.row(r));
  return out;
}

LossGradient logistic_loss_gradient(const FeatureMatrix& X, std::span<const int> y,
                                    std::span<const double> weights, double bias, double l2) {
  if (weights.size() != X.cols || y.size() != X.rows) {
    throw std::invalid_argument("logistic_loss_gradient: dimension mismatch");
  }
  LossGradient out;
  out.grad_weights.assign(X.cols, 0.0);
  const double n = static_cast<double>(X.rows);
  for (std::size_t r = 0; r < X.rows; ++r) {
    const auto x = X.row(r);
    double z = bias;
    for (std::size_t j = 0; j < X.cols; ++j) z += weights[j] * x[j];
    out.loss += softplus(z) - y[r] * z;
    const double residual = sigmoid(z) - y[r];
    for (std::size_t j = 0; j < X.cols; ++j) out.grad_weights[j] += residual * x[j];
    out.grad_bias += residual;
  }
  out.loss /= n;
  out.grad_bias /= n;
  double norm = 0.0;
  for (std::size_t j = 0; j < X.cols; ++j) {
    out.grad_weights[j] = out.grad_weights[j] / n + l2 * weights[j];
    norm += weights[j] * weights[j];
  }
  out.loss += 0.5 * l2 * norm;
  return out;
}

LogisticModel train_logistic(const FeatureMatrix& X, std::span<const int> y, const LogisticConfig& config,
                             std::vector<double>* loss_trace) {
  validate(X, y);
  if (!(config.learning_rate > 0) || !(config.l2 >= 0)) {
    throw std::invalid_argument("train_logistic: learning rate must be > 0 and l2 >= 0");
  }
  LogisticModel model;
  model.config = config;
  model.feature_names = X.column_names;

  FeatureMatrix Z = X;
  if (config.standardize) {
    model.feature_mean.assign(X.cols, 0.0);
    model.feature_scale.assign(X.cols, 1.0);
    for (std::size_t j = 0; j < X.cols; ++j) {
      double mean = 0.0;
      for (std::size_t r = 0; r < X.rows; ++r) mean += X.at(r, j);
      mean /= static_cast<double>(X.rows);
      double var = 0.0;
      for (std::size_t r = 0; r < X.rows; ++r) var += (X.at(r, j) - mean) * (X.at(r, j) - mean);
      const double sd = std::sqrt(var / static_cast<double>(X.rows));
      model.feature_mean[j] = mean;
      model.feature_scale[j] = sd > 1e-12 ? sd : 1.0;
      for (std::size_t r = 0; r < X.rows; ++r) Z.at(r, j) = (X.at(r, j) - mean) / model.feature_scale[j];
    }
  }

  model.weights.assign(X.cols, 0.0);
  if (loss_trace) loss_trace->clear();
  LossGradient step;
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    step = logistic_loss_gradient(Z, y, model.weights, model.bias, config.l2);
    if (loss_trace) loss_trace->push_back(step.loss);
    for (std::size_t j = 0; j < X.cols; ++j) model.weights[j] -= config.learning_rate * step.grad_weights[j];
    model.bias -= config.learning_rate * step.grad_bias;
  }
  model.final_loss = logistic_loss_gradient(Z, y, model.weights, model.bias, config.l2).loss;
  if (loss_trace) loss_trace->push_back(model.final_loss);
  return model;
}

std::vector<FeatureImportance> feature_importance(const LogisticModel& model,
                                                  std::span<const std::string> names) {
  if (!model.trained()) throw std::logic_error("feature_importance: model is not trained");
  if (names.size() != model.weights.size()) {
    throw std::invalid_argument("feature_importance: name count does not match weights");
  }
  std::vector<FeatureImportance> out;
  for (std::size_t j = 0; j < names.size(); ++j) out.push_back({names[j], j, model.weights[j]});
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::abs(a.weight) > std::abs(b.weight);
  });
  return out;
}

void save_model(std::ostream& out, const LogisticModel& model) {
  nlohmann::ordered_json doc;
  doc["type"] = "logistic_regression";
  doc["feature_names"] = model.feature_names;
  doc["weights"] = model.weights;
  doc["bias"] = model.bias;
  doc["feature_mean"] = model.feature_mean;
  doc["feature_scale"] = model.feature_scale;
  doc["final_loss"] = model.final_loss;
  doc["config"] = {{"learning_rate", model.config.learning_rate},
                   {"epochs", model.config.epochs},
                   {"l2", model.config.l2},
                   {"seed", model.config.seed},
                   {"standardize", model.config.standardize}};
  out << doc.dump(2) << '\n';
}

LogisticModel load_model(std::istream& in) {
  try {
    const auto doc = nlohmann::json::parse(in);
    if (doc.at("type") != "logistic_regression") throw DataError("model: unsupported type");
    LogisticModel m;
    m.feature_names = doc.at("feature_names").get<std::vector<std::string>>();
    m.weights = doc.at("weights").get<std::vector<double>>();
    m.bias = doc.at("bias").get<double>();
    m.feature_mean = doc.at("feature_mean").get<std::vector<double>>();
    m.feature_scale = doc.at("feature_scale").get<std::vector<double>>();
    m.final_loss = doc.at("final_loss").get<double>();
    const auto& c = doc.at("config");
    m.config.learning_rate = c.at("learning_rate").get<double>();
    m.config.epochs = c.at("epochs").get<std::size_t>();
    m.config.l2 = c.at("l2").get<double>();
    m.config.seed = c.at("seed").get<std::uint64_t>();
    m.config.standardize = c.at("standardize").get<bool>();
    const std::size_t d = m.weights.size();
    if (m.feature_names.size() != d || (!m.feature_mean.empty() && m.feature_mean.size() != d) ||
        m.feature_scale.size() != m.feature_mean.size()) {
      throw DataError("model: inconsistent dimensions");
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("model: ") + e.what());
  }
}

}  // namespace tmotif
