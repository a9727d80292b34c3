#include "tmotif/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tmotif/random.hpp"

namespace tmotif {

double f1_score(double precision, double recall) {
  const double denom = precision + recall;
  return denom > 0.0 ? 2.0 * precision * recall / denom : 0.0;
}

Metrics metrics_from_confusion(std::size_t tp, std::size_t fp, std::size_t tn, std::size_t fn) {
  Metrics m;
  m.tp = tp;
  m.fp = fp;
  m.tn = tn;
  m.fn = fn;
  m.precision = tp + fp ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
  m.recall = tp + fn ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
  m.f1 = f1_score(m.precision, m.recall);
  return m;
}

double auc_roc(std::span<const int> labels, std::span<const double> scores) {
  if (labels.size() != scores.size()) throw std::invalid_argument("auc_roc: length mismatch");
  const std::size_t n = labels.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  double rank_sum = 0.0;
  std::size_t positives = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) ++j;
    const double mid_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) {
      if (labels[order[k]] == 1) {
        rank_sum += mid_rank;
        ++positives;
      }
    }
    i = j;
  }
  const std::size_t negatives = n - positives;
  if (positives == 0 || negatives == 0) return 0.5;
  const double p = static_cast<double>(positives);
  return (rank_sum - p * (p + 1.0) / 2.0) / (p * static_cast<double>(negatives));
}

Metrics evaluate(std::span<const int> labels, std::span<const double> scores, double threshold) {
  if (labels.size() != scores.size()) throw std::invalid_argument("evaluate: length mismatch");
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!std::isfinite(scores[i])) throw std::invalid_argument("evaluate: non-finite score");
    const bool predicted = scores[i] >= threshold;
    if (labels[i] == 1) {
      ++(predicted ? tp : fn);
    } else {
      ++(predicted ? fp : tn);
    }
  }
  Metrics m = metrics_from_confusion(tp, fp, tn, fn);
  m.auc_roc = auc_roc(labels, scores);
  return m;
}

Trainer logistic_trainer(const LogisticConfig& config) {
  return [config](const FeatureMatrix& train, std::span<const int> labels, const FeatureMatrix& test) {
    return train_logistic(train, labels, config).predict(test);
  };
}

Split stratified_split(std::span<const int> labels, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw std::invalid_argument("stratified_split: fraction must be in (0, 1)");
  }
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < labels.size(); ++i) (labels[i] == 1 ? pos : neg).push_back(i);
  const auto total_train = static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(labels.size())));
  auto pos_train = static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(pos.size())));
  pos_train = std::min(pos_train, total_train);
  const std::size_t neg_train = total_train - pos_train;
  if (pos_train == 0 || neg_train == 0 || pos_train > pos.size() || neg_train > neg.size()) {
    throw std::invalid_argument("stratified_split: training side would lack a class");
  }
  Rng rng(seed);
  rng.shuffle(std::span<std::size_t>(pos));
  rng.shuffle(std::span<std::size_t>(neg));
  Split s;
  s.train.insert(s.train.end(), pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(pos_train));
  s.train.insert(s.train.end(), neg.begin(), neg.begin() + static_cast<std::ptrdiff_t>(neg_train));
  s.test.insert(s.test.end(), pos.begin() + static_cast<std::ptrdiff_t>(pos_train), pos.end());
  s.test.insert(s.test.end(), neg.begin() + static_cast<std::ptrdiff_t>(neg_train), neg.end());
  std::sort(s.train.begin(), s.train.end());
  std::sort(s.test.begin(), s.test.end());
  return s;
}

HoldoutResult repeated_holdout(const FeatureMatrix& X, std::span<const int> labels,
                               const HoldoutConfig& config, const Trainer& trainer) {
  if (X.rows != labels.size()) throw std::invalid_argument("repeated_holdout: rows(X) != len(y)");
  if (config.repeats == 0) throw std::invalid_argument("repeated_holdout: repeats must be >= 1");
  HoldoutResult result;
  for (std::size_t r = 0; r < config.repeats; ++r) {
    const Split split = stratified_split(labels, config.train_fraction, config.seed + r);
    std::vector<int> y_train, y_test;
    for (const auto i : split.train) y_train.push_back(labels[i]);
    for (const auto i : split.test) y_test.push_back(labels[i]);
    const auto scores = trainer(X.select_rows(split.train), y_train, X.select_rows(split.test));
    result.runs.push_back(evaluate(y_test, scores, config.threshold));
    result.train_size = split.train.size();
    result.test_size = split.test.size();
  }
  Metrics& mean = result.mean;
  mean.auc_roc = 0.0;
  for (const Metrics& m : result.runs) {
    mean.precision += m.precision;
    mean.recall += m.recall;
    mean.f1 += m.f1;
    mean.auc_roc += m.auc_roc;
    mean.tp += m.tp;
    mean.fp += m.fp;
    mean.tn += m.tn;
    mean.fn += m.fn;
  }
  const double n = static_cast<double>(result.runs.size());
  mean.precision /= n;
  mean.recall /= n;
  mean.f1 /= n;
  mean.auc_roc /= n;
  return result;
}

}  // namespace tmotif
