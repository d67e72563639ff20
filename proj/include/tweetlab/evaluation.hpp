#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "tweetlab/naive_bayes.hpp"

namespace tweetlab {

/// Documents with char_length strictly below `max_chars`.
struct LengthBucket {
  std::size_t max_chars = 77;

  explicit LengthBucket(std::size_t max) : max_chars(max) {
    if (max == 0) throw std::invalid_argument("bucket bound must be positive");
  }
  bool contains(const Document& doc) const { return doc.char_length < max_chars; }
  std::string name() const { return "lt" + std::to_string(max_chars); }
};

/// Rows are the actual class (negative first), columns the predicted class.
struct ConfusionMatrix {
  std::size_t tn = 0, fp = 0, fn = 0, tp = 0;

  std::size_t total() const { return tn + fp + fn + tp; }
  bool operator==(const ConfusionMatrix&) const = default;
};

ConfusionMatrix confusion(std::span<const int> predictions, std::span<const int> actuals);

struct Metrics {
  double accuracy = 0.0;
  std::optional<double> sensitivity;  // undefined when there are no actual positives
  std::optional<double> specificity;  // undefined when there are no actual negatives
};

/// Throws UndefinedMetric on an empty matrix.
Metrics metrics(const ConfusionMatrix& m);

struct Split {
  std::vector<LabeledDocument> train;
  std::vector<LabeledDocument> test;
};

/// Filters to the bucket, draws test_size/2 documents of each class into the
/// test set, then downsamples the remaining majority class so train is
/// balanced. Labels must be 0 or 1. Throws SplitError naming the deficient
/// class; std::invalid_argument for an odd test size.
Split balanced_split(const std::vector<LabeledDocument>& corpus, const LengthBucket& bucket, std::size_t test_size,
                     std::uint64_t seed);

struct EvaluationReport {
  std::string classifier;
  LengthBucket bucket{77};
  ConfusionMatrix matrix;
  Metrics scores;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  std::uint64_t seed = 0;
};

nlohmann::json to_json(const EvaluationReport& report);

}  // namespace tweetlab
