#include "tweetlab/evaluation.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "tweetlab/errors.hpp"
#include "tweetlab/random.hpp"

namespace tweetlab {

ConfusionMatrix confusion(std::span<const int> predictions, std::span<const int> actuals) {
  if (predictions.size() != actuals.size()) {
    throw std::invalid_argument("predictions and actuals differ in length");
  }
  ConfusionMatrix m;
  for (std::size_t i = 0; i < actuals.size(); ++i) {
    const bool actual = actuals[i] == 1;
    const bool predicted = predictions[i] == 1;
    if (actual && predicted) ++m.tp;
    else if (actual) ++m.fn;
    else if (predicted) ++m.fp;
    else ++m.tn;
  }
  return m;
}

Metrics metrics(const ConfusionMatrix& m) {
  if (m.total() == 0) throw UndefinedMetric("accuracy of an empty confusion matrix");
  Metrics out;
  out.accuracy = static_cast<double>(m.tp + m.tn) / static_cast<double>(m.total());
  if (m.tp + m.fn > 0) out.sensitivity = static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fn);
  if (m.tn + m.fp > 0) out.specificity = static_cast<double>(m.tn) / static_cast<double>(m.tn + m.fp);
  return out;
}

Split balanced_split(const std::vector<LabeledDocument>& corpus, const LengthBucket& bucket, std::size_t test_size,
                     std::uint64_t seed) {
  if (test_size % 2 != 0) throw std::invalid_argument("test size must be even");
  const std::size_t per_class = test_size / 2;

  std::vector<std::size_t> members[2];
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& [doc, label] = corpus[i];
    if (label != 0 && label != 1) throw std::invalid_argument("labels must be 0 or 1");
    if (bucket.contains(doc)) members[label].push_back(i);
  }
  for (int c = 0; c < 2; ++c) {
    if (members[c].size() < per_class) {
      throw SplitError("bucket " + bucket.name() + " has " + std::to_string(members[c].size()) + " documents of class " +
                           std::to_string(c) + ", need " + std::to_string(per_class),
                       c);
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> test_idx, train_idx;
  std::vector<std::size_t> rest[2];
  for (int c = 0; c < 2; ++c) {
    deterministic_shuffle(members[c], rng);
    test_idx.insert(test_idx.end(), members[c].begin(), members[c].begin() + static_cast<long>(per_class));
    rest[c].assign(members[c].begin() + static_cast<long>(per_class), members[c].end());
  }
  const std::size_t train_per_class = std::min(rest[0].size(), rest[1].size());
  for (int c = 0; c < 2; ++c) {
    train_idx.insert(train_idx.end(), rest[c].begin(), rest[c].begin() + static_cast<long>(train_per_class));
  }
  std::sort(test_idx.begin(), test_idx.end());
  std::sort(train_idx.begin(), train_idx.end());

  Split split;
  for (std::size_t i : train_idx) split.train.push_back(corpus[i]);
  for (std::size_t i : test_idx) split.test.push_back(corpus[i]);
  return split;
}

nlohmann::json to_json(const EvaluationReport& r) {
  auto optional_metric = [](const std::optional<double>& v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  return {
      {"classifier", r.classifier},
      {"bucket", {{"name", r.bucket.name()}, {"max_chars", r.bucket.max_chars}}},
      {"matrix", {{"tn", r.matrix.tn}, {"fp", r.matrix.fp}, {"fn", r.matrix.fn}, {"tp", r.matrix.tp}}},
      {"accuracy", r.scores.accuracy},
      {"sensitivity", optional_metric(r.scores.sensitivity)},
      {"specificity", optional_metric(r.scores.specificity)},
      {"train_size", r.train_size},
      {"test_size", r.test_size},
      {"seed", r.seed},
  };
}

}  // namespace tweetlab
