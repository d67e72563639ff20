#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tweetlab/text_pipeline.hpp"

namespace tweetlab {

/// Dense bag-of-words term counts; the bias input is implicit.
struct FeatureVector {
  std::vector<double> values;
};

FeatureVector vectorize(const Document& doc, const Vocabulary& vocab);

double sigmoid(double z);

/// Cross-entropy of predicted probability `y_hat` against label `y`.
/// Throws DomainError when y_hat is 0 or 1 (or outside [0,1]).
double loss(double y_hat, int y);

/// Probability clamp applied before `loss` during training only.
inline constexpr double kProbabilityClamp = 1e-12;

struct Gradient {
  std::vector<double> weights;
  double bias = 0.0;
};

Gradient gradient(std::span<const double> w, double b, const FeatureVector& x, int y);

struct LRModel {
  std::vector<double> weights;
  double bias = 0.0;
  double learning_rate = 0.1;
  std::size_t epochs = 100;
  std::uint64_t seed = 0;
  double final_mean_loss = 0.0;
  Vocabulary vocabulary;  // empty when trained on raw feature vectors
};

struct TrainTrace {
  std::vector<double> epoch_mean_loss;  // full-data mean loss after each epoch
};

using LabeledFeatures = std::pair<FeatureVector, int>;

/// Plain per-example SGD from zero weights; each epoch visits the examples in
/// an order shuffled by a generator seeded with `seed`.
std::pair<LRModel, TrainTrace> train_lr(const std::vector<LabeledFeatures>& data, double eta, std::size_t epochs,
                                        std::uint64_t seed);

struct LRPrediction {
  double probability = 0.5;
  int label = 0;
};

/// Class 1 only when the probability strictly exceeds 0.5.
LRPrediction predict_lr(const LRModel& model, const FeatureVector& x);

double mean_loss(const LRModel& model, const std::vector<LabeledFeatures>& data);

nlohmann::json to_json(const LRModel& model);
LRModel lr_model_from_json(const nlohmann::json& j);

}  // namespace tweetlab
