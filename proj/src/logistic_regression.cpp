#include "tweetlab/logistic_regression.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "tweetlab/errors.hpp"
#include "tweetlab/random.hpp"

namespace tweetlab {

namespace {

double linear_score(std::span<const double> w, double b, const FeatureVector& x) {
  if (w.size() != x.values.size()) {
    throw std::invalid_argument("feature length " + std::to_string(x.values.size()) + " does not match " +
                                std::to_string(w.size()) + " weights");
  }
  double z = b;
  for (std::size_t j = 0; j < w.size(); ++j) z += w[j] * x.values[j];
  return z;
}

}  // namespace

FeatureVector vectorize(const Document& doc, const Vocabulary& vocab) {
  FeatureVector x;
  x.values.assign(vocab.size(), 0.0);
  for (const auto& t : doc.tokens) {
    const long w = vocab.index_of(t);
    if (w >= 0) x.values[static_cast<std::size_t>(w)] += 1.0;
  }
  return x;
}

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double loss(double y_hat, int y) {
  if (!(y_hat > 0.0 && y_hat < 1.0)) throw DomainError("loss needs a probability strictly inside (0, 1)");
  return y == 1 ? -std::log(y_hat) : -std::log1p(-y_hat);
}

Gradient gradient(std::span<const double> w, double b, const FeatureVector& x, int y) {
  const double residual = sigmoid(linear_score(w, b, x)) - static_cast<double>(y);
  Gradient g;
  g.weights.resize(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) g.weights[j] = residual * x.values[j];
  g.bias = residual;
  return g;
}

double mean_loss(const LRModel& model, const std::vector<LabeledFeatures>& data) {
  double total = 0.0;
  for (const auto& [x, y] : data) {
    const double p = sigmoid(linear_score(model.weights, model.bias, x));
    total += loss(std::clamp(p, kProbabilityClamp, 1.0 - kProbabilityClamp), y);
  }
  return total / static_cast<double>(data.size());
}

std::pair<LRModel, TrainTrace> train_lr(const std::vector<LabeledFeatures>& data, double eta, std::size_t epochs,
                                        std::uint64_t seed) {
  if (data.empty()) throw TrainingError("logistic regression needs training data");
  if (!(eta >= 0.0)) throw std::invalid_argument("learning rate must be non-negative");
  if (epochs == 0) throw std::invalid_argument("epochs must be at least 1");
  bool has_pos = false, has_neg = false;
  for (const auto& [x, y] : data) {
    if (y != 0 && y != 1) throw TrainingError("labels must be 0 or 1");
    (y == 1 ? has_pos : has_neg) = true;
  }
  if (!(has_pos && has_neg)) throw TrainingError("logistic regression needs both classes in the training data");

  const std::size_t dim = data.front().first.values.size();
  LRModel model;
  model.weights.assign(dim, 0.0);
  model.learning_rate = eta;
  model.epochs = epochs;
  model.seed = seed;

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  TrainTrace trace;
  trace.epoch_mean_loss.reserve(epochs);
  for (std::size_t epoch = 0; epoch < epochs; ++epoch) {
    deterministic_shuffle(order, rng);
    for (const std::size_t i : order) {
      const auto& [x, y] = data[i];
      const double residual = sigmoid(linear_score(model.weights, model.bias, x)) - static_cast<double>(y);
      const double step = eta * residual;
      // Coordinates with x_j == 0 have zero gradient.
      for (std::size_t j = 0; j < dim; ++j) {
        if (x.values[j] != 0.0) model.weights[j] -= step * x.values[j];
      }
      model.bias -= step;
    }
    trace.epoch_mean_loss.push_back(mean_loss(model, data));
  }
  model.final_mean_loss = trace.epoch_mean_loss.back();
  return {std::move(model), std::move(trace)};
}

LRPrediction predict_lr(const LRModel& model, const FeatureVector& x) {
  LRPrediction out;
  out.probability = sigmoid(linear_score(model.weights, model.bias, x));
  out.label = out.probability > 0.5 ? 1 : 0;
  return out;
}

nlohmann::json to_json(const LRModel& model) {
  return {
      {"format", "tweetlab.lr"},
      {"version", 1},
      {"weights", model.weights},
      {"bias", model.bias},
      {"learning_rate", model.learning_rate},
      {"epochs", model.epochs},
      {"seed", model.seed},
      {"final_mean_loss", model.final_mean_loss},
      {"vocabulary", model.vocabulary.words()},
  };
}

LRModel lr_model_from_json(const nlohmann::json& j) {
  if (j.at("format") != "tweetlab.lr" || j.at("version") != 1) {
    throw std::invalid_argument("not a version-1 logistic regression model");
  }
  LRModel model;
  model.weights = j.at("weights").get<std::vector<double>>();
  model.bias = j.at("bias").get<double>();
  model.learning_rate = j.at("learning_rate").get<double>();
  model.epochs = j.at("epochs").get<std::size_t>();
  model.seed = j.at("seed").get<std::uint64_t>();
  model.final_mean_loss = j.at("final_mean_loss").get<double>();
  model.vocabulary = Vocabulary(j.at("vocabulary").get<std::vector<std::string>>());
  if (!model.vocabulary.empty() && model.vocabulary.size() != model.weights.size()) {
    throw std::invalid_argument("weight count does not match vocabulary size");
  }
  return model;
}

}  // namespace tweetlab
