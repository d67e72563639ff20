#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tweetlab/text_pipeline.hpp"

namespace tweetlab {

using LabeledDocument = std::pair<Document, int>;

/// Multinomial Naive Bayes with add-one smoothing, stored in log space.
struct NBModel {
  std::vector<int> classes;                        // declaration order breaks ties
  std::vector<double> log_prior;                   // per class
  std::vector<std::vector<double>> log_likelihood; // [class][word index]
  std::vector<std::size_t> class_token_totals;     // in-vocabulary tokens per class
  Vocabulary vocabulary;

  std::size_t class_index(int label) const;
};

/// Classes default to the sorted distinct labels of `docs`. Throws
/// TrainingError for an empty vocabulary or a class without documents.
NBModel train_nb(const std::vector<LabeledDocument>& docs, const Vocabulary& vocab, std::vector<int> classes = {});

/// Log prior plus per-position log likelihoods; OOV tokens skipped.
std::vector<double> log_posterior(const NBModel& model, const Document& doc);

int predict_nb(const NBModel& model, const Document& doc);

nlohmann::json to_json(const NBModel& model);
NBModel nb_model_from_json(const nlohmann::json& j);

}  // namespace tweetlab
