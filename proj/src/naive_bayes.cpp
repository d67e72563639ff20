#include "tweetlab/naive_bayes.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "tweetlab/errors.hpp"

namespace tweetlab {

std::size_t NBModel::class_index(int label) const {
  auto it = std::find(classes.begin(), classes.end(), label);
  if (it == classes.end()) throw std::out_of_range("unknown class " + std::to_string(label));
  return static_cast<std::size_t>(it - classes.begin());
}

NBModel train_nb(const std::vector<LabeledDocument>& docs, const Vocabulary& vocab, std::vector<int> classes) {
  if (vocab.empty()) throw TrainingError("naive Bayes needs a non-empty vocabulary");
  if (classes.empty()) {
    std::set<int> distinct;
    for (const auto& [doc, label] : docs) distinct.insert(label);
    classes.assign(distinct.begin(), distinct.end());
  }
  if (classes.empty()) throw TrainingError("naive Bayes needs at least one training document");

  NBModel model;
  model.classes = std::move(classes);
  model.vocabulary = vocab;
  const std::size_t n_classes = model.classes.size();
  const std::size_t v = vocab.size();

  std::vector<std::size_t> doc_counts(n_classes, 0);
  std::vector<std::vector<std::size_t>> word_counts(n_classes, std::vector<std::size_t>(v, 0));
  model.class_token_totals.assign(n_classes, 0);
  for (const auto& [doc, label] : docs) {
    const std::size_t c = model.class_index(label);
    ++doc_counts[c];
    for (const auto& t : doc.tokens) {
      const long w = vocab.index_of(t);
      if (w < 0) continue;
      ++word_counts[c][static_cast<std::size_t>(w)];
      ++model.class_token_totals[c];
    }
  }

  const auto n_docs = static_cast<double>(docs.size());
  model.log_prior.resize(n_classes);
  model.log_likelihood.assign(n_classes, std::vector<double>(v));
  for (std::size_t c = 0; c < n_classes; ++c) {
    if (doc_counts[c] == 0) {
      throw TrainingError("class " + std::to_string(model.classes[c]) + " has no training documents");
    }
    model.log_prior[c] = std::log(static_cast<double>(doc_counts[c]) / n_docs);
    const double denom = static_cast<double>(model.class_token_totals[c] + v);
    for (std::size_t w = 0; w < v; ++w) {
      model.log_likelihood[c][w] = std::log(static_cast<double>(word_counts[c][w] + 1) / denom);
    }
  }
  return model;
}

std::vector<double> log_posterior(const NBModel& model, const Document& doc) {
  std::vector<double> score = model.log_prior;
  for (const auto& t : doc.tokens) {
    const long w = model.vocabulary.index_of(t);
    if (w < 0) continue;
    for (std::size_t c = 0; c < score.size(); ++c) score[c] += model.log_likelihood[c][static_cast<std::size_t>(w)];
  }
  return score;
}

int predict_nb(const NBModel& model, const Document& doc) {
  const std::vector<double> score = log_posterior(model, doc);
  std::size_t best = 0;
  for (std::size_t c = 1; c < score.size(); ++c) {
    if (score[c] > score[best]) best = c;
  }
  return model.classes[best];
}

nlohmann::json to_json(const NBModel& model) {
  return {
      {"format", "tweetlab.nb"},
      {"version", 1},
      {"classes", model.classes},
      {"log_prior", model.log_prior},
      {"class_token_totals", model.class_token_totals},
      {"vocabulary", model.vocabulary.words()},
      {"log_likelihood", model.log_likelihood},
  };
}

NBModel nb_model_from_json(const nlohmann::json& j) {
  if (j.at("format") != "tweetlab.nb" || j.at("version") != 1) {
    throw std::invalid_argument("not a version-1 naive Bayes model");
  }
  NBModel model;
  model.classes = j.at("classes").get<std::vector<int>>();
  model.log_prior = j.at("log_prior").get<std::vector<double>>();
  model.class_token_totals = j.at("class_token_totals").get<std::vector<std::size_t>>();
  model.vocabulary = Vocabulary(j.at("vocabulary").get<std::vector<std::string>>());
  model.log_likelihood = j.at("log_likelihood").get<std::vector<std::vector<double>>>();
  return model;
}

}  // namespace tweetlab
