#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the library's numerical code paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tweetlab/logistic_regression.hpp"
#include "tweetlab/naive_bayes.hpp"
#include "tweetlab/text_pipeline.hpp"

namespace oracle {

#ifndef TWEETLAB_SOURCE_DIR
#define TWEETLAB_SOURCE_DIR "."
#endif

inline std::string source_path(const std::string& relative) { return std::string(TWEETLAB_SOURCE_DIR) + "/" + relative; }

/// Naive Bayes by direct multiplication of smoothed probabilities: prior times
/// the product over token positions of (count + 1) / (class total + |V|).
/// Counts are recomputed from the raw training documents.
inline int brute_force_nb(const std::vector<tweetlab::LabeledDocument>& train, const std::vector<std::string>& vocab,
                          const std::vector<int>& classes, const std::vector<std::string>& doc) {
  auto in_vocab = [&](const std::string& w) { return std::find(vocab.begin(), vocab.end(), w) != vocab.end(); };
  int best_class = classes.front();
  long double best = -1.0L;
  for (int c : classes) {
    std::map<std::string, long> count;
    long total = 0;
    long docs_in_class = 0;
    for (const auto& [d, label] : train) {
      if (label != c) continue;
      ++docs_in_class;
      for (const auto& t : d.tokens) {
        if (!in_vocab(t)) continue;
        ++count[t];
        ++total;
      }
    }
    long double product = static_cast<long double>(docs_in_class) / static_cast<long double>(train.size());
    for (const auto& t : doc) {
      if (!in_vocab(t)) continue;
      product *= static_cast<long double>(count[t] + 1) / static_cast<long double>(total + static_cast<long>(vocab.size()));
    }
    if (product > best) {
      best = product;
      best_class = c;
    }
  }
  return best_class;
}

/// Cross-entropy written through softplus, stable for large |z|.
inline double stable_loss(const std::vector<double>& w, double b, const std::vector<double>& x, int y) {
  double z = b;
  for (std::size_t j = 0; j < w.size(); ++j) z += w[j] * x[j];
  auto softplus = [](double t) { return t > 0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t)); };
  return y == 1 ? softplus(-z) : softplus(z);
}

/// Central finite differences of the loss in every weight and the bias; the
/// bias derivative is the last element.
inline std::vector<double> finite_difference_gradient(const std::vector<double>& w, double b,
                                                      const std::vector<double>& x, int y, double step) {
  std::vector<double> g;
  for (std::size_t j = 0; j < w.size(); ++j) {
    auto plus = w, minus = w;
    plus[j] += step;
    minus[j] -= step;
    g.push_back((stable_loss(plus, b, x, y) - stable_loss(minus, b, x, y)) / (2 * step));
  }
  g.push_back((stable_loss(w, b + step, x, y) - stable_loss(w, b - step, x, y)) / (2 * step));
  return g;
}

/// LOWESS straight from its definition: sort all distances to find the
/// bandwidth, then solve the weighted 2x2 normal equations by Cramer's rule
/// on raw (uncentred) moments.
inline std::vector<double> reference_lowess(const std::vector<double>& xs, const std::vector<double>& ys,
                                            double fraction, int iterations) {
  const std::size_t n = xs.size();
  std::size_t r = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n)));
  r = std::min(std::max<std::size_t>(r, 2), n);
  std::vector<double> robust(n, 1.0), fit(n);
  for (int pass = 0; pass <= iterations; ++pass) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> d(n);
      for (std::size_t j = 0; j < n; ++j) d[j] = std::fabs(xs[j] - xs[i]);
      std::vector<double> sorted = d;
      std::sort(sorted.begin(), sorted.end());
      const double h = sorted[r - 1];
      long double s0 = 0, s1 = 0, s2 = 0, t0 = 0, t1 = 0;
      for (std::size_t j = 0; j < n; ++j) {
        const double u = d[j] / h;
        const double wt = u < 1 ? std::pow(1 - u * u * u, 3) * robust[j] : 0.0;
        s0 += wt;
        s1 += wt * xs[j];
        s2 += wt * xs[j] * xs[j];
        t0 += wt * ys[j];
        t1 += wt * xs[j] * ys[j];
      }
      const long double det = s0 * s2 - s1 * s1;
      if (std::fabs(static_cast<double>(det)) < 1e-12 * static_cast<double>(s0 * s0)) {
        fit[i] = static_cast<double>(t0 / s0);
      } else {
        const long double intercept = (t0 * s2 - s1 * t1) / det;
        const long double slope = (s0 * t1 - s1 * t0) / det;
        fit[i] = static_cast<double>(intercept + slope * xs[i]);
      }
    }
    if (pass == iterations) break;
    std::vector<double> res(n);
    for (std::size_t j = 0; j < n; ++j) res[j] = std::fabs(ys[j] - fit[j]);
    std::vector<double> sorted = res;
    std::sort(sorted.begin(), sorted.end());
    const double med = n % 2 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2;
    if (med == 0) break;
    for (std::size_t j = 0; j < n; ++j) {
      const double u = (ys[j] - fit[j]) / (6 * med);
      robust[j] = std::fabs(u) < 1 ? (1 - u * u) * (1 - u * u) : 0.0;
    }
  }
  return fit;
}

/// 50 points of a sine with deterministic pseudo-noise and uneven spacing.
inline std::pair<std::vector<double>, std::vector<double>> noisy_sine() {
  std::vector<double> xs, ys;
  double x = 0.0;
  for (int i = 0; i < 50; ++i) {
    x += 0.15 + 0.1 * std::fabs(std::sin(i * 1.7));
    xs.push_back(x);
    ys.push_back(std::sin(x) + 0.3 * std::sin(i * 12.9898) * std::cos(i * 78.233));
  }
  return {xs, ys};
}

/// 200 points in two clusters, (4,1)-centred for class 1 and (1,4)-centred
/// for class 0, each jittered within +-1: separable by x1 > x2.
inline std::vector<tweetlab::LabeledFeatures> separable_fixture(std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  auto jitter = [&] { return static_cast<double>(rng() % 2001) / 1000.0 - 1.0; };
  std::vector<tweetlab::LabeledFeatures> data;
  for (int i = 0; i < 200; ++i) {
    const int y = i % 2;
    const double cx = y == 1 ? 4.0 : 1.0;
    const double cy = y == 1 ? 1.0 : 4.0;
    data.push_back({tweetlab::FeatureVector{{cx + jitter(), cy + jitter()}}, y});
  }
  return data;
}

/// Labeled documents whose per-token label signal weakens with length.
/// Short documents (5 tokens, under 77 characters) draw each token from the
/// label's sentiment words with probability 0.6, agreeing with the label 85%
/// of the time; long documents (15 tokens, 77..119 characters) use
/// probability 0.2 and 65% agreement. Remaining tokens are neutral filler.
inline std::vector<tweetlab::LabeledDocument> diluted_corpus(std::uint64_t seed, std::size_t short_per_class,
                                                            std::size_t long_per_class) {
  std::mt19937_64 rng(seed);
  auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto word = [](const char* prefix, std::uint64_t k) {
    std::string w = prefix;
    w += static_cast<char>('0' + k / 10);
    w += static_cast<char>('0' + k % 10);
    return w;  // 5 characters
  };
  std::vector<tweetlab::LabeledDocument> corpus;
  auto make = [&](int label, std::size_t length, double p_signal, double agree) {
    tweetlab::Document doc;
    for (std::size_t t = 0; t < length; ++t) {
      if (uniform() < p_signal) {
        const bool agrees = uniform() < agree;
        const bool positive = (label == 1) == agrees;
        doc.tokens.push_back(word(positive ? "pos" : "neg", rng() % 20));
      } else {
        doc.tokens.push_back(word("neu", rng() % 100));
      }
    }
    doc.char_length = length * 6 - 1;  // space-joined 5-character tokens
    doc.record_id = std::to_string(corpus.size());
    corpus.emplace_back(std::move(doc), label);
  };
  for (int label = 0; label < 2; ++label) {
    for (std::size_t i = 0; i < short_per_class; ++i) make(label, 5, 0.6, 0.85);
    for (std::size_t i = 0; i < long_per_class; ++i) make(label, 15, 0.2, 0.65);
  }
  return corpus;
}

/// (word, stem) pairs from the published Porter reference vocabulary and its
/// output file, cross-checked against an independent implementation.
inline const std::vector<std::pair<std::string, std::string>>& porter_reference() {
  static const std::vector<std::pair<std::string, std::string>> pairs = {
      {"a", "a"}, {"aaron", "aaron"}, {"abaissiez", "abaissiez"}, {"abandon", "abandon"},
      {"abandoned", "abandon"}, {"abase", "abas"}, {"abash", "abash"}, {"abate", "abat"},
      {"abated", "abat"}, {"abatement", "abat"}, {"abatements", "abat"}, {"abates", "abat"},
      {"abbess", "abbess"}, {"abbey", "abbei"}, {"abbeys", "abbei"}, {"abbot", "abbot"},
      {"abbots", "abbot"}, {"abbreviated", "abbrevi"}, {"abed", "ab"}, {"abel", "abel"},
      {"aberga", "aberga"}, {"abergavenny", "abergavenni"}, {"abet", "abet"}, {"abetting", "abet"},
      {"abhominable", "abhomin"}, {"abhor", "abhor"}, {"abhorred", "abhor"}, {"abhorring", "abhor"},
      {"abhors", "abhor"}, {"abhorson", "abhorson"}, {"abide", "abid"}, {"abides", "abid"},
      {"abilities", "abil"}, {"ability", "abil"}, {"abject", "abject"}, {"abjectly", "abjectli"},
      {"abjects", "abject"}, {"abjur", "abjur"}, {"abjure", "abjur"}, {"able", "abl"},
      {"abler", "abler"}, {"aboard", "aboard"}, {"abode", "abod"}, {"aboded", "abod"},
      {"abodements", "abod"}, {"aboding", "abod"}, {"abominable", "abomin"}, {"abominably", "abomin"},
      {"abominations", "abomin"}, {"abortive", "abort"}, {"abortives", "abort"}, {"abound", "abound"},
      {"abounding", "abound"}, {"about", "about"}, {"above", "abov"}, {"abr", "abr"},
      {"abraham", "abraham"}, {"abram", "abram"}, {"abreast", "abreast"}, {"abridg", "abridg"},
      {"abridge", "abridg"}, {"abridged", "abridg"}, {"abridgment", "abridg"}, {"abroach", "abroach"},
      {"abroad", "abroad"}, {"abrogate", "abrog"}, {"abrook", "abrook"}, {"abrupt", "abrupt"},
      {"abruption", "abrupt"}, {"abruptly", "abruptli"}, {"absence", "absenc"}, {"absent", "absent"},
      {"absey", "absei"}, {"absolute", "absolut"}, {"absolutely", "absolut"}, {"absolv", "absolv"},
      {"absolved", "absolv"}, {"caresses", "caress"}, {"ponies", "poni"}, {"cats", "cat"},
      {"feed", "feed"}, {"agreed", "agre"}, {"motoring", "motor"}, {"sing", "sing"},
      {"troubled", "troubl"}, {"sized", "size"}, {"hopping", "hop"}, {"falling", "fall"},
      {"hissing", "hiss"}, {"failing", "fail"}, {"filing", "file"}, {"happy", "happi"},
      {"sky", "sky"}, {"hopeful", "hope"}, {"goodness", "good"}, {"allowance", "allow"},
      {"effective", "effect"}, {"cease", "ceas"}, {"rate", "rate"}, {"roll", "roll"},
  };
  return pairs;
}

}  // namespace oracle
