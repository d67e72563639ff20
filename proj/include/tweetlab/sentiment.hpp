#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>

#include "tweetlab/text_pipeline.hpp"

namespace tweetlab {

inline constexpr std::array<std::string_view, 10> kCategories = {
    "anger", "anticipation", "disgust", "fear", "joy", "negative", "positive", "sadness", "surprise", "trust"};

/// The eight emotions eligible as a document's dominant category; the
/// positive/negative polarity categories are counted but never dominant.
inline constexpr std::array<std::string_view, 8> kEmotions = {"anger", "anticipation", "disgust", "fear",
                                                              "joy",   "sadness",      "surprise", "trust"};

bool is_category(std::string_view name);

struct SentimentLexicon {
  std::unordered_map<std::string, int> valence;  // +1 or -1
  std::unordered_map<std::string, std::set<std::string>> emotions;

  /// Copy with every valence negated.
  SentimentLexicon negated() const;
};

/// Parses word<TAB>category<TAB>flag rows. Throws LexiconError (with the line
/// number) on malformed rows or unknown categories. A word flagged both
/// positive and negative gets no valence.
SentimentLexicon load_lexicon(std::string_view content);

enum class Polarity { negative, neutral, positive };

std::string_view to_string(Polarity p);

struct SentimentScore {
  double value = 0.0;
  std::size_t matched = 0;
  Polarity label = Polarity::neutral;
};

SentimentScore valence_score(const Document& doc, const SentimentLexicon& lex);

struct EmotionProfile {
  std::map<std::string, std::size_t> counts;  // every category present, zero when absent
  std::optional<std::string> dominant;
};

EmotionProfile emotion_profile(const Document& doc, const SentimentLexicon& lex);

/// 1 for positive, 0 for negative, nullopt for neutral.
std::optional<int> label_binary(const SentimentScore& score);

}  // namespace tweetlab
