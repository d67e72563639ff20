#include "tweetlab/sentiment.hpp"

#include <algorithm>
#include <vector>

#include "tweetlab/errors.hpp"
#include "tweetlab/text_util.hpp"

namespace tweetlab {

bool is_category(std::string_view name) {
  return std::find(kCategories.begin(), kCategories.end(), name) != kCategories.end();
}

SentimentLexicon SentimentLexicon::negated() const {
  SentimentLexicon out = *this;
  for (auto& [word, v] : out.valence) v = -v;
  return out;
}

SentimentLexicon load_lexicon(std::string_view content) {
  SentimentLexicon lex;
  std::map<std::string, std::pair<bool, bool>> polarity;  // (positive, negative)
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty()) continue;

    std::vector<std::string_view> cols;
    std::size_t col_start = 0;
    for (;;) {
      const std::size_t tab = line.find('\t', col_start);
      cols.push_back(line.substr(col_start, tab == std::string_view::npos ? std::string_view::npos : tab - col_start));
      if (tab == std::string_view::npos) break;
      col_start = tab + 1;
    }
    const std::string where = "lexicon line " + std::to_string(line_no);
    if (cols.size() != 3) throw LexiconError(where + ": expected 3 tab-separated columns");
    const std::string word = text::to_lower_ascii(text::trim(cols[0]));
    const std::string_view category = text::trim(cols[1]);
    const std::string_view flag = text::trim(cols[2]);
    if (word.empty()) throw LexiconError(where + ": empty word");
    if (!is_category(category)) throw LexiconError(where + ": unknown category '" + std::string(category) + "'");
    if (flag != "0" && flag != "1") throw LexiconError(where + ": flag must be 0 or 1");
    if (flag == "0") continue;

    lex.emotions[word].emplace(category);
    if (category == "positive") polarity[word].first = true;
    if (category == "negative") polarity[word].second = true;
  }
  for (const auto& [word, pn] : polarity) {
    if (pn.first != pn.second) lex.valence[word] = pn.first ? 1 : -1;
  }
  return lex;
}

std::string_view to_string(Polarity p) {
  switch (p) {
    case Polarity::negative: return "negative";
    case Polarity::positive: return "positive";
    case Polarity::neutral: break;
  }
  return "neutral";
}

SentimentScore valence_score(const Document& doc, const SentimentLexicon& lex) {
  SentimentScore score;
  long sum = 0;
  for (const auto& t : doc.tokens) {
    auto it = lex.valence.find(t);
    if (it == lex.valence.end()) continue;
    sum += it->second;
    ++score.matched;
  }
  score.value = static_cast<double>(sum) / static_cast<double>(std::max<std::size_t>(1, score.matched));
  score.label = sum > 0 ? Polarity::positive : (sum < 0 ? Polarity::negative : Polarity::neutral);
  return score;
}

EmotionProfile emotion_profile(const Document& doc, const SentimentLexicon& lex) {
  EmotionProfile profile;
  for (auto c : kCategories) profile.counts[std::string(c)] = 0;
  for (const auto& t : doc.tokens) {
    auto it = lex.emotions.find(t);
    if (it == lex.emotions.end()) continue;
    for (const auto& c : it->second) ++profile.counts[c];
  }
  std::size_t best = 0;
  for (auto e : kEmotions) {  // alphabetical, so strict '>' keeps the lexicographically first
    const std::size_t n = profile.counts[std::string(e)];
    if (n > best) {
      best = n;
      profile.dominant = std::string(e);
    }
  }
  return profile;
}

std::optional<int> label_binary(const SentimentScore& score) {
  if (score.value > 0.0) return 1;
  if (score.value < 0.0) return 0;
  return std::nullopt;
}

}  // namespace tweetlab
