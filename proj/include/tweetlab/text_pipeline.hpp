#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tweetlab {

struct Document {
  std::string record_id;
  std::vector<std::string> tokens;
  std::size_t char_length = 0;  // code points of the original text
};

/// Lowercase word tokens over [a-z0-9']. URLs, @mentions and #hashtags are
/// dropped first; leading/trailing apostrophes are stripped.
std::vector<std::string> tokenize(std::string_view text);

/// Porter stemmer (Martin Porter's reference C release, including its
/// "bli"->"ble" and "logi"->"log" step-2 rules).
std::string stem(std::string_view token);

std::vector<std::string> stem_all(const std::vector<std::string>& tokens);

using NGram = std::vector<std::string>;

struct NGramTable {
  int n = 1;
  std::map<NGram, std::size_t> counts;

  std::size_t total() const;
  /// Adds another table's counts (same n).
  void merge(const NGramTable& other);
};

inline constexpr int kMaxNGram = 4;

/// Sliding-window counts. Throws std::invalid_argument unless 1 <= n <= 4.
NGramTable ngrams(const std::vector<std::string>& tokens, int n);

/// Per-document tables merged, so windows never straddle two documents.
NGramTable corpus_ngrams(const std::vector<Document>& corpus, int n);

struct RankedNGram {
  NGram sequence;
  std::size_t frequency = 0;
  bool operator==(const RankedNGram&) const = default;
};

/// Descending frequency, lexicographic tie-break, entries below `min_freq`
/// dropped, at most `k` rows.
std::vector<RankedNGram> top_ngrams(const std::vector<Document>& corpus, int n, std::size_t k, std::size_t min_freq);

class Vocabulary {
public:
  Vocabulary() = default;
  /// Takes words in their final order; duplicates are rejected.
  explicit Vocabulary(std::vector<std::string> words);

  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const std::vector<std::string>& words() const { return words_; }
  /// Position of `word`, or -1 when out of vocabulary.
  long index_of(const std::string& word) const;

private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Top `max_size` tokens by corpus frequency, ties broken lexicographically.
Vocabulary build_vocabulary(const std::vector<Document>& corpus, std::size_t max_size);

}  // namespace tweetlab
