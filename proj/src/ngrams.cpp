#include <algorithm>
#include <stdexcept>
#include <string>

#include "tweetlab/text_pipeline.hpp"

namespace tweetlab {

std::size_t NGramTable::total() const {
  std::size_t sum = 0;
  for (const auto& [seq, count] : counts) sum += count;
  return sum;
}

void NGramTable::merge(const NGramTable& other) {
  if (other.n != n) throw std::invalid_argument("cannot merge n-gram tables of different order");
  for (const auto& [seq, count] : other.counts) counts[seq] += count;
}

NGramTable ngrams(const std::vector<std::string>& tokens, int n) {
  if (n < 1 || n > kMaxNGram) throw std::invalid_argument("n-gram order must be in 1.." + std::to_string(kMaxNGram));
  NGramTable table;
  table.n = n;
  const auto width = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i + width <= tokens.size(); ++i) {
    ++table.counts[NGram(tokens.begin() + static_cast<long>(i), tokens.begin() + static_cast<long>(i + width))];
  }
  return table;
}

NGramTable corpus_ngrams(const std::vector<Document>& corpus, int n) {
  NGramTable total = ngrams({}, n);
  for (const auto& doc : corpus) total.merge(ngrams(doc.tokens, n));
  return total;
}

std::vector<RankedNGram> top_ngrams(const std::vector<Document>& corpus, int n, std::size_t k, std::size_t min_freq) {
  const NGramTable table = corpus_ngrams(corpus, n);
  std::vector<RankedNGram> ranked;
  for (const auto& [seq, count] : table.counts) {
    if (count >= min_freq) ranked.push_back({seq, count});
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedNGram& a, const RankedNGram& b) {
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.sequence < b.sequence;
  });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

Vocabulary::Vocabulary(std::vector<std::string> words) : words_(std::move(words)) {
  index_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (!index_.emplace(words_[i], i).second) throw std::invalid_argument("duplicate vocabulary word: " + words_[i]);
  }
}

long Vocabulary::index_of(const std::string& word) const {
  auto it = index_.find(word);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

Vocabulary build_vocabulary(const std::vector<Document>& corpus, std::size_t max_size) {
  std::unordered_map<std::string, std::size_t> freq;
  for (const auto& doc : corpus) {
    for (const auto& t : doc.tokens) ++freq[t];
  }
  std::vector<std::pair<std::string, std::size_t>> entries(freq.begin(), freq.end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (entries.size() > max_size) entries.resize(max_size);
  std::vector<std::string> words;
  words.reserve(entries.size());
  for (auto& [w, c] : entries) words.push_back(std::move(w));
  return Vocabulary(std::move(words));
}

}  // namespace tweetlab
