#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tweetlab/corpus.hpp"
#include "tweetlab/text_pipeline.hpp"

namespace tweetlab {

struct SourceSummaryRow {
  std::string source;
  std::size_t total = 0;
  std::size_t hashtags = 0;
  std::size_t mentions = 0;
  std::size_t urls = 0;
  std::map<std::string, std::size_t> keyword_hits;  // group -> summed hits

  bool operator==(const SourceSummaryRow&) const = default;
};

/// One row per source present, sorted by total descending then source name.
/// `entities[i]` belongs to `records[i]`; every group in `groups` gets a
/// column even when it never fires.
std::vector<SourceSummaryRow> source_feature_summary(std::span<const TweetRecord> records,
                                                     std::span<const EntitySet> entities,
                                                     const KeywordGroups& groups);

struct SourceRatioRow {
  std::string source;
  std::size_t total = 0;
  double hashtags = 0.0;
  double mentions = 0.0;
  double urls = 0.0;
  std::map<std::string, double> keyword_hits;
};

struct RatioSummary {
  std::vector<SourceRatioRow> rows;
  std::vector<std::string> skipped;  // sources with a zero total
};

/// Every count divided by its row's total.
RatioSummary relative_ratio_summary(std::span<const SourceSummaryRow> rows);

struct FrequencyRow {
  std::string value;
  std::size_t frequency = 0;
  bool operator==(const FrequencyRow&) const = default;
};

/// Ranks non-empty values by descending frequency, lexicographic tie-break,
/// truncated to `top_k`.
std::vector<FrequencyRow> frequency_table(std::span<const std::string> values, std::size_t top_k);

/// Applies `extract` to every item; it may return one string or a list.
template <class Range, class Extractor>
std::vector<FrequencyRow> frequency_table(const Range& items, Extractor extract, std::size_t top_k) {
  std::vector<std::string> values;
  for (const auto& item : items) {
    auto v = extract(item);
    if constexpr (std::is_convertible_v<decltype(v), std::string>) {
      values.emplace_back(std::move(v));
    } else {
      for (auto& s : v) values.emplace_back(std::move(s));
    }
  }
  return frequency_table(values, top_k);
}

struct DatedFlag {
  Timestamp at;
  bool flagged = false;
};

struct DailySeries {
  std::vector<std::chrono::sys_days> dates;  // consecutive days, gaps zero-filled
  std::vector<std::size_t> counts;
  std::vector<long> increments;  // counts[i + 1] - counts[i]
  std::vector<double> smoothed;  // LOWESS over (day index, count)
};

/// Daily counts of flagged (fear-dominant) items between the first and last
/// date of any item. Throws SeriesError when fewer than two distinct dates.
DailySeries fear_curve(std::span<const DatedFlag> items, double fraction, std::size_t iterations);

struct StateObservation {
  std::string state;
  double valence = 0.0;
  bool fear_dominant = false;
};

struct StateAggregate {
  std::string state;
  double mean_valence = 0.0;
  double fear_share = 0.0;
  std::size_t n = 0;
};

/// Per-state means over observations with a non-empty state, sorted by state.
std::vector<StateAggregate> state_sentiment_aggregate(std::span<const StateObservation> observations);

/// Token frequencies over the documents' (stopword-cleaned) tokens.
std::vector<FrequencyRow> wordcloud_export(std::span<const Document> corpus, std::size_t top_k);

}  // namespace tweetlab
