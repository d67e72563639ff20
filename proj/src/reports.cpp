#include "tweetlab/reports.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "tweetlab/errors.hpp"
#include "tweetlab/lowess.hpp"

namespace tweetlab {

std::vector<SourceSummaryRow> source_feature_summary(std::span<const TweetRecord> records,
                                                     std::span<const EntitySet> entities,
                                                     const KeywordGroups& groups) {
  if (records.size() != entities.size()) throw std::invalid_argument("records and entities differ in length");
  std::map<std::string, SourceSummaryRow> by_source;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto [it, inserted] = by_source.try_emplace(records[i].source);
    SourceSummaryRow& row = it->second;
    if (inserted) {
      row.source = records[i].source;
      for (const auto& [group, words] : groups) row.keyword_hits[group] = 0;
    }
    const EntitySet& e = entities[i];
    ++row.total;
    row.hashtags += e.hashtags.size();
    row.mentions += e.mentions.size();
    row.urls += e.url_count;
    for (const auto& [group, hits] : e.keyword_hits) row.keyword_hits[group] += hits;
  }
  std::vector<SourceSummaryRow> rows;
  rows.reserve(by_source.size());
  for (auto& [source, row] : by_source) rows.push_back(std::move(row));
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.total > b.total; });
  return rows;
}

RatioSummary relative_ratio_summary(std::span<const SourceSummaryRow> rows) {
  RatioSummary out;
  for (const auto& row : rows) {
    if (row.total == 0) {
      out.skipped.push_back(row.source);
      continue;
    }
    const auto total = static_cast<double>(row.total);
    SourceRatioRow r;
    r.source = row.source;
    r.total = row.total;
    r.hashtags = static_cast<double>(row.hashtags) / total;
    r.mentions = static_cast<double>(row.mentions) / total;
    r.urls = static_cast<double>(row.urls) / total;
    for (const auto& [group, hits] : row.keyword_hits) r.keyword_hits[group] = static_cast<double>(hits) / total;
    out.rows.push_back(std::move(r));
  }
  return out;
}

std::vector<FrequencyRow> frequency_table(std::span<const std::string> values, std::size_t top_k) {
  if (top_k == 0) throw std::invalid_argument("top_k must be at least 1");
  std::unordered_map<std::string, std::size_t> counts;
  for (const auto& v : values) {
    if (!v.empty()) ++counts[v];
  }
  std::vector<FrequencyRow> rows;
  rows.reserve(counts.size());
  for (auto& [value, count] : counts) rows.push_back({value, count});
  std::sort(rows.begin(), rows.end(), [](const FrequencyRow& a, const FrequencyRow& b) {
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.value < b.value;
  });
  if (rows.size() > top_k) rows.resize(top_k);
  return rows;
}

DailySeries fear_curve(std::span<const DatedFlag> items, double fraction, std::size_t iterations) {
  using std::chrono::floor;
  using std::chrono::sys_days;
  if (items.empty()) throw SeriesError("fear curve needs at least two distinct dates, got none");
  sys_days first = floor<std::chrono::days>(items.front().at);
  sys_days last = first;
  for (const auto& item : items) {
    const sys_days d = floor<std::chrono::days>(item.at);
    first = std::min(first, d);
    last = std::max(last, d);
  }
  if (first == last) throw SeriesError("fear curve needs at least two distinct dates");

  DailySeries series;
  const auto n_days = static_cast<std::size_t>((last - first).count() + 1);
  series.counts.assign(n_days, 0);
  for (sys_days d = first; d <= last; d += std::chrono::days{1}) series.dates.push_back(d);
  for (const auto& item : items) {
    if (!item.flagged) continue;
    const auto offset = (floor<std::chrono::days>(item.at) - first).count();
    ++series.counts[static_cast<std::size_t>(offset)];
  }
  for (std::size_t i = 1; i < n_days; ++i) {
    series.increments.push_back(static_cast<long>(series.counts[i]) - static_cast<long>(series.counts[i - 1]));
  }
  std::vector<double> xs(n_days), ys(n_days);
  for (std::size_t i = 0; i < n_days; ++i) {
    xs[i] = static_cast<double>(i);
    ys[i] = static_cast<double>(series.counts[i]);
  }
  series.smoothed = lowess(xs, ys, fraction, iterations);
  return series;
}

std::vector<StateAggregate> state_sentiment_aggregate(std::span<const StateObservation> observations) {
  struct Accumulator {
    double valence_sum = 0.0;
    std::size_t fear = 0;
    std::size_t n = 0;
  };
  std::map<std::string, Accumulator> by_state;
  for (const auto& obs : observations) {
    if (obs.state.empty()) continue;
    auto& acc = by_state[obs.state];
    acc.valence_sum += obs.valence;
    acc.fear += obs.fear_dominant ? 1 : 0;
    ++acc.n;
  }
  std::vector<StateAggregate> rows;
  for (const auto& [state, acc] : by_state) {
    const auto n = static_cast<double>(acc.n);
    rows.push_back({state, acc.valence_sum / n, static_cast<double>(acc.fear) / n, acc.n});
  }
  return rows;
}

std::vector<FrequencyRow> wordcloud_export(std::span<const Document> corpus, std::size_t top_k) {
  return frequency_table(corpus, [](const Document& d) { return d.tokens; }, top_k);
}

}  // namespace tweetlab
