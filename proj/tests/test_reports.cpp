#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tweetlab/corpus.hpp"
#include "tweetlab/errors.hpp"
#include "tweetlab/lowess.hpp"
#include "tweetlab/reports.hpp"
#include "tweetlab/text_util.hpp"

using namespace tweetlab;
using namespace std::chrono;

namespace {

Timestamp at_day(int offset, int hour = 12) {
  return sys_days{year{2020} / March / 1} + days{offset} + hours{hour};
}

std::vector<DatedFlag> flags_from_counts(const std::vector<int>& counts, int unflagged_per_day = 1) {
  std::vector<DatedFlag> items;
  for (std::size_t d = 0; d < counts.size(); ++d) {
    for (int i = 0; i < counts[d]; ++i) items.push_back({at_day(static_cast<int>(d), i % 24), true});
    for (int i = 0; i < unflagged_per_day; ++i) items.push_back({at_day(static_cast<int>(d), 23), false});
  }
  return items;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Document doc(std::vector<std::string> tokens) {
  Document d;
  d.tokens = std::move(tokens);
  return d;
}

}  // namespace

TEST_SUITE("reports") {

TEST_CASE("source summary over the fixture") {
  auto records = parse_tweet_csv(text::read_file(oracle::source_path("tests/fixtures/ten_records.csv"))).records;
  auto groups = parse_keyword_groups(text::read_file(oracle::source_path("data/keyword_groups.txt")));
  std::vector<EntitySet> entities;
  for (const auto& r : records) entities.push_back(extract_entities(r.text, groups));
  auto rows = source_feature_summary(records, entities, groups);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].source == "Twitter for Android");
  CHECK(rows[0].total == 4);
  const auto& iphone = rows[1];
  CHECK(iphone.source == "Twitter for iPhone");
  CHECK(iphone.total == 3);
  CHECK(iphone.hashtags == 2);
  CHECK(iphone.mentions == 1);
  CHECK(iphone.keyword_hits.at("corona") == 3);  // corona twice, #coronavirus once
  CHECK(iphone.keyword_hits.at("flu") == 1);
  CHECK(iphone.keyword_hits.at("pols") == 0);
  CHECK(rows[2].source == "Twitter for iPad");
  CHECK(rows[3].source == "Twitter Web App");
  std::size_t total = 0;
  for (const auto& r : rows) total += r.total;
  CHECK(total == records.size());
}

TEST_CASE("source summary on a source table shaped corpus") {
  KeywordGroups groups{{"corona", {"corona"}}, {"beer", {"beer"}}};
  std::vector<TweetRecord> records;
  std::vector<EntitySet> entities;
  for (int i = 0; i < 3281; ++i) {
    TweetRecord r;
    r.source = "iPhone";
    records.push_back(r);
    EntitySet e;
    if (i < 495) e.hashtags = {"tag"};
    e.keyword_hits = {{"corona", i < 957 ? 2u : 1u}, {"beer", 0}};
    entities.push_back(e);
  }
  for (int i = 0; i < 1200; ++i) {
    TweetRecord r;
    r.source = "Android";
    records.push_back(r);
    EntitySet e;
    e.keyword_hits = {{"corona", 1}, {"beer", 0}};
    entities.push_back(e);
  }
  auto rows = source_feature_summary(records, entities, groups);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].source == "iPhone");
  CHECK(rows[0].total == 3281);
  CHECK(rows[0].hashtags == 495);
  CHECK(rows[0].keyword_hits.at("corona") == 4238);

  auto ratios = relative_ratio_summary(rows);
  REQUIRE(ratios.rows.size() == 2);
  CHECK(ratios.rows[0].keyword_hits.at("corona") == doctest::Approx(4238.0 / 3281.0).epsilon(1e-15));
  CHECK(std::round(ratios.rows[0].keyword_hits.at("corona") * 100) / 100 == 1.29);
  CHECK(ratios.rows[0].keyword_hits.at("beer") == 0.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double t = static_cast<double>(rows[i].total);
    CHECK(std::abs(ratios.rows[i].hashtags * t - static_cast<double>(rows[i].hashtags)) < 1e-12 * t);
    CHECK(std::abs(ratios.rows[i].keyword_hits.at("corona") * t -
                   static_cast<double>(rows[i].keyword_hits.at("corona"))) < 1e-12 * t);
  }
}

TEST_CASE("ratio summary") {
  std::vector<SourceSummaryRow> rows = {{"a", 4, 2, 0, 0, {}}, {"empty", 0, 0, 0, 0, {}}};
  auto ratios = relative_ratio_summary(rows);
  REQUIRE(ratios.rows.size() == 1);
  CHECK(ratios.rows[0].hashtags == 0.5);
  CHECK(ratios.rows[0].mentions == 0.0);
  CHECK(ratios.skipped == std::vector<std::string>{"empty"});
}

TEST_CASE("frequency tables") {
  std::vector<std::string> mentions = {"CNN", "WHO", "CNN", "CNN", "", "AP"};
  auto table = frequency_table(mentions, 10);
  REQUIRE(table.size() == 3);
  CHECK(table[0] == FrequencyRow{"CNN", 3});
  CHECK(table[1] == FrequencyRow{"AP", 1});
  CHECK(table[2] == FrequencyRow{"WHO", 1});
  CHECK(frequency_table(mentions, 1).size() == 1);

  std::vector<TweetRecord> records;
  auto add = [&](const std::string& place, int n) {
    for (int i = 0; i < n; ++i) {
      TweetRecord r;
      r.tagged_location = place;
      records.push_back(r);
    }
  };
  add("New York, NY", 141);
  add("Los Angeles, CA", 183);
  add("Chicago, IL", 92);
  add("", 500);
  auto places = frequency_table(records, [](const TweetRecord& r) { return r.tagged_location; }, 5);
  REQUIRE(places.size() == 3);
  CHECK(places[0] == FrequencyRow{"Los Angeles, CA", 183});
  for (std::size_t i = 1; i < places.size(); ++i)
    CHECK((places[i - 1].frequency > places[i].frequency ||
           (places[i - 1].frequency == places[i].frequency && places[i - 1].value < places[i].value)));
}

TEST_CASE("fear curve") {
  auto series = fear_curve(flags_from_counts({5, 8, 12}), 2.0 / 3.0, 0);
  CHECK(series.counts == std::vector<std::size_t>{5, 8, 12});
  CHECK(series.increments == std::vector<long>{3, 4});
  CHECK(series.smoothed.size() == 3);
  CHECK(format_date(series.dates.front()) == "2020-03-01");

  auto quiet = fear_curve(flags_from_counts({0, 0, 0, 0}), 1.0, 0);
  for (auto c : quiet.counts) CHECK(c == 0);
  for (double s : quiet.smoothed) CHECK(s == 0.0);

  std::vector<int> linear;
  for (int d = 0; d < 12; ++d) linear.push_back(3 + 2 * d);
  auto line = fear_curve(flags_from_counts(linear), 1.0, 0);
  for (std::size_t i = 0; i < line.smoothed.size(); ++i) CHECK(std::abs(line.smoothed[i] - linear[i]) < 1e-9);
}

TEST_CASE("fear curve fills gaps and telescopes") {
  std::vector<DatedFlag> items = {{at_day(0), true}, {at_day(0), true}, {at_day(3), true}, {at_day(4), false}, {at_day(1), false}};
  auto s = fear_curve(items, 1.0, 0);
  REQUIRE(s.dates.size() == 5);
  for (std::size_t i = 1; i < s.dates.size(); ++i) CHECK(s.dates[i] - s.dates[i - 1] == days{1});
  CHECK(s.counts == std::vector<std::size_t>{2, 0, 0, 1, 0});
  CHECK(std::accumulate(s.counts.begin(), s.counts.end(), std::size_t{0}) == 3);
  CHECK(std::accumulate(s.increments.begin(), s.increments.end(), 0L) ==
        static_cast<long>(s.counts.back()) - static_cast<long>(s.counts.front()));
  CHECK(s.increments.size() == s.counts.size() - 1);
  CHECK_THROWS_AS(fear_curve(std::vector<DatedFlag>{{at_day(0), true}, {at_day(0, 3), false}}, 1.0, 0), SeriesError);
}

TEST_CASE("lowess") {
  std::vector<double> xs, line, flat;
  for (int i = 0; i < 20; ++i) {
    xs.push_back(i * 0.5 + (i % 3) * 0.1);
    line.push_back(2.5 - 1.25 * xs.back());
    flat.push_back(7.0);
  }
  CHECK(max_abs_diff(lowess(xs, line, 1.0, 0), line) < 1e-9);
  CHECK(max_abs_diff(lowess(xs, line, 0.3, 2), line) < 1e-9);
  CHECK(max_abs_diff(lowess(xs, flat, 0.4, 0), flat) < 1e-12);

  auto [sx, sy] = oracle::noisy_sine();
  for (double f : {0.2, 0.5, 2.0 / 3.0, 1.0}) {
    for (std::size_t it : {0u, 1u, 3u}) {
      CAPTURE(f);
      CAPTURE(it);
      auto fit = lowess(sx, sy, f, it);
      CHECK(max_abs_diff(fit, oracle::reference_lowess(sx, sy, f, static_cast<int>(it))) < 1e-8);
      auto shifted = sy;
      for (auto& v : shifted) v += 42.0;
      auto moved = lowess(sx, shifted, f, it);
      for (auto& v : moved) v -= 42.0;
      CHECK(max_abs_diff(moved, fit) < 1e-9);
    }
  }
}

TEST_CASE("lowess argument checks") {
  std::vector<double> a = {1, 2, 3}, b = {1, 2};
  CHECK_THROWS_AS(lowess(a, b, 0.5, 0), std::invalid_argument);
  std::vector<double> dup = {1, 1, 2};
  CHECK_THROWS_AS(lowess(dup, a, 0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(lowess(a, a, 0.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(lowess(a, a, 1.5, 0), std::invalid_argument);
  std::vector<double> one = {1};
  CHECK_THROWS_AS(lowess(one, one, 1.0, 0), std::invalid_argument);
}

TEST_CASE("state aggregate") {
  std::vector<StateObservation> obs = {
      {"NY", 1.0, false}, {"NY", -1.0, true}, {"NY", -1.0, false}, {"", -1.0, true}, {"CA", 0.5, true}};
  auto rows = state_sentiment_aggregate(obs);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].state == "CA");
  CHECK(rows[0].fear_share == 1.0);
  CHECK(rows[0].n == 1);
  CHECK(rows[1].state == "NY");
  CHECK(rows[1].mean_valence == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
  CHECK(rows[1].fear_share == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(rows[1].n == 3);
}

TEST_CASE("wordcloud export") {
  std::vector<Document> corpus = {doc({"corona", "corona", "beer"})};
  CHECK(wordcloud_export(corpus, 10) == std::vector<FrequencyRow>{{"corona", 2}, {"beer", 1}});
  std::vector<Document> tie = {doc({"zeta", "alpha"})};
  CHECK(wordcloud_export(tie, 1) == std::vector<FrequencyRow>{{"alpha", 1}});
}

TEST_CASE("wordcloud over the fixture") {
  auto records = parse_tweet_csv(text::read_file(oracle::source_path("tests/fixtures/ten_records.csv"))).records;
  auto stop_list = text::read_word_list_file(oracle::source_path("data/stopwords.txt"));
  std::unordered_set<std::string> stop(stop_list.begin(), stop_list.end());
  std::vector<Document> corpus;
  for (const auto& r : filter_corpus(records, "corona", "")) corpus.push_back(doc(remove_stopwords(tokenize(r.text), stop)));
  CHECK(wordcloud_export(corpus, 4) ==
        std::vector<FrequencyRow>{{"corona", 5}, {"outbreak", 3}, {"virus", 3}, {"coronavirus", 2}});
}

}  // TEST_SUITE
