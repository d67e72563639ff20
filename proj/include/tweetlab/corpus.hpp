#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace tweetlab {

using Timestamp = std::chrono::sys_seconds;

struct TweetRecord {
  std::string id;
  std::string text;
  Timestamp created_at{};
  std::string source;
  std::string screen_name;
  std::string tagged_location;
  std::string stated_location;
  std::string country;
  std::string state;  // 2-letter code or empty

  bool operator==(const TweetRecord&) const = default;
};

/// Logical field -> CSV column name. Defaults to identical names.
struct CsvSchema {
  std::string id = "id";
  std::string created_at = "created_at";
  std::string text = "text";
  std::string source = "source";
  std::string screen_name = "screen_name";
  std::string tagged_location = "tagged_location";
  std::string stated_location = "stated_location";
  std::string country = "country";
  std::string state = "state";

  /// Sets one mapping by logical name; false if the name is unknown.
  bool set(std::string_view logical, std::string column);
  static const std::vector<std::string>& logical_fields();
};

struct ParseReport {
  std::size_t rows_read = 0;
  std::size_t accepted = 0;
  std::map<std::string, std::size_t> rejected;  // reason -> count

  std::size_t rejected_total() const;
};

struct ParseResult {
  std::vector<TweetRecord> records;
  ParseReport report;
};

/// Parses an RFC-4180 CSV with a header row. Throws SchemaError when a mapped
/// column is missing; malformed rows are skipped and counted by reason.
ParseResult parse_tweet_csv(std::string_view content, const CsvSchema& schema = {});

/// Writes records with the default logical header, quoting where needed.
std::string serialize_tweet_csv(const std::vector<TweetRecord>& records);

/// ISO-8601 UTC instant: "YYYY-MM-DDTHH:MM:SS" with optional 'Z' or "+00:00";
/// a space may replace the 'T'.
std::optional<Timestamp> parse_timestamp(std::string_view text);
std::string format_timestamp(Timestamp t);
/// "YYYY-MM-DD"
std::string format_date(std::chrono::sys_days d);

bool is_us_state_code(std::string_view code);
/// Trailing ", XX" state code of a location string, or empty.
std::string state_from_location(std::string_view location);

/// Case-insensitive keyword containment plus exact country match; an empty
/// country filter keeps every country. Stable.
std::vector<TweetRecord> filter_corpus(const std::vector<TweetRecord>& records, std::string_view keyword,
                                       std::string_view country);

using KeywordGroups = std::map<std::string, std::vector<std::string>>;

/// Reads "group=word,word,..." lines; '#' comments and blank lines skipped.
KeywordGroups parse_keyword_groups(std::string_view content);

struct EntitySet {
  std::vector<std::string> hashtags;
  std::vector<std::string> mentions;
  std::size_t url_count = 0;
  std::map<std::string, std::size_t> keyword_hits;

  bool operator==(const EntitySet&) const = default;
};

EntitySet extract_entities(std::string_view text, const KeywordGroups& keyword_groups);

struct MaskedText {
  std::string text;
  std::size_t replacements = 0;
};

inline constexpr std::string_view kMaskPrefix = "abuvs";

/// Replaces whole-word, case-insensitive occurrences of any abusive word with
/// "abuvs" followed by four digits from Lcg64(seed). Longer words win when
/// entries overlap.
MaskedText mask_abusive(std::string_view text, const std::vector<std::string>& abusive_words, std::uint64_t seed);

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const std::unordered_set<std::string>& stopwords);

}  // namespace tweetlab
