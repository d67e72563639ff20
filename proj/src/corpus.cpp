#include "tweetlab/corpus.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>

#include "tweetlab/errors.hpp"
#include "tweetlab/random.hpp"
#include "tweetlab/text_util.hpp"

namespace tweetlab {

namespace {

constexpr std::array<std::string_view, 51> kStateCodes = {
    "AK", "AL", "AR", "AZ", "CA", "CO", "CT", "DC", "DE", "FL", "GA", "HI", "IA", "ID", "IL", "IN", "KS",
    "KY", "LA", "MA", "MD", "ME", "MI", "MN", "MO", "MS", "MT", "NC", "ND", "NE", "NH", "NJ", "NM", "NV",
    "NY", "OH", "OK", "OR", "PA", "RI", "SC", "SD", "TN", "TX", "UT", "VA", "VT", "WA", "WI", "WV", "WY"};

// One parsed CSV row plus the status of its parse.
struct CsvRow {
  std::vector<std::string> fields;
  std::string error;  // empty when well-formed
};

class CsvReader {
public:
  explicit CsvReader(std::string_view content) : in_(content) {
    if (in_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
  }

  bool done() const { return pos_ >= in_.size(); }

  CsvRow next() {
    CsvRow row;
    std::string field;
    bool quoted_field = false;
    for (;;) {
      if (pos_ >= in_.size()) {
        row.fields.push_back(std::move(field));
        return row;
      }
      char c = in_[pos_];
      if (c == '"' && field.empty() && !quoted_field) {
        quoted_field = true;
        ++pos_;
        if (!read_quoted(field)) {
          row.error = "unterminated_quote";
          pos_ = in_.size();
          return row;
        }
        if (pos_ < in_.size() && in_[pos_] != ',' && in_[pos_] != '\n' && in_[pos_] != '\r') {
          row.error = "stray_quote";
          skip_line();
          return row;
        }
        continue;
      }
      if (c == ',') {
        row.fields.push_back(std::move(field));
        field.clear();
        quoted_field = false;
        ++pos_;
        continue;
      }
      if (c == '\r' || c == '\n') {
        row.fields.push_back(std::move(field));
        skip_newline();
        return row;
      }
      field.push_back(c);
      ++pos_;
    }
  }

private:
  bool read_quoted(std::string& field) {
    while (pos_ < in_.size()) {
      char c = in_[pos_++];
      if (c == '"') {
        if (pos_ < in_.size() && in_[pos_] == '"') {
          field.push_back('"');
          ++pos_;
        } else {
          return true;
        }
      } else {
        field.push_back(c);
      }
    }
    return false;
  }

  void skip_newline() {
    if (pos_ < in_.size() && in_[pos_] == '\r') ++pos_;
    if (pos_ < in_.size() && in_[pos_] == '\n') ++pos_;
  }

  void skip_line() {
    while (pos_ < in_.size() && in_[pos_] != '\n') ++pos_;
    if (pos_ < in_.size()) ++pos_;
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

bool CsvSchema::set(std::string_view logical, std::string column) {
  if (logical == "id") id = std::move(column);
  else if (logical == "created_at") created_at = std::move(column);
  else if (logical == "text") text = std::move(column);
  else if (logical == "source") source = std::move(column);
  else if (logical == "screen_name") screen_name = std::move(column);
  else if (logical == "tagged_location") tagged_location = std::move(column);
  else if (logical == "stated_location") stated_location = std::move(column);
  else if (logical == "country") country = std::move(column);
  else if (logical == "state") state = std::move(column);
  else return false;
  return true;
}

const std::vector<std::string>& CsvSchema::logical_fields() {
  static const std::vector<std::string> fields = {"id", "created_at", "text", "source", "screen_name",
                                                  "tagged_location", "stated_location", "country", "state"};
  return fields;
}

std::size_t ParseReport::rejected_total() const {
  std::size_t total = 0;
  for (const auto& [reason, count] : rejected) total += count;
  return total;
}

std::optional<Timestamp> parse_timestamp(std::string_view s) {
  s = text::trim(s);
  if (s.size() < 19) return std::nullopt;
  if (s[4] != '-' || s[7] != '-' || (s[10] != 'T' && s[10] != ' ') || s[13] != ':' || s[16] != ':') {
    return std::nullopt;
  }
  std::string_view rest = s.substr(19);
  if (!(rest.empty() || rest == "Z" || rest == "+00:00" || rest == " +0000" || rest == "+0000")) {
    return std::nullopt;
  }
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, sec = 0;
  if (!parse_int(s.substr(0, 4), y) || !parse_int(s.substr(5, 2), mo) || !parse_int(s.substr(8, 2), d) ||
      !parse_int(s.substr(11, 2), h) || !parse_int(s.substr(14, 2), mi) || !parse_int(s.substr(17, 2), sec)) {
    return std::nullopt;
  }
  using namespace std::chrono;
  const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || sec > 59 || h < 0 || mi < 0 || sec < 0) return std::nullopt;
  return sys_days{ymd} + hours{h} + minutes{mi} + seconds{sec};
}

std::string format_timestamp(Timestamp t) {
  using namespace std::chrono;
  const auto day_point = floor<days>(t);
  const year_month_day ymd{day_point};
  const hh_mm_ss hms{t - day_point};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

std::string format_date(std::chrono::sys_days d) {
  const std::chrono::year_month_day ymd{d};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()));
  return buf;
}

bool is_us_state_code(std::string_view code) {
  return std::binary_search(kStateCodes.begin(), kStateCodes.end(), code);
}

std::string state_from_location(std::string_view location) {
  location = text::trim(location);
  if (location.size() < 4) return {};
  const std::string_view tail = location.substr(location.size() - 2);
  const std::string_view sep = location.substr(location.size() - 4, 2);
  if (sep != ", " || !is_us_state_code(tail)) return {};
  return std::string(tail);
}

ParseResult parse_tweet_csv(std::string_view content, const CsvSchema& schema) {
  ParseResult result;
  CsvReader reader(content);
  if (reader.done()) throw SchemaError("missing header row");
  const CsvRow header = reader.next();
  if (!header.error.empty()) throw SchemaError("malformed header row: " + header.error);

  auto column_of = [&](const std::string& name) -> std::size_t {
    auto it = std::find(header.fields.begin(), header.fields.end(), name);
    if (it == header.fields.end()) throw SchemaError("missing mapped column '" + name + "'");
    return static_cast<std::size_t>(it - header.fields.begin());
  };
  const std::size_t c_id = column_of(schema.id);
  const std::size_t c_created = column_of(schema.created_at);
  const std::size_t c_text = column_of(schema.text);
  const std::size_t c_source = column_of(schema.source);
  const std::size_t c_screen = column_of(schema.screen_name);
  const std::size_t c_tagged = column_of(schema.tagged_location);
  const std::size_t c_stated = column_of(schema.stated_location);
  const std::size_t c_country = column_of(schema.country);
  const std::size_t c_state = column_of(schema.state);

  while (!reader.done()) {
    CsvRow row = reader.next();
    if (row.error.empty() && row.fields.size() == 1 && row.fields[0].empty()) continue;  // blank line
    ++result.report.rows_read;
    if (!row.error.empty()) {
      ++result.report.rejected[row.error];
      continue;
    }
    if (row.fields.size() != header.fields.size()) {
      ++result.report.rejected["field_count"];
      continue;
    }
    TweetRecord rec;
    rec.text = std::move(row.fields[c_text]);
    if (text::trim(rec.text).empty()) {
      ++result.report.rejected["empty_text"];
      continue;
    }
    const auto ts = parse_timestamp(row.fields[c_created]);
    if (!ts) {
      ++result.report.rejected["bad_timestamp"];
      continue;
    }
    rec.created_at = *ts;
    rec.id = std::move(row.fields[c_id]);
    rec.source = std::move(row.fields[c_source]);
    rec.screen_name = std::move(row.fields[c_screen]);
    rec.tagged_location = std::move(row.fields[c_tagged]);
    rec.stated_location = std::move(row.fields[c_stated]);
    rec.country = std::move(row.fields[c_country]);
    const std::string given_state(text::trim(row.fields[c_state]));
    if (is_us_state_code(given_state)) {
      rec.state = given_state;
    } else {
      rec.state = state_from_location(rec.tagged_location);
      if (rec.state.empty()) rec.state = state_from_location(rec.stated_location);
    }
    result.records.push_back(std::move(rec));
    ++result.report.accepted;
  }
  return result;
}

std::string serialize_tweet_csv(const std::vector<TweetRecord>& records) {
  std::string out = "id,created_at,text,source,screen_name,tagged_location,stated_location,country,state\n";
  for (const auto& r : records) {
    out += csv_quote(r.id) + ',' + format_timestamp(r.created_at) + ',' + csv_quote(r.text) + ',' +
           csv_quote(r.source) + ',' + csv_quote(r.screen_name) + ',' + csv_quote(r.tagged_location) + ',' +
           csv_quote(r.stated_location) + ',' + csv_quote(r.country) + ',' + csv_quote(r.state) + '\n';
  }
  return out;
}

std::vector<TweetRecord> filter_corpus(const std::vector<TweetRecord>& records, std::string_view keyword,
                                       std::string_view country) {
  const std::string needle = text::to_lower_ascii(keyword);
  std::vector<TweetRecord> kept;
  for (const auto& r : records) {
    if (!country.empty() && r.country != country) continue;
    if (text::to_lower_ascii(r.text).find(needle) == std::string::npos) continue;
    kept.push_back(r);
  }
  return kept;
}

KeywordGroups parse_keyword_groups(std::string_view content) {
  KeywordGroups groups;
  for (const std::string& line : text::read_word_list(content)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("keyword group line without '=': " + line);
    const std::string name(text::trim(std::string_view(line).substr(0, eq)));
    auto& words = groups[name];
    std::string_view rest = std::string_view(line).substr(eq + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = text::trim(rest.substr(0, comma));
      if (!item.empty()) words.push_back(text::to_lower_ascii(item));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  return groups;
}

EntitySet extract_entities(std::string_view text_in, const KeywordGroups& keyword_groups) {
  EntitySet entities;
  for (std::size_t i = 0; i < text_in.size();) {
    if (const std::size_t url = text::url_length_at(text_in, i); url > 0) {
      ++entities.url_count;
      i += url;
      continue;
    }
    const char c = text_in[i];
    if (c == '#' || c == '@') {
      std::size_t end = i + 1;
      while (end < text_in.size() && text::is_handle_byte(static_cast<unsigned char>(text_in[end]))) ++end;
      if (end > i + 1) {
        std::string handle(text_in.substr(i + 1, end - i - 1));
        (c == '#' ? entities.hashtags : entities.mentions).push_back(std::move(handle));
        i = end;
        continue;
      }
    }
    ++i;
  }
  for (const auto& [group, words] : keyword_groups) {
    std::size_t hits = 0;
    for (const auto& w : words) hits += text::find_whole_words(text_in, w).size();
    entities.keyword_hits[group] = hits;
  }
  return entities;
}

MaskedText mask_abusive(std::string_view input, const std::vector<std::string>& abusive_words, std::uint64_t seed) {
  std::vector<std::string> words;
  for (const auto& w : abusive_words) {
    if (!w.empty()) words.push_back(text::to_lower_ascii(w));
  }
  std::stable_sort(words.begin(), words.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });

  MaskedText out;
  Lcg64 rng(seed);
  const std::string lowered = text::to_lower_ascii(input);
  std::size_t i = 0;
  while (i < input.size()) {
    const bool at_word_start = i == 0 || !text::is_word_byte(static_cast<unsigned char>(input[i - 1]));
    std::size_t matched = 0;
    if (at_word_start) {
      for (const auto& w : words) {
        if (lowered.compare(i, w.size(), w) != 0) continue;
        const std::size_t end = i + w.size();
        if (end == input.size() || !text::is_word_byte(static_cast<unsigned char>(input[end]))) {
          matched = w.size();
          break;
        }
      }
    }
    if (matched > 0) {
      out.text += kMaskPrefix;
      for (int k = 0; k < 4; ++k) out.text.push_back(static_cast<char>('0' + rng.next_digit()));
      ++out.replacements;
      i += matched;
    } else {
      out.text.push_back(input[i]);
      ++i;
    }
  }
  return out;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const std::unordered_set<std::string>& stopwords) {
  std::vector<std::string> kept;
  kept.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!stopwords.contains(t)) kept.push_back(t);
  }
  return kept;
}

}  // namespace tweetlab
