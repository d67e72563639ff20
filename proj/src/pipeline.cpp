#include "tweetlab/pipeline.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "tweetlab/errors.hpp"
#include "tweetlab/evaluation.hpp"
#include "tweetlab/logistic_regression.hpp"
#include "tweetlab/naive_bayes.hpp"
#include "tweetlab/reports.hpp"
#include "tweetlab/sentiment.hpp"
#include "tweetlab/text_pipeline.hpp"
#include "tweetlab/text_util.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace tweetlab {

namespace {

const std::vector<std::string> kTasks = {"ingest",    "clean",     "sentiment", "ngrams",  "summarize", "fearcurve",
                                         "geomap",    "train-nb",  "train-lr",  "evaluate"};

const std::map<std::string, std::vector<std::string>> kStages = {
    {"ingest", {"ingest"}},
    {"clean", {"clean"}},
    {"score", {"sentiment"}},
    {"reports", {"ngrams", "summarize", "fearcurve", "geomap"}},
    {"classify", {"train-nb", "train-lr", "evaluate"}},
};

constexpr std::string_view kCorpusFile = "corpus.jsonl";
constexpr std::string_view kCleanedFile = "cleaned.jsonl";
constexpr std::string_view kScoredFile = "scored.jsonl";

template <class T>
T parse_number(std::string_view key, std::string_view value) {
  value = text::trim(value);
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError("invalid value for " + std::string(key) + ": '" + std::string(value) + "'");
  }
  return out;
}

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> items;
  while (!value.empty()) {
    const auto comma = value.find(',');
    const auto item = text::trim(value.substr(0, comma));
    if (!item.empty()) items.emplace_back(item);
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return items;
}

std::string resolve(std::string_view path, const std::string& base_dir) {
  fs::path p{std::string(text::trim(path))};
  if (p.is_relative() && !base_dir.empty()) p = fs::path(base_dir) / p;
  return p.lexically_normal().string();
}

// ---- output helpers -------------------------------------------------------

class OutputWriter {
public:
  OutputWriter(fs::path dir, std::vector<ManifestEntry>& manifest) : dir_(std::move(dir)), manifest_(manifest) {}

  void write(const std::string& name, const std::string& content, std::size_t rows, std::string_view stage) {
    std::ofstream out(dir_ / name, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("cannot write " + (dir_ / name).string());
    ManifestEntry entry{name, rows, sha256_hex(content), std::string(stage)};
    auto it = std::find_if(manifest_.begin(), manifest_.end(), [&](const auto& e) { return e.path == name; });
    if (it != manifest_.end()) manifest_.erase(it);
    manifest_.push_back(std::move(entry));
  }

  void write_jsonl(const std::string& name, const std::vector<json>& lines, std::string_view stage) {
    std::string content;
    for (const auto& j : lines) content += j.dump() + '\n';
    write(name, content, lines.size(), stage);
  }

  void write_json(const std::string& name, const json& j, std::string_view stage) {
    write(name, j.dump(2) + '\n', 1, stage);
  }

  const fs::path& dir() const { return dir_; }

private:
  fs::path dir_;
  std::vector<ManifestEntry>& manifest_;
};

class CsvBuilder {
public:
  explicit CsvBuilder(std::initializer_list<std::string_view> header) { row_from(header); }
  explicit CsvBuilder(const std::vector<std::string>& header) {
    row_from(std::vector<std::string_view>(header.begin(), header.end()));
  }

  void row(const std::vector<std::string>& cells) {
    row_from(std::vector<std::string_view>(cells.begin(), cells.end()));
    ++rows_;
  }

  const std::string& str() const { return out_; }
  std::size_t rows() const { return rows_; }

private:
  template <class Cells>
  void row_from(const Cells& cells) {
    bool first = true;
    for (std::string_view c : cells) {
      if (!first) out_ += ',';
      first = false;
      if (c.find_first_of(",\"\r\n") == std::string_view::npos) {
        out_ += c;
      } else {
        out_ += '"';
        for (char ch : c) {
          if (ch == '"') out_ += '"';
          out_ += ch;
        }
        out_ += '"';
      }
    }
    out_ += '\n';
  }

  std::string out_;
  std::size_t rows_ = 0;
};

std::string num(std::size_t v) { return std::to_string(v); }

std::string optional_metric(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

// ---- intermediate records ---------------------------------------------------

json record_to_json(const TweetRecord& r) {
  return {{"id", r.id},
          {"created_at", format_timestamp(r.created_at)},
          {"text", r.text},
          {"source", r.source},
          {"screen_name", r.screen_name},
          {"tagged_location", r.tagged_location},
          {"stated_location", r.stated_location},
          {"country", r.country},
          {"state", r.state}};
}

TweetRecord record_from_json(const json& j) {
  TweetRecord r;
  r.id = j.at("id").get<std::string>();
  const auto ts = parse_timestamp(j.at("created_at").get<std::string>());
  if (!ts) throw DataError("bad created_at in intermediate record " + r.id);
  r.created_at = *ts;
  r.text = j.at("text").get<std::string>();
  r.source = j.at("source").get<std::string>();
  r.screen_name = j.at("screen_name").get<std::string>();
  r.tagged_location = j.at("tagged_location").get<std::string>();
  r.stated_location = j.at("stated_location").get<std::string>();
  r.country = j.at("country").get<std::string>();
  r.state = j.at("state").get<std::string>();
  return r;
}

json entities_to_json(const EntitySet& e) {
  return {{"hashtags", e.hashtags}, {"mentions", e.mentions}, {"url_count", e.url_count}, {"keyword_hits", e.keyword_hits}};
}

EntitySet entities_from_json(const json& j) {
  EntitySet e;
  e.hashtags = j.at("hashtags").get<std::vector<std::string>>();
  e.mentions = j.at("mentions").get<std::vector<std::string>>();
  e.url_count = j.at("url_count").get<std::size_t>();
  e.keyword_hits = j.at("keyword_hits").get<std::map<std::string, std::size_t>>();
  return e;
}

std::vector<json> read_jsonl(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("missing intermediate file " + path.string() + " (run the earlier stage first)");
  std::vector<json> lines;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      lines.push_back(json::parse(line));
    } catch (const json::exception& e) {
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return lines;
}

// One scored tweet as the report and classify tasks see it.
struct ScoredTweet {
  TweetRecord record;
  EntitySet entities;
  Document words;   // stopword-cleaned raw tokens
  Document stems;   // stems of the same tokens
  double valence = 0.0;
  std::optional<int> label;
  bool fear_dominant = false;
};

std::vector<ScoredTweet> load_scored(const fs::path& dir) {
  std::vector<ScoredTweet> out;
  try {
    for (const auto& j : read_jsonl(dir / kScoredFile)) {
      ScoredTweet t;
      t.record = record_from_json(j.at("record"));
      t.entities = entities_from_json(j.at("entities"));
      const auto char_length = j.at("char_length").get<std::size_t>();
      t.words = Document{t.record.id, j.at("tokens").get<std::vector<std::string>>(), char_length};
      t.stems = Document{t.record.id, j.at("stems").get<std::vector<std::string>>(), char_length};
      t.valence = j.at("valence").get<double>();
      const auto& label = j.at("label");
      if (!label.is_null()) t.label = label.get<int>();
      const auto& dominant = j.at("dominant");
      t.fear_dominant = !dominant.is_null() && dominant.get<std::string>() == "fear";
      out.push_back(std::move(t));
    }
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed ") + std::string(kScoredFile) + ": " + e.what());
  }
  return out;
}

std::vector<LabeledDocument> labeled_stems(const std::vector<ScoredTweet>& tweets) {
  std::vector<LabeledDocument> docs;
  for (const auto& t : tweets) {
    if (t.label) docs.emplace_back(t.stems, *t.label);
  }
  return docs;
}

std::vector<LabeledFeatures> featurize(const std::vector<LabeledDocument>& docs, const Vocabulary& vocab) {
  std::vector<LabeledFeatures> data;
  data.reserve(docs.size());
  for (const auto& [doc, label] : docs) data.emplace_back(vectorize(doc, vocab), label);
  return data;
}

// ---- inputs loaded once per run ---------------------------------------------

struct Resources {
  std::unordered_set<std::string> stopwords;
  std::vector<std::string> abusive;
  KeywordGroups groups;
  SentimentLexicon lexicon;
};

Resources load_resources(const RunConfig& config, const std::set<std::string>& tasks) {
  Resources res;
  try {
    if (tasks.contains("clean")) {
      for (auto& w : text::read_word_list_file(config.stopwords)) res.stopwords.insert(text::to_lower_ascii(w));
      for (auto& w : text::read_word_list_file(config.abusive)) res.abusive.push_back(text::to_lower_ascii(w));
      if (res.abusive.empty()) throw DataError("abusive word list " + config.abusive + " is empty");
      res.groups = parse_keyword_groups(text::read_file(config.keyword_groups));
      if (!res.groups.contains("abusew")) res.groups["abusew"] = res.abusive;
    }
    if (tasks.contains("sentiment")) res.lexicon = load_lexicon(text::read_file(config.lexicon));
  } catch (const LexiconError& e) {
    throw DataError(e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  } catch (const DataError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw DataError(e.what());
  }
  return res;
}

// ---- tasks -------------------------------------------------------------------

void task_ingest(const RunConfig& config, OutputWriter& out) {
  std::vector<TweetRecord> all;
  json report = {{"files", json::array()}};
  std::size_t total_read = 0;
  for (const auto& path : config.corpus) {
    ParseResult parsed;
    try {
      parsed = parse_tweet_csv(text::read_file(path), config.schema);
    } catch (const SchemaError& e) {
      throw DataError(path + ": " + e.what());
    } catch (const std::runtime_error& e) {
      throw DataError(e.what());
    }
    total_read += parsed.report.rows_read;
    report["files"].push_back({{"path", fs::path(path).filename().string()},
                               {"rows_read", parsed.report.rows_read},
                               {"accepted", parsed.report.accepted},
                               {"rejected", parsed.report.rejected}});
    std::move(parsed.records.begin(), parsed.records.end(), std::back_inserter(all));
  }
  const std::vector<TweetRecord> kept = filter_corpus(all, config.keyword, config.country);
  report["rows_read"] = total_read;
  report["parsed"] = all.size();
  report["kept"] = kept.size();
  report["keyword"] = config.keyword;
  report["country"] = config.country;

  std::vector<json> lines;
  lines.reserve(kept.size());
  for (const auto& r : kept) lines.push_back(record_to_json(r));
  out.write_jsonl(std::string(kCorpusFile), lines, "ingest");
  out.write_json("ingest_report.json", report, "ingest");
}

void task_clean(const RunConfig& config, const Resources& res, OutputWriter& out) {
  std::vector<json> lines;
  std::size_t index = 0;
  for (const auto& j : read_jsonl(out.dir() / kCorpusFile)) {
    TweetRecord rec;
    try {
      rec = record_from_json(j);
    } catch (const json::exception& e) {
      throw DataError(std::string("malformed corpus.jsonl: ") + e.what());
    }
    const EntitySet entities = extract_entities(rec.text, res.groups);
    // Each record gets its own generator stream derived from the run seed.
    const MaskedText masked = mask_abusive(rec.text, res.abusive, config.seed + index++);
    const auto tokens = remove_stopwords(tokenize(masked.text), res.stopwords);
    const std::size_t char_length = text::utf8_length(rec.text);
    rec.text = masked.text;
    lines.push_back({{"record", record_to_json(rec)},
                     {"char_length", char_length},
                     {"replacements", masked.replacements},
                     {"entities", entities_to_json(entities)},
                     {"tokens", tokens},
                     {"stems", stem_all(tokens)}});
  }
  out.write_jsonl(std::string(kCleanedFile), lines, "clean");
}

void task_sentiment(const Resources& res, OutputWriter& out) {
  std::vector<json> lines;
  for (auto j : read_jsonl(out.dir() / kCleanedFile)) {
    Document doc;
    try {
      doc.tokens = j.at("tokens").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
      throw DataError(std::string("malformed cleaned.jsonl: ") + e.what());
    }
    const SentimentScore score = valence_score(doc, res.lexicon);
    const EmotionProfile profile = emotion_profile(doc, res.lexicon);
    const auto label = label_binary(score);
    j["valence"] = score.value;
    j["matched"] = score.matched;
    j["polarity"] = to_string(score.label);
    j["label"] = label ? json(*label) : json(nullptr);
    j["emotions"] = profile.counts;
    j["dominant"] = profile.dominant ? json(*profile.dominant) : json(nullptr);
    lines.push_back(std::move(j));
  }
  out.write_jsonl(std::string(kScoredFile), lines, "score");
}

void task_ngrams(const RunConfig& config, const std::vector<ScoredTweet>& tweets, OutputWriter& out) {
  std::vector<Document> docs;
  docs.reserve(tweets.size());
  for (const auto& t : tweets) docs.push_back(t.words);

  CsvBuilder ngram_csv({"n", "tokens", "frequency"});
  for (int n = 1; n <= kMaxNGram; ++n) {
    for (const auto& row : top_ngrams(docs, n, config.top_k, config.ngram_min_freq)) {
      std::string joined;
      for (const auto& tok : row.sequence) joined += (joined.empty() ? "" : " ") + tok;
      ngram_csv.row({std::to_string(n), joined, num(row.frequency)});
    }
  }
  out.write("ngrams.csv", ngram_csv.str(), ngram_csv.rows(), "reports");

  CsvBuilder cloud({"word", "frequency"});
  for (const auto& row : wordcloud_export(docs, config.top_k)) cloud.row({row.value, num(row.frequency)});
  out.write("wordcloud.csv", cloud.str(), cloud.rows(), "reports");
}

void task_summarize(const RunConfig& config, const std::vector<ScoredTweet>& tweets, OutputWriter& out) {
  std::vector<TweetRecord> records;
  std::vector<EntitySet> entities;
  KeywordGroups groups;
  for (const auto& t : tweets) {
    records.push_back(t.record);
    entities.push_back(t.entities);
    for (const auto& [group, hits] : t.entities.keyword_hits) groups.try_emplace(group);
  }
  const auto rows = source_feature_summary(records, entities, groups);

  std::vector<std::string> header = {"source", "total", "hashtags", "mentions", "urls"};
  for (const auto& [group, words] : groups) header.push_back(group);
  CsvBuilder summary(header);
  for (const auto& r : rows) {
    std::vector<std::string> cells = {r.source, num(r.total), num(r.hashtags), num(r.mentions), num(r.urls)};
    for (const auto& [group, words] : groups) cells.push_back(num(r.keyword_hits.at(group)));
    summary.row(cells);
  }
  out.write("source_summary.csv", summary.str(), summary.rows(), "reports");

  const RatioSummary ratios = relative_ratio_summary(rows);
  CsvBuilder ratio_csv(header);
  for (const auto& r : ratios.rows) {
    std::vector<std::string> cells = {r.source, num(r.total), format_double(r.hashtags), format_double(r.mentions),
                                      format_double(r.urls)};
    for (const auto& [group, words] : groups) cells.push_back(format_double(r.keyword_hits.at(group)));
    ratio_csv.row(cells);
  }
  out.write("source_ratios.csv", ratio_csv.str(), ratio_csv.rows(), "reports");

  auto emit = [&](const std::string& name, const std::vector<FrequencyRow>& table) {
    CsvBuilder csv({"value", "frequency"});
    for (const auto& row : table) csv.row({row.value, num(row.frequency)});
    out.write(name, csv.str(), csv.rows(), "reports");
  };
  const std::size_t k = config.top_k;
  emit("freq_mentions.csv", frequency_table(tweets, [](const ScoredTweet& t) { return t.entities.mentions; }, k));
  emit("freq_hashtags.csv", frequency_table(tweets, [](const ScoredTweet& t) { return t.entities.hashtags; }, k));
  emit("freq_sources.csv", frequency_table(tweets, [](const ScoredTweet& t) { return t.record.source; }, k));
  emit("freq_screen_names.csv", frequency_table(tweets, [](const ScoredTweet& t) { return t.record.screen_name; }, k));
  emit("freq_tagged_locations.csv",
       frequency_table(tweets, [](const ScoredTweet& t) { return t.record.tagged_location; }, k));
  emit("freq_stated_locations.csv",
       frequency_table(tweets, [](const ScoredTweet& t) { return t.record.stated_location; }, k));
}

void task_fearcurve(const RunConfig& config, const std::vector<ScoredTweet>& tweets, OutputWriter& out) {
  std::vector<DatedFlag> items;
  items.reserve(tweets.size());
  for (const auto& t : tweets) items.push_back({t.record.created_at, t.fear_dominant});
  const DailySeries series = fear_curve(items, config.lowess_fraction, config.lowess_iterations);
  CsvBuilder csv({"date", "count", "increment", "smoothed"});
  for (std::size_t i = 0; i < series.dates.size(); ++i) {
    csv.row({format_date(series.dates[i]), num(series.counts[i]),
             i == 0 ? std::string() : std::to_string(series.increments[i - 1]), format_double(series.smoothed[i])});
  }
  out.write("fear_curve.csv", csv.str(), csv.rows(), "reports");
}

void task_geomap(const std::vector<ScoredTweet>& tweets, OutputWriter& out) {
  std::vector<StateObservation> obs;
  for (const auto& t : tweets) obs.push_back({t.record.state, t.valence, t.fear_dominant});
  CsvBuilder csv({"state", "mean_valence", "fear_share", "n"});
  for (const auto& row : state_sentiment_aggregate(obs)) {
    csv.row({row.state, format_double(row.mean_valence), format_double(row.fear_share), num(row.n)});
  }
  out.write("state_sentiment.csv", csv.str(), csv.rows(), "reports");
}

void task_train_nb(const RunConfig& config, const std::vector<ScoredTweet>& tweets, OutputWriter& out) {
  const auto docs = labeled_stems(tweets);
  std::vector<Document> plain;
  for (const auto& [doc, label] : docs) plain.push_back(doc);
  const NBModel model = train_nb(docs, build_vocabulary(plain, config.vocab_size), {0, 1});
  out.write_json("nb_model.json", to_json(model), "classify");
}

void task_train_lr(const RunConfig& config, const std::vector<ScoredTweet>& tweets, OutputWriter& out) {
  const auto docs = labeled_stems(tweets);
  std::vector<Document> plain;
  for (const auto& [doc, label] : docs) plain.push_back(doc);
  const Vocabulary vocab = build_vocabulary(plain, config.vocab_size);
  auto [model, trace] = train_lr(featurize(docs, vocab), config.eta, config.epochs, config.seed);
  model.vocabulary = vocab;
  json j = to_json(model);
  j["epoch_mean_loss"] = trace.epoch_mean_loss;
  out.write_json("lr_model.json", j, "classify");
}

void task_evaluate(const RunConfig& config, const std::vector<ScoredTweet>& tweets, OutputWriter& out) {
  const auto docs = labeled_stems(tweets);
  CsvBuilder csv({"classifier", "bucket", "max_chars", "tn", "fp", "fn", "tp", "accuracy", "sensitivity",
                  "specificity", "train_size", "test_size", "seed"});
  for (const std::size_t max_chars : config.buckets) {
    const LengthBucket bucket(max_chars);
    const Split split = balanced_split(docs, bucket, config.test_size, config.seed);
    std::vector<Document> train_docs;
    for (const auto& [doc, label] : split.train) train_docs.push_back(doc);
    const Vocabulary vocab = build_vocabulary(train_docs, config.vocab_size);
    std::vector<int> actuals;
    for (const auto& [doc, label] : split.test) actuals.push_back(label);

    const NBModel nb = train_nb(split.train, vocab, {0, 1});
    std::vector<int> nb_pred;
    for (const auto& [doc, label] : split.test) nb_pred.push_back(predict_nb(nb, doc));

    const auto [lr, trace] = train_lr(featurize(split.train, vocab), config.eta, config.epochs, config.seed);
    std::vector<int> lr_pred;
    for (const auto& [doc, label] : split.test) lr_pred.push_back(predict_lr(lr, vectorize(doc, vocab)).label);

    for (const auto& [name, preds] : {std::pair{std::string("nb"), nb_pred}, std::pair{std::string("lr"), lr_pred}}) {
      EvaluationReport report;
      report.classifier = name;
      report.bucket = bucket;
      report.matrix = confusion(preds, actuals);
      report.scores = metrics(report.matrix);
      report.train_size = split.train.size();
      report.test_size = split.test.size();
      report.seed = config.seed;
      out.write_json("eval_" + name + "_" + bucket.name() + ".json", to_json(report), "classify");
      csv.row({name, bucket.name(), num(max_chars), num(report.matrix.tn), num(report.matrix.fp),
               num(report.matrix.fn), num(report.matrix.tp), format_double(report.scores.accuracy),
               optional_metric(report.scores.sensitivity), optional_metric(report.scores.specificity),
               num(report.train_size), num(report.test_size), std::to_string(report.seed)});
    }
  }
  out.write("evaluation.csv", csv.str(), csv.rows(), "classify");
}

json manifest_to_json(const std::vector<ManifestEntry>& entries) {
  json list = json::array();
  for (const auto& e : entries) {
    list.push_back({{"path", e.path}, {"rows", e.rows}, {"sha256", e.sha256}, {"stage", e.stage}});
  }
  return list;
}

std::vector<ManifestEntry> read_manifest(const fs::path& path) {
  std::vector<ManifestEntry> entries;
  std::ifstream in(path);
  if (!in) return entries;
  try {
    for (const auto& e : json::parse(in)) {
      entries.push_back({e.at("path").get<std::string>(), e.at("rows").get<std::size_t>(),
                         e.at("sha256").get<std::string>(), e.at("stage").get<std::string>()});
    }
  } catch (const json::exception& e) {
    throw DataError("malformed manifest " + path.string() + ": " + e.what());
  }
  return entries;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k = {"corpus",      "lexicon",        "stopwords",       "abusive",
                                  "keyword_groups", "keyword",     "country",         "vocab_size",
                                  "eta",         "epochs",         "buckets",         "test_size",
                                  "seed",        "out",            "lowess_fraction", "lowess_iterations",
                                  "top_k",       "ngram_min_freq"};
    for (const auto& f : CsvSchema::logical_fields()) k.push_back("column_" + f);
    return k;
  }();
  return keys;
}

void set_config_value(RunConfig& c, std::string_view key, std::string_view value, const std::string& base_dir) {
  const std::string v(text::trim(value));
  if (key == "corpus") {
    c.corpus.clear();
    for (const auto& p : split_list(v)) c.corpus.push_back(resolve(p, base_dir));
  } else if (key == "lexicon") {
    c.lexicon = resolve(v, base_dir);
  } else if (key == "stopwords") {
    c.stopwords = resolve(v, base_dir);
  } else if (key == "abusive") {
    c.abusive = resolve(v, base_dir);
  } else if (key == "keyword_groups") {
    c.keyword_groups = resolve(v, base_dir);
  } else if (key == "out") {
    c.out = resolve(v, base_dir);
  } else if (key == "keyword") {
    c.keyword = v;
  } else if (key == "country") {
    c.country = v;
  } else if (key == "vocab_size") {
    c.vocab_size = parse_number<std::size_t>(key, v);
  } else if (key == "eta") {
    c.eta = parse_number<double>(key, v);
  } else if (key == "epochs") {
    c.epochs = parse_number<std::size_t>(key, v);
  } else if (key == "buckets") {
    c.buckets.clear();
    for (const auto& b : split_list(v)) c.buckets.push_back(parse_number<std::size_t>(key, b));
  } else if (key == "test_size") {
    c.test_size = parse_number<std::size_t>(key, v);
  } else if (key == "seed") {
    c.seed = parse_number<std::uint64_t>(key, v);
  } else if (key == "lowess_fraction") {
    c.lowess_fraction = parse_number<double>(key, v);
  } else if (key == "lowess_iterations") {
    c.lowess_iterations = parse_number<std::size_t>(key, v);
  } else if (key == "top_k") {
    c.top_k = parse_number<std::size_t>(key, v);
  } else if (key == "ngram_min_freq") {
    c.ngram_min_freq = parse_number<std::size_t>(key, v);
  } else if (key.starts_with("column_")) {
    if (v.empty() || !c.schema.set(key.substr(7), v)) throw ConfigError("invalid column mapping " + std::string(key));
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

void load_config_file(RunConfig& config, const std::string& path) {
  std::string content;
  try {
    content = text::read_file(path);
  } catch (const std::runtime_error&) {
    throw ConfigError("cannot read config file " + path);
  }
  const std::string base_dir = fs::path(path).parent_path().string();
  std::size_t line_no = 0;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view l = text::trim(line);
    if (l.empty() || l.front() == '#') continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    set_config_value(config, text::trim(l.substr(0, eq)), l.substr(eq + 1), base_dir);
  }
}

void validate(const RunConfig& c, const std::set<std::string>& tasks) {
  auto require_file = [](const std::string& key, const std::string& path) {
    if (path.empty()) throw ConfigError("missing required setting '" + key + "'");
    if (!fs::is_regular_file(path)) throw ConfigError(key + ": no such file " + path);
  };
  auto check_if_set = [&](const std::string& key, const std::string& path) {
    if (!path.empty()) require_file(key, path);
  };
  for (const auto& p : c.corpus) require_file("corpus", p);
  check_if_set("lexicon", c.lexicon);
  check_if_set("stopwords", c.stopwords);
  check_if_set("abusive", c.abusive);
  check_if_set("keyword_groups", c.keyword_groups);

  if (tasks.contains("ingest")) {
    if (c.corpus.empty()) throw ConfigError("missing required setting 'corpus'");
    if (c.keyword.empty()) throw ConfigError("keyword filter must be non-empty");
  }
  if (tasks.contains("clean")) {
    require_file("stopwords", c.stopwords);
    require_file("abusive", c.abusive);
    require_file("keyword_groups", c.keyword_groups);
  }
  if (tasks.contains("sentiment")) require_file("lexicon", c.lexicon);
  if (c.out.empty()) throw ConfigError("missing output directory");
  if (c.vocab_size == 0) throw ConfigError("vocab_size must be at least 1");
  if (!(c.eta >= 0.0)) throw ConfigError("eta must be non-negative");
  if (c.epochs == 0) throw ConfigError("epochs must be at least 1");
  if (c.buckets.empty()) throw ConfigError("at least one bucket is required");
  for (std::size_t i = 0; i < c.buckets.size(); ++i) {
    if (c.buckets[i] == 0 || (i > 0 && c.buckets[i] <= c.buckets[i - 1])) {
      throw ConfigError("buckets must be positive and strictly increasing");
    }
  }
  if (c.test_size == 0 || c.test_size % 2 != 0) throw ConfigError("test_size must be a positive even number");
  if (!(c.lowess_fraction > 0.0 && c.lowess_fraction <= 1.0)) throw ConfigError("lowess_fraction must be in (0, 1]");
  if (c.top_k == 0) throw ConfigError("top_k must be at least 1");
  if (c.ngram_min_freq == 0) throw ConfigError("ngram_min_freq must be at least 1");
}

const std::vector<std::string>& all_tasks() { return kTasks; }

std::set<std::string> tasks_for_stages(std::string_view stages) {
  std::set<std::string> tasks;
  for (const auto& name : split_list(stages)) {
    if (auto it = kStages.find(name); it != kStages.end()) {
      tasks.insert(it->second.begin(), it->second.end());
    } else if (std::find(kTasks.begin(), kTasks.end(), name) != kTasks.end()) {
      tasks.insert(name);
    } else {
      throw ConfigError("unknown stage '" + name + "'");
    }
  }
  if (tasks.empty()) throw ConfigError("no stages selected");
  return tasks;
}

std::string_view stage_of(std::string_view task) {
  for (const auto& [stage, tasks] : kStages) {
    if (std::find(tasks.begin(), tasks.end(), task) != tasks.end()) return stage;
  }
  return {};
}

PipelineResult run_pipeline(const RunConfig& config, const std::set<std::string>& tasks, bool fresh_manifest) {
  PipelineResult result;
  Resources resources;
  try {
    validate(config, tasks);
    resources = load_resources(config, tasks);
  } catch (const ConfigError& e) {
    result.status = kConfigError;
    result.message = e.what();
    return result;
  } catch (const DataError& e) {
    result.status = kDataError;
    result.message = e.what();
    return result;
  }

  const fs::path dir(config.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    result.status = kConfigError;
    result.message = "cannot create output directory " + dir.string() + ": " + ec.message();
    return result;
  }
  std::vector<ManifestEntry> manifest;
  if (!fresh_manifest) {
    try {
      manifest = read_manifest(dir / "manifest.json");
    } catch (const DataError& e) {
      result.status = kDataError;
      result.message = e.what();
      return result;
    }
  }
  OutputWriter out(dir, manifest);

  std::optional<std::vector<ScoredTweet>> scored;  // loaded lazily for report/classify tasks
  auto scored_tweets = [&]() -> const std::vector<ScoredTweet>& {
    if (!scored) scored = load_scored(dir);
    return *scored;
  };

  std::string current;
  try {
    for (const auto& task : kTasks) {
      if (!tasks.contains(task)) continue;
      current = task;
      if (task == "ingest") task_ingest(config, out);
      else if (task == "clean") task_clean(config, resources, out);
      else if (task == "sentiment") task_sentiment(resources, out);
      else if (task == "ngrams") task_ngrams(config, scored_tweets(), out);
      else if (task == "summarize") task_summarize(config, scored_tweets(), out);
      else if (task == "fearcurve") task_fearcurve(config, scored_tweets(), out);
      else if (task == "geomap") task_geomap(scored_tweets(), out);
      else if (task == "train-nb") task_train_nb(config, scored_tweets(), out);
      else if (task == "train-lr") task_train_lr(config, scored_tweets(), out);
      else if (task == "evaluate") task_evaluate(config, scored_tweets(), out);
      const std::string stage(stage_of(task));
      if (std::find(result.completed_stages.begin(), result.completed_stages.end(), stage) ==
          result.completed_stages.end()) {
        result.completed_stages.push_back(stage);
      }
    }
  } catch (const DataError& e) {
    result.status = kDataError;
    result.message = current + ": " + e.what();
  } catch (const std::exception& e) {
    result.status = kStageFailure;
    result.message = current + ": " + e.what();
  }
  if (result.status != kSuccess && !current.empty()) {
    // A partially completed stage is not reported as completed.
    const std::string stage(stage_of(current));
    std::erase(result.completed_stages, stage);
  }

  const std::string manifest_text = manifest_to_json(manifest).dump(2) + '\n';
  std::ofstream(dir / "manifest.json", std::ios::binary | std::ios::trunc) << manifest_text;
  result.files = manifest;
  return result;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xF]);
  }
  return hex;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("cannot format double");
  return std::string(buf, ptr);
}

}  // namespace tweetlab
