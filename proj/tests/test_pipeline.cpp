#include <doctest.h>

#include <filesystem>
#include <set>
#include <string>

#include <json.hpp>

#include "oracles.hpp"
#include "tweetlab/pipeline.hpp"
#include "tweetlab/text_util.hpp"

using namespace tweetlab;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("tweetlab_test_" + name);
  fs::remove_all(p);
  return p;
}

RunConfig fixture_config(const fs::path& out) {
  RunConfig c;
  load_config_file(c, oracle::source_path("data/fixture.conf"));
  c.out = out.string();
  return c;
}

std::set<std::string> listed(const PipelineResult& r) {
  std::set<std::string> paths;
  for (const auto& e : r.files) paths.insert(e.path);
  return paths;
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("config parsing") {
  RunConfig c;
  set_config_value(c, "buckets", "77,120", "/base");
  CHECK(c.buckets == std::vector<std::size_t>{77, 120});
  set_config_value(c, "lexicon", "lex.tsv", "/base");
  CHECK(c.lexicon == "/base/lex.tsv");
  set_config_value(c, "column_text", "full_text", "/base");
  CHECK(c.schema.text == "full_text");
  CHECK_THROWS_AS(set_config_value(c, "bogus", "1", "/base"), ConfigError);
  CHECK_THROWS_AS(set_config_value(c, "epochs", "ten", "/base"), ConfigError);
  CHECK_THROWS_AS(tasks_for_stages("ingest,nope"), ConfigError);
  CHECK(tasks_for_stages("score") == std::set<std::string>{"sentiment"});
  CHECK(stage_of("train-lr") == "classify");
}

TEST_CASE("format_double is shortest round-trip") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
  CHECK(format_double(-2.0) == "-2");
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("ingest stage only") {
  auto out = scratch("ingest");
  auto result = run_pipeline(fixture_config(out), tasks_for_stages("ingest"));
  REQUIRE(result.status == kSuccess);
  CHECK(listed(result) == std::set<std::string>{"corpus.jsonl", "ingest_report.json"});
  CHECK(fs::exists(out / "manifest.json"));
  CHECK_FALSE(fs::exists(out / "source_summary.csv"));
  auto report = nlohmann::json::parse(text::read_file((out / "ingest_report.json").string()));
  CHECK(report.at("rows_read") == 200);
  fs::remove_all(out);
}

TEST_CASE("bad lexicon path writes nothing") {
  auto out = scratch("badlex");
  auto config = fixture_config(out);
  config.lexicon = oracle::source_path("data/does_not_exist.tsv");
  auto result = run_pipeline(config, std::set<std::string>(all_tasks().begin(), all_tasks().end()));
  CHECK(result.status == kConfigError);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("full run is reproducible") {
  auto a = scratch("full_a");
  auto b = scratch("full_b");
  const std::set<std::string> everything(all_tasks().begin(), all_tasks().end());
  auto ra = run_pipeline(fixture_config(a), everything);
  auto rb = run_pipeline(fixture_config(b), everything);
  REQUIRE(ra.status == kSuccess);
  REQUIRE(rb.status == kSuccess);
  for (const char* f : {"corpus.jsonl", "cleaned.jsonl", "scored.jsonl", "ngrams.csv", "wordcloud.csv",
                        "source_summary.csv", "source_ratios.csv", "freq_mentions.csv", "fear_curve.csv",
                        "state_sentiment.csv", "nb_model.json", "lr_model.json", "evaluation.csv"}) {
    CAPTURE(f);
    CHECK(listed(ra).count(f) == 1);
  }
  CHECK(text::read_file((a / "manifest.json").string()) == text::read_file((b / "manifest.json").string()));
  for (const auto& e : ra.files) {
    CAPTURE(e.path);
    CHECK(sha256_hex(text::read_file((a / e.path).string())) == e.sha256);
  }
  CHECK(ra.completed_stages == std::vector<std::string>{"ingest", "clean", "score", "reports", "classify"});

  // classify reruns from scored output alone
  auto rerun = run_pipeline(fixture_config(a), tasks_for_stages("classify"), false);
  CHECK(rerun.status == kSuccess);
  CHECK(text::read_file((a / "manifest.json").string()) == text::read_file((b / "manifest.json").string()));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("missing intermediate data is a data error") {
  auto out = scratch("nodata");
  auto result = run_pipeline(fixture_config(out), tasks_for_stages("reports"));
  CHECK(result.status == kDataError);
  CHECK(result.completed_stages.empty());
  fs::remove_all(out);
}

}  // TEST_SUITE
