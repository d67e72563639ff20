#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tweetlab/corpus.hpp"

namespace tweetlab {

/// Invalid configuration: unknown key, malformed value or missing input file.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Unreadable or malformed input data (corpus schema, lexicon, intermediate files).
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::string> corpus;
  std::string lexicon;
  std::string stopwords;
  std::string abusive;
  std::string keyword_groups;
  std::string keyword = "corona";
  std::string country = "United States";
  std::size_t vocab_size = 2000;
  double eta = 0.1;
  std::size_t epochs = 100;
  std::vector<std::size_t> buckets = {77, 120};
  std::size_t test_size = 70;
  std::uint64_t seed = 42;
  std::string out = "out";
  double lowess_fraction = 2.0 / 3.0;
  std::size_t lowess_iterations = 0;
  std::size_t top_k = 25;
  std::size_t ngram_min_freq = 2;
  CsvSchema schema;
};

/// Keys accepted in config files and as --flags. Column mappings use
/// "column_<logical field>".
const std::vector<std::string>& config_keys();

/// Applies one key=value setting. Relative paths resolve against `base_dir`.
/// Throws ConfigError.
void set_config_value(RunConfig& config, std::string_view key, std::string_view value, const std::string& base_dir);

/// Flat "key=value" file; '#' comments and blank lines ignored. Paths in the
/// file are relative to the file's directory.
void load_config_file(RunConfig& config, const std::string& path);

/// Checks referenced paths and value ranges. Throws ConfigError.
void validate(const RunConfig& config, const std::set<std::string>& tasks);

/// Task names in execution order.
const std::vector<std::string>& all_tasks();

/// Expands a comma list of stage names (ingest, clean, score, reports,
/// classify) or task names into tasks. Throws ConfigError.
std::set<std::string> tasks_for_stages(std::string_view stages);

/// Stage a task belongs to.
std::string_view stage_of(std::string_view task);

struct ManifestEntry {
  std::string path;  // relative to the output directory
  std::size_t rows = 0;
  std::string sha256;
  std::string stage;
};

enum ExitStatus : int { kSuccess = 0, kConfigError = 2, kDataError = 3, kStageFailure = 4 };

struct PipelineResult {
  int status = kSuccess;
  std::string message;
  std::vector<ManifestEntry> files;
  std::vector<std::string> completed_stages;
};

/// Runs the requested tasks in dependency order, reading earlier stages'
/// outputs from config.out. Writes manifest.json listing every file emitted.
/// With `fresh_manifest` false, entries from an existing manifest are kept
/// unless overwritten.
PipelineResult run_pipeline(const RunConfig& config, const std::set<std::string>& tasks, bool fresh_manifest = true);

std::string sha256_hex(std::string_view data);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

}  // namespace tweetlab
