#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "tweetlab/pipeline.hpp"

namespace {

const std::map<std::string, std::string> kSubcommands = {
    {"ingest", "Parse corpus CSVs and filter by keyword and country"},
    {"clean", "Extract entities, mask abusive words, tokenize and stem"},
    {"sentiment", "Score valence and emotion profiles"},
    {"ngrams", "Top n-gram and word-cloud frequency tables"},
    {"summarize", "Source-device summaries and frequency tables"},
    {"fearcurve", "Daily fear-dominant counts with LOWESS trend"},
    {"geomap", "Per-state valence and fear share"},
    {"train-nb", "Train naive Bayes on all labeled tweets"},
    {"train-lr", "Train logistic regression on all labeled tweets"},
    {"evaluate", "Balanced length-bucket evaluation of both classifiers"},
    {"run-all", "Run every stage (or the subset given by --stages)"},
};

}  // namespace

int main(int argc, char** argv) {
  using namespace tweetlab;

  CLI::App app{"Batch tweet text analytics: cleaning, sentiment, reports and classifiers"};
  app.require_subcommand(1);

  std::string config_path;
  std::string stages;
  app.add_option("--config", config_path, "Flat key=value config file; flags override its keys");
  app.add_option("--stages", stages, "run-all only: comma list of ingest,clean,score,reports,classify");

  std::map<std::string, std::string> flag_values;
  for (const auto& key : config_keys()) {
    std::string help = "Overrides config key '" + key + "'";
    if (key == "seed") help = "Seed for masking digits, splits and SGD order (default 42)";
    if (key == "out") help = "Output directory (default ./out)";
    app.add_option("--" + key, flag_values[key], help);
  }

  for (const auto& [name, description] : kSubcommands) {
    app.add_subcommand(name, description)->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  RunConfig config;
  std::set<std::string> tasks;
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (!config_path.empty()) load_config_file(config, config_path);
    const std::string cwd = std::filesystem::current_path().string();
    for (const auto& key : config_keys()) {
      if (app.count("--" + key) > 0) set_config_value(config, key, flag_values[key], cwd);
    }
    if (command == "run-all") {
      tasks = stages.empty() ? std::set<std::string>(all_tasks().begin(), all_tasks().end()) : tasks_for_stages(stages);
    } else {
      if (!stages.empty()) throw ConfigError("--stages is only valid with run-all");
      tasks = {command};
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  }

  const PipelineResult result = run_pipeline(config, tasks, command == "run-all");
  if (result.status != kSuccess) {
    const char* kind = result.status == kConfigError ? "config error" : result.status == kDataError ? "data error"
                                                                                                      : "stage failure";
    std::cerr << kind << ": " << result.message << '\n';
  }
  for (const auto& f : result.files) std::cout << f.stage << '\t' << f.path << '\t' << f.rows << '\n';
  return result.status;
}
