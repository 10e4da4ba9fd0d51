#pragma once

#include <string>

#include "cyberlex/pipeline.hpp"
#include "cyberlex/relatedness.hpp"
#include "cyberlex/scorers.hpp"

namespace cyberlex {

// Every knob of a build/score/eval run, loadable from a flat key=value file
// so a run is reproducible from a single artifact.
struct RunConfig {
  PipelineConfig pipeline;
  double percentile = 90.0;
  double prune_ratio = 0.90;
  Smoothing smoothing = Smoothing::Raw;
  LogBase log_base = LogBase::Natural;
  TfidfAggregate tfidf_aggregate = TfidfAggregate::Mean;
  ScoreColumn score_column = ScoreColumn::ApmisRescaled;
  bool inclusive_cutoff = false;
  std::size_t cooc_window = 0;  // 0 = whole document

  std::string stopwords_path;
  std::string blocklist_path;
  std::string forum_words_path;
  std::string tag_dictionary_path;
};

// Parses "key = value" lines ('#' comments, blank lines allowed). Unknown
// keys are an error. Path entries are resolved relative to the config file.
RunConfig load_run_config(const std::string& path);

// Applies the file-backed resources (stopwords, forum words) onto the
// pipeline config; called by load_run_config, exposed for tests.
void apply_resource_paths(RunConfig& cfg);

}  // namespace cyberlex
