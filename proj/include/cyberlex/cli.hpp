#pragma once

#include <string>
#include <vector>

#include "cyberlex/config.hpp"

namespace cyberlex {

struct CliOptions {
  RunConfig config;
  bool quiet = false;
  int threads = 0;  // 0 = auto
  std::string cooc_dump_path;  // build only; empty = no dump
};

// Lexicon induction: corpus -> pipeline -> matrices -> scores -> lexicon.
// Prints the per-stage term funnel unless quiet.
int cmd_build(const std::string& corpus_path, const std::string& out_path,
              const CliOptions& opts);

// Batch relatedness scoring of a JSONL input against a saved lexicon.
int cmd_score(const std::string& lexicon_path, const std::string& input_path,
              const std::string& out_path, const CliOptions& opts);

// ROC evaluation of a score file against labeled documents.
int cmd_eval(const std::string& scores_path, const std::string& labels_path,
             const std::string& out_path, const CliOptions& opts);

// Top-k lexicon terms by one score column, or all three side by side.
int cmd_inspect(const std::string& lexicon_path, int top_k,
                const std::string& column, const CliOptions& opts);

// Full argument parser; args excludes the program name. Returns the process
// exit status and reports errors on stderr.
int run_cli(const std::vector<std::string>& args);

}  // namespace cyberlex
