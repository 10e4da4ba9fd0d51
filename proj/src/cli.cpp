#include "cyberlex/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <memory>
#include <unordered_map>

#include <CLI11.hpp>

#include "cyberlex/evaluator.hpp"
#include "cyberlex/lexicon.hpp"
#include "cyberlex/term_stats.hpp"

namespace cyberlex {

namespace {

std::unique_ptr<Tagger> make_tagger(const RunConfig& cfg) {
  if (!cfg.tag_dictionary_path.empty()) {
    return std::make_unique<DictionaryTagger>(
        DictionaryTagger::from_file(cfg.tag_dictionary_path));
  }
  return std::make_unique<DictionaryTagger>();
}

}  // namespace

int cmd_build(const std::string& corpus_path, const std::string& out_path,
              const CliOptions& opts) {
  const RunConfig& cfg = opts.config;

  Corpus raw = load_corpus(corpus_path, /*expect_labels=*/false);
  Corpus unique = dedupe(raw);
  std::vector<Document> sentences;
  for (const Document& doc : unique.documents) {
    auto split = split_sentences(doc);
    sentences.insert(sentences.end(), std::make_move_iterator(split.begin()),
                     std::make_move_iterator(split.end()));
  }

  std::unique_ptr<Tagger> tagger = make_tagger(cfg);
  std::vector<std::vector<std::string>> doc_terms =
      run_pipeline_batch(sentences, *tagger, cfg.pipeline, opts.threads);
  std::vector<std::string> doc_ids;
  doc_ids.reserve(sentences.size());
  for (const Document& doc : sentences) doc_ids.push_back(doc.id);

  TermDocMatrix matrix = build_term_doc(doc_terms, std::move(doc_ids),
                                        opts.threads);
  std::size_t candidates = matrix.n_terms();
  matrix = prune_ubiquitous(matrix, cfg.prune_ratio);
  CoocMatrix cooc =
      build_cooc(doc_terms, matrix.vocab, opts.threads, cfg.cooc_window);
  if (!opts.cooc_dump_path.empty()) dump_cooc(cooc, opts.cooc_dump_path);

  ScoreTable table = make_score_table(
      matrix, cooc, cfg.log_base, cfg.smoothing, cfg.tfidf_aggregate,
      fingerprint_doc_terms(doc_terms), opts.threads);

  std::vector<std::string> blocklist;
  if (!cfg.blocklist_path.empty()) {
    blocklist = load_blocklist(cfg.blocklist_path);
  }
  Lexicon lexicon =
      assemble_lexicon(table, cfg.percentile, blocklist, cfg.inclusive_cutoff);
  save_lexicon(lexicon, out_path);

  if (!opts.quiet) {
    // how aggressively each stage filtered
    std::size_t passing = 0;
    auto passes = [&](double s, double c) {
      return cfg.inclusive_cutoff ? s >= c : s > c;
    };
    for (std::size_t i = 0; i < table.terms.size(); ++i) {
      if (passes(table.tfidf[i], lexicon.metadata().cutoff_tfidf) ||
          passes(table.fdr[i], lexicon.metadata().cutoff_fdr) ||
          passes(table.apmis[i], lexicon.metadata().cutoff_apmis)) {
        ++passing;
      }
    }
    std::printf("documents loaded:       %zu\n", raw.documents.size());
    std::printf("after dedupe:           %zu\n", unique.documents.size());
    std::printf("sentence documents:     %zu\n", sentences.size());
    std::printf("candidate terms:        %zu\n", candidates);
    std::printf("after ubiquity pruning: %zu\n", matrix.n_terms());
    std::printf("passing any cutoff:     %zu\n", passing);
    std::printf("lexicon entries:        %zu\n", lexicon.size());
    std::printf("lexicon written to %s\n", out_path.c_str());
  }
  return 0;
}

int cmd_score(const std::string& lexicon_path, const std::string& input_path,
              const std::string& out_path, const CliOptions& opts) {
  Lexicon lexicon = load_lexicon(lexicon_path);
  Corpus corpus = load_corpus(input_path, /*expect_labels=*/false);

  std::vector<CrResult> results = score_batch(
      lexicon, corpus.documents, opts.config.score_column, opts.threads);
  std::vector<std::string> ids;
  ids.reserve(corpus.documents.size());
  for (const Document& doc : corpus.documents) ids.push_back(doc.id);
  save_cr_rows(ids, results, out_path);

  if (!opts.quiet) {
    std::printf("scored %zu documents (column %s) -> %s\n", results.size(),
                std::string(score_column_name(opts.config.score_column)).c_str(),
                out_path.c_str());
  }
  return 0;
}

int cmd_eval(const std::string& scores_path, const std::string& labels_path,
             const std::string& out_path, const CliOptions& opts) {
  std::vector<CrRow> rows = load_cr_rows(scores_path);
  if (rows.empty()) throw Error("score file has no rows");
  Corpus labeled = load_corpus(labels_path, /*expect_labels=*/true);

  std::unordered_map<std::string, int> label_of;
  label_of.reserve(labeled.documents.size());
  for (const Document& doc : labeled.documents) {
    label_of[doc.id] = *doc.label == Label::Cyber ? 1 : 0;
  }

  std::vector<double> scores;
  std::vector<int> labels;
  scores.reserve(rows.size());
  labels.reserve(rows.size());
  for (const CrRow& row : rows) {
    auto it = label_of.find(row.id);
    if (it == label_of.end()) {
      throw Error("no label for scored id \"" + row.id + "\"");
    }
    scores.push_back(row.cr);
    labels.push_back(it->second);
  }

  EvalReport report = evaluate(scores, labels);
  save_eval_report(report, out_path);

  if (!opts.quiet) {
    const MetricSet& m = report.metric_set;
    std::printf("AUC:        %.4f\n", report.roc.auc);
    std::printf("threshold:  %.6f\n", report.threshold);
    std::printf("confusion:  tp=%llu fp=%llu fn=%llu tn=%llu\n",
                static_cast<unsigned long long>(report.cm.tp),
                static_cast<unsigned long long>(report.cm.fp),
                static_cast<unsigned long long>(report.cm.fn),
                static_cast<unsigned long long>(report.cm.tn));
    std::printf("%-12s %6s\n", "Metric", "Value");
    std::printf("%-12s %5.1f%%\n", "Precision", 100.0 * m.precision);
    std::printf("%-12s %5.1f%%\n", "Recall", 100.0 * m.recall);
    std::printf("%-12s %5.1f%%\n", "Accuracy", 100.0 * m.accuracy);
    std::printf("%-12s %5.1f%%\n", "F1 Score", 100.0 * m.f1);
    std::printf("%-12s %5.1f%%\n", "Error Rate", 100.0 * m.error_rate);
  }
  return 0;
}

int cmd_inspect(const std::string& lexicon_path, int top_k,
                const std::string& column, const CliOptions& opts) {
  (void)opts;
  if (top_k <= 0) throw Error("inspect: top_k must be positive");
  Lexicon lexicon = load_lexicon(lexicon_path);

  auto ranked = [&](auto key) {
    std::vector<const LexiconEntry*> order;
    order.reserve(lexicon.size());
    for (const LexiconEntry& e : lexicon.entries()) order.push_back(&e);
    std::stable_sort(order.begin(), order.end(),
                     [&](const LexiconEntry* a, const LexiconEntry* b) {
                       return key(*a) > key(*b);
                     });
    return order;
  };

  std::size_t n = std::min<std::size_t>(top_k, lexicon.size());
  if (column == "all") {
    auto by_tfidf = ranked([](const LexiconEntry& e) { return e.tfidf; });
    auto by_fdr = ranked([](const LexiconEntry& e) { return e.fdr; });
    auto by_apmis = ranked([](const LexiconEntry& e) { return e.apmis; });
    std::printf("%-4s %-18s %-18s %-18s\n", "SN", "TF-IDF", "FDR", "APMIS");
    for (std::size_t i = 0; i < n; ++i) {
      std::printf("%-4zu %-18s %-18s %-18s\n", i + 1,
                  by_tfidf[i]->term.c_str(), by_fdr[i]->term.c_str(),
                  by_apmis[i]->term.c_str());
    }
    return 0;
  }

  ScoreColumn col = parse_score_column(column);
  auto key = [col](const LexiconEntry& e) {
    switch (col) {
      case ScoreColumn::Tfidf: return e.tfidf;
      case ScoreColumn::Fdr: return e.fdr;
      case ScoreColumn::Apmis: return e.apmis;
      case ScoreColumn::ApmisRescaled: return e.apmis_rescaled;
    }
    return e.apmis_rescaled;
  };
  auto order = ranked(key);
  std::printf("%-4s %-24s %s\n", "SN", "term", column.c_str());
  for (std::size_t i = 0; i < n; ++i) {
    std::printf("%-4zu %-24s %.6f\n", i + 1, order[i]->term.c_str(),
                key(*order[i]));
  }
  return 0;
}

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"domain lexicon induction and text relatedness toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  CliOptions opts;
  app.add_option("--config", config_path, "run configuration file");
  app.add_flag("--quiet", opts.quiet, "suppress progress output");
  app.add_option("--threads", opts.threads,
                 "worker threads (0 = all available)");

  auto* build = app.add_subcommand("build", "induce a lexicon from a corpus");
  std::string corpus_path, build_out;
  double percentile = -1.0, prune_ratio = -1.0;
  std::string blocklist_path, smoothing, log_base;
  build->add_option("corpus", corpus_path, "JSONL corpus file")->required();
  build->add_option("-o,--out", build_out, "lexicon output path")->required();
  build->add_option("--percentile", percentile, "score cutoff percentile");
  build->add_option("--prune-ratio", prune_ratio,
                    "document-frequency pruning ratio");
  build->add_option("--blocklist", blocklist_path, "curation blocklist file");
  build->add_option("--smoothing", smoothing,
                    "pmi smoothing: raw | laplace_add2 | alpha075");
  build->add_option("--log-base", log_base,
                    "tf-idf log base: natural | base10 | base2");
  build->add_option("--dump-cooc", opts.cooc_dump_path,
                    "write the co-occurrence matrix as term/term/count rows");

  auto* score = app.add_subcommand("score", "score texts against a lexicon");
  std::string lexicon_path, score_input, score_out, score_column;
  score->add_option("lexicon", lexicon_path, "lexicon file")->required();
  score->add_option("input", score_input, "JSONL input file")->required();
  score->add_option("-o,--out", score_out, "score CSV output path")->required();
  score->add_option("--column", score_column,
                    "score column: tfidf | fdr | apmis | apmis_rescaled");

  auto* eval = app.add_subcommand("eval", "evaluate scores against labels");
  std::string eval_scores, eval_labels, eval_out;
  eval->add_option("scores", eval_scores, "score CSV from the score command")
      ->required();
  eval->add_option("labels", eval_labels, "labeled JSONL file")->required();
  eval->add_option("-o,--out", eval_out, "report JSON output path")->required();

  auto* inspect = app.add_subcommand("inspect", "show top lexicon terms");
  std::string inspect_lexicon, inspect_column = "all";
  int top_k = 20;
  inspect->add_option("lexicon", inspect_lexicon, "lexicon file")->required();
  inspect->add_option("-k,--top", top_k, "how many terms to show");
  inspect->add_option("--column", inspect_column,
                      "tfidf | fdr | apmis | apmis_rescaled | all");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (!config_path.empty()) opts.config = load_run_config(config_path);

    if (build->parsed()) {
      if (percentile >= 0.0) opts.config.percentile = percentile;
      if (prune_ratio >= 0.0) opts.config.prune_ratio = prune_ratio;
      if (!blocklist_path.empty()) opts.config.blocklist_path = blocklist_path;
      if (!smoothing.empty()) opts.config.smoothing = parse_smoothing(smoothing);
      if (!log_base.empty()) opts.config.log_base = parse_log_base(log_base);
      return cmd_build(corpus_path, build_out, opts);
    }
    if (score->parsed()) {
      if (!score_column.empty()) {
        opts.config.score_column = parse_score_column(score_column);
      }
      return cmd_score(lexicon_path, score_input, score_out, opts);
    }
    if (eval->parsed()) {
      return cmd_eval(eval_scores, eval_labels, eval_out, opts);
    }
    if (inspect->parsed()) {
      return cmd_inspect(inspect_lexicon, top_k, inspect_column, opts);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace cyberlex
