// Compares the serial reference kernels against their OpenMP versions on a
// synthetic corpus and prints per-kernel timings and speedups.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "cyberlex/pipeline.hpp"
#include "cyberlex/relatedness.hpp"
#include "cyberlex/scorers.hpp"
#include "cyberlex/term_stats.hpp"

using namespace cyberlex;

namespace {

std::vector<std::string> make_vocab(std::size_t n) {
  std::vector<std::string> vocab;
  vocab.reserve(n);
  const char* syllables[] = {"ka", "ri", "to", "ne", "su", "lo", "ba",
                             "mi", "du", "fe", "gor", "win", "tal"};
  for (std::size_t i = 0; i < n; ++i) {
    std::string w;
    std::size_t x = i;
    for (int s = 0; s < 3; ++s) {
      w += syllables[x % std::size(syllables)];
      x /= std::size(syllables);
    }
    vocab.push_back(std::move(w) + std::to_string(i % 7));
  }
  return vocab;
}

struct SynthCorpus {
  std::vector<Document> docs;
  std::vector<std::vector<std::string>> doc_terms;
};

SynthCorpus make_corpus(std::size_t n_docs, std::size_t doc_len,
                        std::size_t vocab_size, std::uint32_t seed) {
  std::vector<std::string> vocab = make_vocab(vocab_size);
  std::mt19937 rng(seed);
  // zipf-ish skew so the matrices are not uniform
  std::vector<double> weights(vocab_size);
  for (std::size_t i = 0; i < vocab_size; ++i) weights[i] = 1.0 / (1.0 + i);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());

  SynthCorpus c;
  c.docs.reserve(n_docs);
  c.doc_terms.reserve(n_docs);
  for (std::size_t d = 0; d < n_docs; ++d) {
    std::vector<std::string> terms;
    std::string text;
    for (std::size_t k = 0; k < doc_len; ++k) {
      const std::string& w = vocab[pick(rng)];
      terms.push_back(w);
      if (!text.empty()) text += ' ';
      text += w;
    }
    Document doc;
    doc.id = "d" + std::to_string(d);
    doc.source = Source::parse("twitter");
    doc.text = std::move(text);
    c.docs.push_back(std::move(doc));
    c.doc_terms.push_back(std::move(terms));
  }
  return c;
}

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(
             clock::now().time_since_epoch())
      .count();
}

template <typename F>
double time_ms(F&& f, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    double t0 = now_ms();
    f();
    best = std::min(best, now_ms() - t0);
  }
  return best;
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-22s %10.2f ms %10.2f ms %8.2fx\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel comparison"};
  std::size_t n_docs = 20000, doc_len = 16, vocab_size = 4000;
  int threads = 0, reps = 3;
  app.add_option("--docs", n_docs, "synthetic documents");
  app.add_option("--len", doc_len, "tokens per document");
  app.add_option("--vocab", vocab_size, "vocabulary size");
  app.add_option("--threads", threads, "threads for the parallel side");
  app.add_option("--reps", reps, "repetitions (best-of)");
  CLI11_PARSE(app, argc, argv);

  int n_threads = resolve_threads(threads);
  std::printf("corpus: %zu docs x %zu tokens, vocab %zu, %d threads\n\n",
              n_docs, doc_len, vocab_size, n_threads);
  std::printf("%-22s %13s %13s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  SynthCorpus corpus = make_corpus(n_docs, doc_len, vocab_size, 42);
  DictionaryTagger tagger;
  PipelineConfig pcfg;

  report("pipeline",
         time_ms([&] { run_pipeline_batch_serial(corpus.docs, tagger, pcfg); },
                 reps),
         time_ms(
             [&] {
               run_pipeline_batch(corpus.docs, tagger, pcfg, n_threads);
             },
             reps));

  std::vector<std::string> ids;
  for (const auto& d : corpus.docs) ids.push_back(d.id);
  TermDocMatrix matrix = build_term_doc(corpus.doc_terms, ids, n_threads);

  report("term_doc",
         time_ms([&] { build_term_doc_serial(corpus.doc_terms, ids); }, reps),
         time_ms([&] { build_term_doc(corpus.doc_terms, ids, n_threads); },
                 reps));

  CoocMatrix cooc = build_cooc(corpus.doc_terms, matrix.vocab, n_threads);
  report("cooc",
         time_ms([&] { build_cooc_serial(corpus.doc_terms, matrix.vocab); },
                 reps),
         time_ms(
             [&] { build_cooc(corpus.doc_terms, matrix.vocab, n_threads); },
             reps));

  report("tfidf",
         time_ms([&] { tfidf_scores_serial(matrix); }, reps),
         time_ms([&] { tfidf_scores(matrix, LogBase::Natural,
                                    TfidfAggregate::Mean, n_threads); },
                 reps));

  report("fdr", time_ms([&] { fdr_scores_serial(matrix, cooc); }, reps),
         time_ms([&] { fdr_scores(matrix, cooc, n_threads); }, reps));

  PmiMatrix pmi = pmi_matrix(cooc, Smoothing::Raw, n_threads);
  report("pmi",
         time_ms([&] { pmi_matrix_serial(cooc); }, reps),
         time_ms([&] { pmi_matrix(cooc, Smoothing::Raw, n_threads); }, reps));

  report("apmis", time_ms([&] { apmis_scores_serial(pmi); }, reps),
         time_ms([&] { apmis_scores(pmi, n_threads); }, reps));

  ScoreTable table = make_score_table(matrix, cooc);
  Lexicon lexicon = assemble_lexicon(table, 90.0, {});
  report("relatedness",
         time_ms([&] { score_batch_serial(lexicon, corpus.docs); }, reps),
         time_ms(
             [&] {
               score_batch(lexicon, corpus.docs,
                           ScoreColumn::ApmisRescaled, n_threads);
             },
             reps));

  return 0;
}
