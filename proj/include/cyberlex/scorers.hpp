#pragma once

#include <string>
#include <vector>

#include "cyberlex/term_stats.hpp"

namespace cyberlex {

enum class LogBase { Natural, Base10, Base2 };
enum class Smoothing { Raw, LaplaceAdd2, Alpha075 };
enum class TfidfAggregate { Mean, Sum };

std::string_view log_base_name(LogBase b);
LogBase parse_log_base(std::string_view name);
std::string_view smoothing_name(Smoothing s);
Smoothing parse_smoothing(std::string_view name);

// Per-term TF-IDF, aligned with m.vocab: tf(t,d) = count/doc_length,
// idf = log(N/df), aggregated over the documents containing the term.
std::vector<double> tfidf_scores(const TermDocMatrix& m,
                                 LogBase base = LogBase::Natural,
                                 TfidfAggregate aggregate = TfidfAggregate::Mean,
                                 int threads = 0);
std::vector<double> tfidf_scores_serial(
    const TermDocMatrix& m, LogBase base = LogBase::Natural,
    TfidfAggregate aggregate = TfidfAggregate::Mean);

// degree(t) / freq(t) with freq(t) = sum over docs of count/doc_length and
// degree(t) the co-occurrence row sum; isolated terms score 0.
std::vector<double> fdr_scores(const TermDocMatrix& m, const CoocMatrix& c,
                               int threads = 0);
std::vector<double> fdr_scores_serial(const TermDocMatrix& m,
                                      const CoocMatrix& c);

// Pairwise log2 association. Cells whose joint count is zero under raw or
// alpha smoothing contribute 0 and are simply absent from the sparse rows.
struct PmiMatrix {
  std::vector<std::string> vocab;
  std::vector<std::vector<std::pair<std::uint32_t, double>>> rows;
  Smoothing smoothing = Smoothing::Raw;

  double at(std::size_t i, std::size_t j) const;
};

PmiMatrix pmi_matrix(const CoocMatrix& c, Smoothing mode = Smoothing::Raw,
                     int threads = 0);
PmiMatrix pmi_matrix_serial(const CoocMatrix& c,
                            Smoothing mode = Smoothing::Raw);

// Row sums of the PMI matrix (the diagonal is zero by construction).
std::vector<double> apmis_scores(const PmiMatrix& p, int threads = 0);
std::vector<double> apmis_scores_serial(const PmiMatrix& p);

struct ScoreTable {
  std::vector<std::string> terms;  // sorted
  std::vector<double> tfidf;
  std::vector<double> fdr;
  std::vector<double> apmis;
  LogBase log_base = LogBase::Natural;
  Smoothing smoothing = Smoothing::Raw;
  std::string corpus_fingerprint;
};

ScoreTable make_score_table(const TermDocMatrix& m, const CoocMatrix& c,
                            LogBase base = LogBase::Natural,
                            Smoothing mode = Smoothing::Raw,
                            TfidfAggregate aggregate = TfidfAggregate::Mean,
                            std::string corpus_fingerprint = {},
                            int threads = 0);

// CSV "term,tfidf,fdr,apmis", 10 significant digits, sorted by term.
void save_score_table(const ScoreTable& table, const std::string& path);

std::string fingerprint_doc_terms(
    const std::vector<std::vector<std::string>>& doc_terms);

}  // namespace cyberlex
