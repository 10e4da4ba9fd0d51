#include "cyberlex/scorers.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace cyberlex {

namespace {

double apply_log(double x, LogBase base) {
  switch (base) {
    case LogBase::Natural: return std::log(x);
    case LogBase::Base10: return std::log10(x);
    case LogBase::Base2: return std::log2(x);
  }
  return std::log(x);
}

double tfidf_one_term(const TermDocMatrix& m, std::size_t t, LogBase base,
                      TfidfAggregate aggregate) {
  const auto& posts = m.postings[t];
  double idf = apply_log(static_cast<double>(m.n_docs()) /
                             static_cast<double>(posts.size()),
                         base);
  double sum = 0.0;
  for (const auto& [d, c] : posts) {
    double tf = static_cast<double>(c) / static_cast<double>(m.doc_lengths[d]);
    sum += tf * idf;
  }
  if (aggregate == TfidfAggregate::Mean) {
    return sum / static_cast<double>(posts.size());
  }
  return sum;
}

double fdr_one_term(const TermDocMatrix& m, const CoocMatrix& c,
                    std::size_t t) {
  double degree = static_cast<double>(c.row_sums[t]);
  if (degree == 0.0) return 0.0;  // isolated term
  double freq = 0.0;
  for (const auto& [d, cnt] : m.postings[t]) {
    freq += static_cast<double>(cnt) / static_cast<double>(m.doc_lengths[d]);
  }
  return degree / freq;
}

std::vector<std::pair<std::uint32_t, double>> pmi_row(const CoocMatrix& c,
                                                      std::size_t i,
                                                      Smoothing mode,
                                                      const std::vector<double>&
                                                          context_prob) {
  std::vector<std::pair<std::uint32_t, double>> row;
  std::size_t n = c.vocab.size();
  double total = static_cast<double>(c.total);

  switch (mode) {
    case Smoothing::Raw: {
      row.reserve(c.rows[i].size());
      double p_i = static_cast<double>(c.row_sums[i]) / total;
      for (const auto& [j, cnt] : c.rows[i]) {
        double p_ij = static_cast<double>(cnt) / total;
        double p_j = static_cast<double>(c.row_sums[j]) / total;
        row.emplace_back(j, std::log2(p_ij / (p_i * p_j)));
      }
      return row;
    }
    case Smoothing::LaplaceAdd2: {
      // add 2 to every off-diagonal cell before estimating probabilities
      double n_d = static_cast<double>(n);
      double smoothed_total = total + 2.0 * n_d * (n_d - 1.0);
      double p_i = (static_cast<double>(c.row_sums[i]) + 2.0 * (n_d - 1.0)) /
                   smoothed_total;
      row.reserve(n - 1);
      for (std::uint32_t j = 0; j < n; ++j) {
        if (j == i) continue;
        double p_ij = (static_cast<double>(c.at(i, j)) + 2.0) / smoothed_total;
        double p_j = (static_cast<double>(c.row_sums[j]) + 2.0 * (n_d - 1.0)) /
                     smoothed_total;
        row.emplace_back(j, std::log2(p_ij / (p_i * p_j)));
      }
      return row;
    }
    case Smoothing::Alpha075: {
      row.reserve(c.rows[i].size());
      double p_i = static_cast<double>(c.row_sums[i]) / total;
      for (const auto& [j, cnt] : c.rows[i]) {
        double p_ij = static_cast<double>(cnt) / total;
        row.emplace_back(j, std::log2(p_ij / (p_i * context_prob[j])));
      }
      return row;
    }
  }
  return row;
}

}  // namespace

std::string_view log_base_name(LogBase b) {
  switch (b) {
    case LogBase::Natural: return "natural";
    case LogBase::Base10: return "base10";
    case LogBase::Base2: return "base2";
  }
  return "natural";
}

LogBase parse_log_base(std::string_view name) {
  if (name == "natural") return LogBase::Natural;
  if (name == "base10") return LogBase::Base10;
  if (name == "base2") return LogBase::Base2;
  throw Error("unknown log base \"" + std::string(name) + "\"");
}

std::string_view smoothing_name(Smoothing s) {
  switch (s) {
    case Smoothing::Raw: return "raw";
    case Smoothing::LaplaceAdd2: return "laplace_add2";
    case Smoothing::Alpha075: return "alpha075";
  }
  return "raw";
}

Smoothing parse_smoothing(std::string_view name) {
  if (name == "raw") return Smoothing::Raw;
  if (name == "laplace_add2") return Smoothing::LaplaceAdd2;
  if (name == "alpha075") return Smoothing::Alpha075;
  throw Error("unknown smoothing mode \"" + std::string(name) + "\"");
}

std::vector<double> tfidf_scores_serial(const TermDocMatrix& m, LogBase base,
                                        TfidfAggregate aggregate) {
  std::vector<double> scores(m.n_terms());
  for (std::size_t t = 0; t < m.n_terms(); ++t) {
    scores[t] = tfidf_one_term(m, t, base, aggregate);
  }
  return scores;
}

std::vector<double> tfidf_scores(const TermDocMatrix& m, LogBase base,
                                 TfidfAggregate aggregate, int threads) {
  int n = resolve_threads(threads);
  if (n <= 1) return tfidf_scores_serial(m, base, aggregate);
  std::vector<double> scores(m.n_terms());
#pragma omp parallel for num_threads(n) schedule(static)
  for (std::size_t t = 0; t < m.n_terms(); ++t) {
    scores[t] = tfidf_one_term(m, t, base, aggregate);
  }
  return scores;
}

std::vector<double> fdr_scores_serial(const TermDocMatrix& m,
                                      const CoocMatrix& c) {
  if (m.n_terms() != c.vocab.size()) {
    throw Error("fdr_scores: matrices do not share a vocabulary");
  }
  std::vector<double> scores(m.n_terms());
  for (std::size_t t = 0; t < m.n_terms(); ++t) {
    scores[t] = fdr_one_term(m, c, t);
  }
  return scores;
}

std::vector<double> fdr_scores(const TermDocMatrix& m, const CoocMatrix& c,
                               int threads) {
  int n = resolve_threads(threads);
  if (n <= 1) return fdr_scores_serial(m, c);
  if (m.n_terms() != c.vocab.size()) {
    throw Error("fdr_scores: matrices do not share a vocabulary");
  }
  std::vector<double> scores(m.n_terms());
#pragma omp parallel for num_threads(n) schedule(static)
  for (std::size_t t = 0; t < m.n_terms(); ++t) {
    scores[t] = fdr_one_term(m, c, t);
  }
  return scores;
}

double PmiMatrix::at(std::size_t i, std::size_t j) const {
  const auto& row = rows[i];
  auto it = std::lower_bound(
      row.begin(), row.end(), j,
      [](const auto& p, std::size_t col) { return p.first < col; });
  if (it == row.end() || it->first != j) return 0.0;
  return it->second;
}

namespace {

std::vector<double> alpha_context_probs(const CoocMatrix& c) {
  constexpr double kAlpha = 0.75;
  std::vector<double> probs(c.vocab.size());
  double total = static_cast<double>(c.total);
  double denom = 0.0;
  for (std::size_t j = 0; j < c.vocab.size(); ++j) {
    probs[j] = std::pow(static_cast<double>(c.row_sums[j]) / total, kAlpha);
    denom += probs[j];
  }
  for (double& p : probs) p /= denom;
  return probs;
}

}  // namespace

PmiMatrix pmi_matrix_serial(const CoocMatrix& c, Smoothing mode) {
  if (c.total == 0) throw Error("pmi_matrix: co-occurrence total is zero");
  PmiMatrix p;
  p.vocab = c.vocab;
  p.smoothing = mode;
  p.rows.resize(c.vocab.size());
  std::vector<double> context;
  if (mode == Smoothing::Alpha075) context = alpha_context_probs(c);
  for (std::size_t i = 0; i < c.vocab.size(); ++i) {
    p.rows[i] = pmi_row(c, i, mode, context);
  }
  return p;
}

PmiMatrix pmi_matrix(const CoocMatrix& c, Smoothing mode, int threads) {
  int n = resolve_threads(threads);
  if (n <= 1) return pmi_matrix_serial(c, mode);
  if (c.total == 0) throw Error("pmi_matrix: co-occurrence total is zero");
  PmiMatrix p;
  p.vocab = c.vocab;
  p.smoothing = mode;
  p.rows.resize(c.vocab.size());
  std::vector<double> context;
  if (mode == Smoothing::Alpha075) context = alpha_context_probs(c);
#pragma omp parallel for num_threads(n) schedule(dynamic, 16)
  for (std::size_t i = 0; i < c.vocab.size(); ++i) {
    p.rows[i] = pmi_row(c, i, mode, context);
  }
  return p;
}

std::vector<double> apmis_scores_serial(const PmiMatrix& p) {
  std::vector<double> scores(p.vocab.size());
  for (std::size_t i = 0; i < p.vocab.size(); ++i) {
    double sum = 0.0;
    for (const auto& [j, v] : p.rows[i]) sum += v;
    scores[i] = sum;
  }
  return scores;
}

std::vector<double> apmis_scores(const PmiMatrix& p, int threads) {
  int n = resolve_threads(threads);
  if (n <= 1) return apmis_scores_serial(p);
  std::vector<double> scores(p.vocab.size());
#pragma omp parallel for num_threads(n) schedule(static)
  for (std::size_t i = 0; i < p.vocab.size(); ++i) {
    double sum = 0.0;
    for (const auto& [j, v] : p.rows[i]) sum += v;
    scores[i] = sum;
  }
  return scores;
}

ScoreTable make_score_table(const TermDocMatrix& m, const CoocMatrix& c,
                            LogBase base, Smoothing mode,
                            TfidfAggregate aggregate,
                            std::string corpus_fingerprint, int threads) {
  ScoreTable table;
  table.terms = m.vocab;
  table.tfidf = tfidf_scores(m, base, aggregate, threads);
  table.fdr = fdr_scores(m, c, threads);
  table.apmis = apmis_scores(pmi_matrix(c, mode, threads), threads);
  table.log_base = base;
  table.smoothing = mode;
  table.corpus_fingerprint = std::move(corpus_fingerprint);
  return table;
}

void save_score_table(const ScoreTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write score table: " + path);
  out << "term,tfidf,fdr,apmis\n";
  char buf[128];
  for (std::size_t i = 0; i < table.terms.size(); ++i) {
    std::snprintf(buf, sizeof(buf), ",%.10g,%.10g,%.10g\n", table.tfidf[i],
                  table.fdr[i], table.apmis[i]);
    out << table.terms[i] << buf;
  }
}

std::string fingerprint_doc_terms(
    const std::vector<std::vector<std::string>>& doc_terms) {
  Fingerprint fp;
  for (const auto& terms : doc_terms) {
    fp.add("\x1e");  // record separator between documents
    for (const auto& t : terms) fp.add(t);
  }
  return fp.hex();
}

}  // namespace cyberlex
