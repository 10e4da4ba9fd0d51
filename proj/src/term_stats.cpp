#include "cyberlex/term_stats.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cyberlex {

namespace {

std::vector<std::string> sorted_vocab(
    const std::vector<std::vector<std::string>>& doc_terms) {
  std::vector<std::string> vocab;
  for (const auto& terms : doc_terms) {
    vocab.insert(vocab.end(), terms.begin(), terms.end());
  }
  std::sort(vocab.begin(), vocab.end());
  vocab.erase(std::unique(vocab.begin(), vocab.end()), vocab.end());
  return vocab;
}

std::unordered_map<std::string_view, std::uint32_t> index_of(
    const std::vector<std::string>& vocab) {
  std::unordered_map<std::string_view, std::uint32_t> index;
  index.reserve(vocab.size());
  for (std::uint32_t i = 0; i < vocab.size(); ++i) index.emplace(vocab[i], i);
  return index;
}

// Per-document counts of vocab terms, ascending term index.
std::vector<std::pair<std::uint32_t, std::uint32_t>> doc_counts(
    const std::vector<std::string>& terms,
    const std::unordered_map<std::string_view, std::uint32_t>& index) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> counts;
  for (const std::string& t : terms) {
    auto it = index.find(t);
    if (it == index.end()) continue;
    counts.emplace_back(it->second, 1);
  }
  std::sort(counts.begin(), counts.end());
  std::size_t w = 0;
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (w > 0 && counts[w - 1].first == counts[r].first) {
      counts[w - 1].second += 1;
    } else {
      counts[w++] = counts[r];
    }
  }
  counts.resize(w);
  return counts;
}

TermDocMatrix assemble_term_doc(
    const std::vector<std::vector<std::string>>& doc_terms,
    std::vector<std::string> doc_ids, std::vector<std::string> vocab,
    const std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>&
        per_doc) {
  TermDocMatrix m;
  m.vocab = std::move(vocab);
  m.doc_ids = std::move(doc_ids);
  m.postings.resize(m.vocab.size());
  m.doc_lengths.assign(doc_terms.size(), 0);

  std::vector<std::uint32_t> df(m.vocab.size(), 0);
  for (std::size_t d = 0; d < per_doc.size(); ++d) {
    std::uint32_t len = 0;
    for (const auto& [t, c] : per_doc[d]) {
      df[t]++;
      len += c;
    }
    m.doc_lengths[d] = len;
  }
  for (std::size_t t = 0; t < m.vocab.size(); ++t) {
    m.postings[t].reserve(df[t]);
  }
  // invert doc-major counts into postings; docs ascend, so each postings
  // list comes out sorted by doc index
  for (std::uint32_t d = 0; d < per_doc.size(); ++d) {
    for (const auto& [t, c] : per_doc[d]) {
      m.postings[t].emplace_back(d, c);
    }
  }
  return m;
}

}  // namespace

std::uint32_t TermDocMatrix::count(std::size_t term, std::size_t doc) const {
  const auto& posts = postings[term];
  auto it = std::lower_bound(
      posts.begin(), posts.end(), doc,
      [](const auto& p, std::size_t d) { return p.first < d; });
  if (it == posts.end() || it->first != doc) return 0;
  return it->second;
}

std::optional<std::size_t> TermDocMatrix::term_index(
    std::string_view term) const {
  auto it = std::lower_bound(vocab.begin(), vocab.end(), term);
  if (it == vocab.end() || *it != term) return std::nullopt;
  return static_cast<std::size_t>(it - vocab.begin());
}

TermDocMatrix build_term_doc_serial(
    const std::vector<std::vector<std::string>>& doc_terms,
    std::vector<std::string> doc_ids) {
  if (doc_ids.size() != doc_terms.size()) {
    throw Error("build_term_doc: doc_ids/doc_terms size mismatch");
  }
  std::vector<std::string> vocab = sorted_vocab(doc_terms);
  if (vocab.empty()) throw Error("build_term_doc: empty vocabulary");
  auto index = index_of(vocab);

  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> per_doc(
      doc_terms.size());
  for (std::size_t d = 0; d < doc_terms.size(); ++d) {
    per_doc[d] = doc_counts(doc_terms[d], index);
  }
  return assemble_term_doc(doc_terms, std::move(doc_ids), std::move(vocab),
                           per_doc);
}

TermDocMatrix build_term_doc(
    const std::vector<std::vector<std::string>>& doc_terms,
    std::vector<std::string> doc_ids, int threads) {
  int n = resolve_threads(threads);
  if (n <= 1) return build_term_doc_serial(doc_terms, std::move(doc_ids));

  if (doc_ids.size() != doc_terms.size()) {
    throw Error("build_term_doc: doc_ids/doc_terms size mismatch");
  }
  std::vector<std::string> vocab = sorted_vocab(doc_terms);
  if (vocab.empty()) throw Error("build_term_doc: empty vocabulary");
  auto index = index_of(vocab);

  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> per_doc(
      doc_terms.size());
#pragma omp parallel for num_threads(n) schedule(dynamic, 64)
  for (std::size_t d = 0; d < doc_terms.size(); ++d) {
    per_doc[d] = doc_counts(doc_terms[d], index);
  }
  return assemble_term_doc(doc_terms, std::move(doc_ids), std::move(vocab),
                           per_doc);
}

TermDocMatrix prune_ubiquitous(const TermDocMatrix& m, double max_doc_ratio) {
  if (!(max_doc_ratio > 0.0) || max_doc_ratio > 1.0) {
    throw Error("prune_ubiquitous: ratio must be in (0, 1]");
  }
  double n_docs = static_cast<double>(m.n_docs());

  TermDocMatrix out;
  out.doc_ids = m.doc_ids;
  out.doc_lengths.assign(m.n_docs(), 0);
  for (std::size_t t = 0; t < m.n_terms(); ++t) {
    double ratio = static_cast<double>(m.doc_frequency(t)) / n_docs;
    if (ratio >= max_doc_ratio) continue;
    out.vocab.push_back(m.vocab[t]);
    out.postings.push_back(m.postings[t]);
    for (const auto& [d, c] : m.postings[t]) out.doc_lengths[d] += c;
  }
  if (out.vocab.empty()) {
    throw Error("prune_ubiquitous: pruning emptied the vocabulary");
  }
  return out;
}

std::uint64_t CoocMatrix::at(std::size_t i, std::size_t j) const {
  const auto& row = rows[i];
  auto it = std::lower_bound(
      row.begin(), row.end(), j,
      [](const auto& p, std::size_t col) { return p.first < col; });
  if (it == row.end() || it->first != j) return 0;
  return it->second;
}

CoocMatrix CoocMatrix::from_dense(
    std::vector<std::string> vocab,
    const std::vector<std::vector<std::uint64_t>>& cells) {
  CoocMatrix m;
  m.vocab = std::move(vocab);
  std::size_t n = m.vocab.size();
  m.rows.resize(n);
  m.row_sums.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (cells[i].size() != n) throw Error("from_dense: ragged matrix");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || cells[i][j] == 0) continue;
      if (cells[i][j] != cells[j][i]) throw Error("from_dense: not symmetric");
      m.rows[i].emplace_back(static_cast<std::uint32_t>(j), cells[i][j]);
      m.row_sums[i] += cells[i][j];
      m.total += cells[i][j];
    }
  }
  return m;
}

namespace {

using PairMap = std::unordered_map<std::uint64_t, std::uint64_t>;

inline std::uint64_t pair_key(std::uint32_t i, std::uint32_t j) {
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

// Tallies one document's unordered distinct-term pairs into acc (upper
// triangle keys only).
void accumulate_doc(
    const std::vector<std::string>& terms,
    const std::unordered_map<std::string_view, std::uint32_t>& index,
    std::size_t window, PairMap& acc) {
  if (window == 0) {
    auto counts = doc_counts(terms, index);
    for (std::size_t a = 0; a < counts.size(); ++a) {
      for (std::size_t b = a + 1; b < counts.size(); ++b) {
        acc[pair_key(counts[a].first, counts[b].first)] +=
            static_cast<std::uint64_t>(counts[a].second) * counts[b].second;
      }
    }
    return;
  }
  std::vector<std::uint32_t> ids;
  std::vector<bool> known;
  ids.reserve(terms.size());
  known.reserve(terms.size());
  for (const std::string& t : terms) {
    auto it = index.find(t);
    known.push_back(it != index.end());
    ids.push_back(it != index.end() ? it->second : 0);
  }
  for (std::size_t a = 0; a < ids.size(); ++a) {
    if (!known[a]) continue;
    std::size_t hi = std::min(ids.size(), a + window + 1);
    for (std::size_t b = a + 1; b < hi; ++b) {
      if (!known[b] || ids[a] == ids[b]) continue;
      auto [lo_id, hi_id] = std::minmax(ids[a], ids[b]);
      acc[pair_key(lo_id, hi_id)] += 1;
    }
  }
}

CoocMatrix finalize_cooc(std::vector<std::string> vocab, const PairMap& acc) {
  CoocMatrix m;
  m.vocab = std::move(vocab);
  std::size_t n = m.vocab.size();
  m.rows.resize(n);
  m.row_sums.assign(n, 0);
  for (const auto& [key, count] : acc) {
    auto i = static_cast<std::uint32_t>(key >> 32);
    auto j = static_cast<std::uint32_t>(key & 0xFFFFFFFFu);
    m.rows[i].emplace_back(j, count);
    m.rows[j].emplace_back(i, count);
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto& row = m.rows[i];
    std::sort(row.begin(), row.end());
    for (const auto& [j, c] : row) m.row_sums[i] += c;
    m.total += m.row_sums[i];
  }
  return m;
}

}  // namespace

CoocMatrix build_cooc_serial(
    const std::vector<std::vector<std::string>>& doc_terms,
    const std::vector<std::string>& vocab, std::size_t window) {
  if (vocab.empty()) throw Error("build_cooc: empty vocabulary");
  auto index = index_of(vocab);
  PairMap acc;
  for (const auto& terms : doc_terms) {
    accumulate_doc(terms, index, window, acc);
  }
  return finalize_cooc(vocab, acc);
}

CoocMatrix build_cooc(const std::vector<std::vector<std::string>>& doc_terms,
                      const std::vector<std::string>& vocab, int threads,
                      std::size_t window) {
  int n = resolve_threads(threads);
  if (n <= 1) return build_cooc_serial(doc_terms, vocab, window);

  if (vocab.empty()) throw Error("build_cooc: empty vocabulary");
  auto index = index_of(vocab);

  std::vector<PairMap> partials(n);
#pragma omp parallel num_threads(n)
  {
#ifdef _OPENMP
    PairMap& local = partials[omp_get_thread_num()];
#else
    PairMap& local = partials[0];
#endif
#pragma omp for schedule(dynamic, 64)
    for (std::size_t d = 0; d < doc_terms.size(); ++d) {
      accumulate_doc(doc_terms[d], index, window, local);
    }
  }
  PairMap acc = std::move(partials[0]);
  for (int t = 1; t < n; ++t) {
    for (const auto& [key, count] : partials[t]) acc[key] += count;
  }
  return finalize_cooc(vocab, acc);
}

void dump_cooc(const CoocMatrix& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write co-occurrence dump: " + path);
  // vocab is sorted, so walking rows in index order is lexicographic
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    for (const auto& [j, c] : m.rows[i]) {
      out << m.vocab[i] << '\t' << m.vocab[j] << '\t' << c << '\n';
    }
  }
}

}  // namespace cyberlex
