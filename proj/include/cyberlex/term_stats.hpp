#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyberlex/common.hpp"

namespace cyberlex {

// Sparse term-document counts. Terms are stored postings-major: postings[t]
// lists (doc index, count) pairs in ascending doc order, which keeps every
// per-term reduction in a fixed order regardless of thread count.
struct TermDocMatrix {
  std::vector<std::string> vocab;  // sorted, unique
  std::vector<std::string> doc_ids;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> postings;
  std::vector<std::uint32_t> doc_lengths;  // total vocab-term count per doc

  std::size_t n_docs() const { return doc_ids.size(); }
  std::size_t n_terms() const { return vocab.size(); }
  std::size_t doc_frequency(std::size_t term) const {
    return postings[term].size();
  }
  std::uint32_t count(std::size_t term, std::size_t doc) const;
  std::optional<std::size_t> term_index(std::string_view term) const;
};

TermDocMatrix build_term_doc_serial(
    const std::vector<std::vector<std::string>>& doc_terms,
    std::vector<std::string> doc_ids);
TermDocMatrix build_term_doc(
    const std::vector<std::vector<std::string>>& doc_terms,
    std::vector<std::string> doc_ids, int threads = 0);

// Removes terms appearing in at least max_doc_ratio of documents (boundary
// inclusive) and recomputes doc_lengths over the survivors.
TermDocMatrix prune_ubiquitous(const TermDocMatrix& m,
                               double max_doc_ratio = 0.90);

// Symmetric term-term co-occurrence with a zero diagonal. Both (i,j) and
// (j,i) are stored; total sums over all ordered pairs. Within a document,
// co-occurrence of two distinct terms is the product of their counts,
// equivalently the number of ordered token-position pairs.
struct CoocMatrix {
  std::vector<std::string> vocab;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> rows;
  std::vector<std::uint64_t> row_sums;  // degree(t)
  std::uint64_t total = 0;

  std::uint64_t at(std::size_t i, std::size_t j) const;
  static CoocMatrix from_dense(
      std::vector<std::string> vocab,
      const std::vector<std::vector<std::uint64_t>>& cells);
};

// window = 0 co-occurs everything within a document; window = w > 0 only
// counts token pairs at position distance <= w (one count per pair).
CoocMatrix build_cooc_serial(
    const std::vector<std::vector<std::string>>& doc_terms,
    const std::vector<std::string>& vocab, std::size_t window = 0);
CoocMatrix build_cooc(const std::vector<std::vector<std::string>>& doc_terms,
                      const std::vector<std::string>& vocab, int threads = 0,
                      std::size_t window = 0);

// Coordinate dump "term_i<TAB>term_j<TAB>count", both orientations, sorted
// lexicographically; for debugging and oracle comparison.
void dump_cooc(const CoocMatrix& m, const std::string& path);

}  // namespace cyberlex
