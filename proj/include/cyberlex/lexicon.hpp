#pragma once

#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "cyberlex/scorers.hpp"

namespace cyberlex {

struct LexiconEntry {
  std::string term;
  double tfidf = 0.0;
  double fdr = 0.0;
  double apmis = 0.0;
  double apmis_rescaled = 0.0;  // affine map of apmis onto [0, 100]
};

struct LexiconMetadata {
  int version = 1;
  double percentile = 90.0;
  double cutoff_tfidf = 0.0;
  double cutoff_fdr = 0.0;
  double cutoff_apmis = 0.0;
  bool inclusive_cutoff = false;
  std::string corpus_fingerprint;
  std::string blocklist_fingerprint;
  std::string built_at;  // ISO 8601 UTC
};

class Lexicon {
 public:
  Lexicon() = default;
  Lexicon(std::vector<LexiconEntry> entries, LexiconMetadata meta);

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  const LexiconMetadata& metadata() const { return meta_; }
  std::size_t size() const { return entries_.size(); }
  const LexiconEntry* find(std::string_view term) const;

 private:
  std::vector<LexiconEntry> entries_;  // sorted by term
  LexiconMetadata meta_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Nearest-rank percentile: sort ascending, take the value at index
// ceil(pct/100 * n) - 1. Always returns an observed score.
double percentile_cutoff(std::vector<double> scores, double pct = 90.0);

// Scans integer percentiles for the first point whose increase at least
// doubles the previous one; falls back to 90 when the growth is steady.
double detect_knee(const std::vector<double>& scores);

// Drops terms whose stem matches a blocklist entry's stem. Entries are
// lowercase; leading '#' or '@' markers are ignored.
std::set<std::string> curate(const std::set<std::string>& terms,
                             const std::vector<std::string>& blocklist);

// Per-scorer percentile cutoffs, union of the passing sets, curation,
// rescaling. The pass rule is strict (score > cutoff) unless inclusive.
Lexicon assemble_lexicon(const ScoreTable& table, double pct,
                         const std::vector<std::string>& blocklist,
                         bool inclusive = false);

// CSV "term,tfidf,fdr,apmis,apmis_rescaled" plus a "<path>.meta.json"
// sidecar carrying LexiconMetadata.
void save_lexicon(const Lexicon& lex, const std::string& path);
Lexicon load_lexicon(const std::string& path);

std::vector<std::string> load_blocklist(const std::string& path);
std::string fingerprint_blocklist(const std::vector<std::string>& blocklist);

}  // namespace cyberlex
