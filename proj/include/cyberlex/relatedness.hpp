#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyberlex/corpus.hpp"
#include "cyberlex/lexicon.hpp"

namespace cyberlex {

// Which lexicon score column feeds the relatedness sum.
enum class ScoreColumn { Tfidf, Fdr, Apmis, ApmisRescaled };

std::string_view score_column_name(ScoreColumn c);
ScoreColumn parse_score_column(std::string_view name);

struct CrResult {
  double cr = 0.0;
  std::size_t match_count = 0;
  std::size_t word_count = 0;
  std::vector<std::pair<std::string, double>> matched_terms;  // per occurrence
};

// sum of matched term scores, scaled by match_count / word_count. Words are
// tokenized and stemmed only; no tag or noise filtering, so every word of
// the input counts toward word_count. Repeated matches count each time.
CrResult cyber_relatedness(const Lexicon& lex, std::string_view text,
                           ScoreColumn column = ScoreColumn::ApmisRescaled);

std::vector<CrResult> score_batch_serial(
    const Lexicon& lex, const std::vector<Document>& docs,
    ScoreColumn column = ScoreColumn::ApmisRescaled);
std::vector<CrResult> score_batch(
    const Lexicon& lex, const std::vector<Document>& docs,
    ScoreColumn column = ScoreColumn::ApmisRescaled, int threads = 0);

// CSV "id,cr,match_count,word_count" with cr to 6 decimal places.
void save_cr_rows(const std::vector<std::string>& ids,
                  const std::vector<CrResult>& results,
                  const std::string& path);

struct CrRow {
  std::string id;
  double cr = 0.0;
  std::size_t match_count = 0;
  std::size_t word_count = 0;
};

std::vector<CrRow> load_cr_rows(const std::string& path);

}  // namespace cyberlex
