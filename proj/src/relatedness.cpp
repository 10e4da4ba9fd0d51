#include "cyberlex/relatedness.hpp"

#include <cstdio>
#include <fstream>

#include "cyberlex/pipeline.hpp"
#include "cyberlex/porter.hpp"

namespace cyberlex {

std::string_view score_column_name(ScoreColumn c) {
  switch (c) {
    case ScoreColumn::Tfidf: return "tfidf";
    case ScoreColumn::Fdr: return "fdr";
    case ScoreColumn::Apmis: return "apmis";
    case ScoreColumn::ApmisRescaled: return "apmis_rescaled";
  }
  return "apmis_rescaled";
}

ScoreColumn parse_score_column(std::string_view name) {
  if (name == "tfidf") return ScoreColumn::Tfidf;
  if (name == "fdr") return ScoreColumn::Fdr;
  if (name == "apmis") return ScoreColumn::Apmis;
  if (name == "apmis_rescaled") return ScoreColumn::ApmisRescaled;
  throw Error("unknown score column \"" + std::string(name) + "\"");
}

namespace {

double entry_score(const LexiconEntry& e, ScoreColumn column) {
  switch (column) {
    case ScoreColumn::Tfidf: return e.tfidf;
    case ScoreColumn::Fdr: return e.fdr;
    case ScoreColumn::Apmis: return e.apmis;
    case ScoreColumn::ApmisRescaled: return e.apmis_rescaled;
  }
  return e.apmis_rescaled;
}

}  // namespace

CrResult cyber_relatedness(const Lexicon& lex, std::string_view text,
                           ScoreColumn column) {
  if (lex.size() == 0) throw Error("cyber_relatedness: empty lexicon");

  CrResult result;
  std::vector<std::string> words = tokenize(text);
  result.word_count = words.size();
  if (words.empty()) return result;  // cr stays 0

  double sum_scores = 0.0;
  for (const std::string& word : words) {
    std::string stem = porter_stem(word);
    const LexiconEntry* entry = lex.find(stem);
    if (!entry) continue;
    double score = entry_score(*entry, column);
    sum_scores += score;
    result.match_count += 1;
    result.matched_terms.emplace_back(stem, score);
  }
  double scalar = static_cast<double>(result.match_count) /
                  static_cast<double>(result.word_count);
  result.cr = sum_scores * scalar;
  return result;
}

std::vector<CrResult> score_batch_serial(const Lexicon& lex,
                                         const std::vector<Document>& docs,
                                         ScoreColumn column) {
  std::vector<CrResult> out(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    out[i] = cyber_relatedness(lex, docs[i].text, column);
  }
  return out;
}

std::vector<CrResult> score_batch(const Lexicon& lex,
                                  const std::vector<Document>& docs,
                                  ScoreColumn column, int threads) {
  int n = resolve_threads(threads);
  if (n <= 1) return score_batch_serial(lex, docs, column);
  std::vector<CrResult> out(docs.size());
#pragma omp parallel for num_threads(n) schedule(dynamic, 64)
  for (std::size_t i = 0; i < docs.size(); ++i) {
    out[i] = cyber_relatedness(lex, docs[i].text, column);
  }
  return out;
}

void save_cr_rows(const std::vector<std::string>& ids,
                  const std::vector<CrResult>& results,
                  const std::string& path) {
  if (ids.size() != results.size()) {
    throw Error("save_cr_rows: ids/results size mismatch");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write score file: " + path);
  out << "id,cr,match_count,word_count\n";
  char buf[96];
  for (std::size_t i = 0; i < ids.size(); ++i) {
    std::snprintf(buf, sizeof(buf), ",%.6f,%zu,%zu\n", results[i].cr,
                  results[i].match_count, results[i].word_count);
    out << ids[i] << buf;
  }
  if (!out) throw Error("short write to score file: " + path);
}

std::vector<CrRow> load_cr_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open score file: " + path);
  std::string line;
  if (!std::getline(in, line) ||
      (line != "id,cr,match_count,word_count" &&
       line != "id,cr,match_count,word_count\r")) {
    throw Error("score file " + path + " has an unexpected header");
  }
  std::vector<CrRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    // numeric columns have no commas; anchor the split on the right
    std::size_t c3 = line.rfind(',');
    std::size_t c2 = c3 == std::string::npos ? c3 : line.rfind(',', c3 - 1);
    std::size_t c1 = c2 == std::string::npos || c2 == 0
                         ? std::string::npos
                         : line.rfind(',', c2 - 1);
    if (c1 == std::string::npos || c1 == 0) {
      throw Error("score file " + path + " line " + std::to_string(line_no) +
                  ": expected 4 columns");
    }
    CrRow row;
    row.id = line.substr(0, c1);
    try {
      row.cr = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
      row.match_count = std::stoul(line.substr(c2 + 1, c3 - c2 - 1));
      row.word_count = std::stoul(line.substr(c3 + 1));
    } catch (const std::exception&) {
      throw Error("score file " + path + " line " + std::to_string(line_no) +
                  ": bad number");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cyberlex
