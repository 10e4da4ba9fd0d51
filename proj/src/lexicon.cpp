#include "cyberlex/lexicon.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>

#include <json.hpp>

#include "cyberlex/porter.hpp"

namespace cyberlex {

namespace {

constexpr int kFormatVersion = 1;

std::string now_utc_iso8601() {
  std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double score_at_percentile(const std::vector<double>& sorted, double pct) {
  std::size_t n = sorted.size();
  if (pct <= 0.0) return sorted.front();
  // nearest rank ceil(pct/100 * n); the epsilon keeps an exact product
  // like 0.07 * 200 from ceiling one rank too high
  auto rank = static_cast<std::size_t>(
      std::ceil(pct / 100.0 * static_cast<double>(n) - 1e-9));
  if (rank == 0) rank = 1;
  if (rank > n) rank = n;
  return sorted[rank - 1];
}

std::string blocklist_key(std::string_view entry) {
  while (!entry.empty() && (entry.front() == '#' || entry.front() == '@')) {
    entry.remove_prefix(1);
  }
  return porter_stem(entry);
}

}  // namespace

Lexicon::Lexicon(std::vector<LexiconEntry> entries, LexiconMetadata meta)
    : entries_(std::move(entries)), meta_(std::move(meta)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const LexiconEntry& a, const LexiconEntry& b) {
              return a.term < b.term;
            });
  index_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!index_.emplace(entries_[i].term, i).second) {
      throw Error("lexicon has duplicate term \"" + entries_[i].term + "\"");
    }
  }
}

const LexiconEntry* Lexicon::find(std::string_view term) const {
  auto it = index_.find(std::string(term));
  if (it == index_.end()) return nullptr;
  return &entries_[it->second];
}

double percentile_cutoff(std::vector<double> scores, double pct) {
  if (scores.empty()) throw Error("percentile_cutoff: no scores");
  if (!(pct > 0.0) || !(pct < 100.0)) {
    throw Error("percentile_cutoff: percentile must be in (0, 100)");
  }
  std::sort(scores.begin(), scores.end());
  return score_at_percentile(scores, pct);
}

double detect_knee(const std::vector<double>& scores) {
  std::vector<double> sorted(scores);
  std::sort(sorted.begin(), sorted.end());
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i] != sorted[i - 1]) ++distinct;
  }
  if (distinct < 3) {
    throw Error("detect_knee: need at least 3 distinct scores");
  }

  // deltas exist from p = 2 on, so detection starts at p = 3
  double prev_delta = 0.0;
  double prev_value = score_at_percentile(sorted, 1.0);
  for (int p = 2; p <= 99; ++p) {
    double value = score_at_percentile(sorted, static_cast<double>(p));
    double delta = value - prev_value;
    if (p >= 3 && prev_delta > 0.0 && delta >= 2.0 * prev_delta) {
      return static_cast<double>(p);
    }
    prev_delta = delta;
    prev_value = value;
  }
  return 90.0;  // steady growth: no knee
}

std::set<std::string> curate(const std::set<std::string>& terms,
                             const std::vector<std::string>& blocklist) {
  if (blocklist.empty()) return terms;
  std::set<std::string> blocked_stems;
  for (const std::string& entry : blocklist) {
    blocked_stems.insert(blocklist_key(entry));
  }
  std::set<std::string> out;
  for (const std::string& term : terms) {
    if (blocked_stems.count(porter_stem(term))) continue;
    out.insert(term);
  }
  return out;
}

Lexicon assemble_lexicon(const ScoreTable& table, double pct,
                         const std::vector<std::string>& blocklist,
                         bool inclusive) {
  if (table.terms.empty()) throw Error("assemble_lexicon: empty score table");

  LexiconMetadata meta;
  meta.version = kFormatVersion;
  meta.percentile = pct;
  meta.inclusive_cutoff = inclusive;
  meta.corpus_fingerprint = table.corpus_fingerprint;
  meta.blocklist_fingerprint = fingerprint_blocklist(blocklist);
  meta.built_at = now_utc_iso8601();
  meta.cutoff_tfidf = percentile_cutoff(table.tfidf, pct);
  meta.cutoff_fdr = percentile_cutoff(table.fdr, pct);
  meta.cutoff_apmis = percentile_cutoff(table.apmis, pct);

  auto passes = [&](double score, double cutoff) {
    return inclusive ? score >= cutoff : score > cutoff;
  };

  std::set<std::string> selected;
  for (std::size_t i = 0; i < table.terms.size(); ++i) {
    if (passes(table.tfidf[i], meta.cutoff_tfidf) ||
        passes(table.fdr[i], meta.cutoff_fdr) ||
        passes(table.apmis[i], meta.cutoff_apmis)) {
      selected.insert(table.terms[i]);
    }
  }
  if (selected.empty()) {
    throw Error("assemble_lexicon: degenerate score distribution, no term "
                "passes any cutoff");
  }

  std::set<std::string> kept = curate(selected, blocklist);
  if (kept.empty()) {
    throw Error("assemble_lexicon: curation removed every term");
  }

  std::vector<LexiconEntry> entries;
  entries.reserve(kept.size());
  for (std::size_t i = 0; i < table.terms.size(); ++i) {
    if (!kept.count(table.terms[i])) continue;
    entries.push_back({table.terms[i], table.tfidf[i], table.fdr[i],
                       table.apmis[i], 0.0});
  }

  double lo = entries.front().apmis;
  double hi = lo;
  for (const LexiconEntry& e : entries) {
    lo = std::min(lo, e.apmis);
    hi = std::max(hi, e.apmis);
  }
  for (LexiconEntry& e : entries) {
    e.apmis_rescaled =
        hi > lo ? 100.0 * (e.apmis - lo) / (hi - lo) : 50.0;
  }
  return Lexicon(std::move(entries), std::move(meta));
}

void save_lexicon(const Lexicon& lex, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write lexicon file: " + path);
  out << "term,tfidf,fdr,apmis,apmis_rescaled\n";
  char buf[160];
  for (const LexiconEntry& e : lex.entries()) {
    std::snprintf(buf, sizeof(buf), ",%.10g,%.10g,%.10g,%.10g\n", e.tfidf,
                  e.fdr, e.apmis, e.apmis_rescaled);
    out << e.term << buf;
  }
  if (!out) throw Error("short write to lexicon file: " + path);

  const LexiconMetadata& m = lex.metadata();
  nlohmann::ordered_json meta;
  meta["version"] = m.version;
  meta["percentile"] = m.percentile;
  meta["cutoffs"] = {{"tfidf", m.cutoff_tfidf},
                     {"fdr", m.cutoff_fdr},
                     {"apmis", m.cutoff_apmis}};
  meta["inclusive_cutoff"] = m.inclusive_cutoff;
  meta["corpus_fingerprint"] = m.corpus_fingerprint;
  meta["blocklist_fingerprint"] = m.blocklist_fingerprint;
  meta["built_at"] = m.built_at;
  std::ofstream mout(path + ".meta.json", std::ios::binary);
  if (!mout) throw Error("cannot write lexicon metadata: " + path + ".meta.json");
  mout << meta.dump(2) << '\n';
}

Lexicon load_lexicon(const std::string& path) {
  std::ifstream meta_in(path + ".meta.json");
  if (!meta_in) {
    throw Error("missing lexicon metadata sidecar: " + path + ".meta.json");
  }
  nlohmann::json meta_json;
  try {
    meta_json = nlohmann::json::parse(meta_in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed lexicon metadata: " + std::string(e.what()));
  }
  LexiconMetadata meta;
  if (!meta_json.contains("version") || !meta_json["version"].is_number_integer()) {
    throw Error("lexicon metadata has no version field");
  }
  meta.version = meta_json["version"].get<int>();
  if (meta.version != kFormatVersion) {
    throw Error("unsupported lexicon format version " +
                std::to_string(meta.version) + " (expected " +
                std::to_string(kFormatVersion) + ")");
  }
  meta.percentile = meta_json.value("percentile", 90.0);
  meta.inclusive_cutoff = meta_json.value("inclusive_cutoff", false);
  if (meta_json.contains("cutoffs")) {
    const auto& c = meta_json["cutoffs"];
    meta.cutoff_tfidf = c.value("tfidf", 0.0);
    meta.cutoff_fdr = c.value("fdr", 0.0);
    meta.cutoff_apmis = c.value("apmis", 0.0);
  }
  meta.corpus_fingerprint = meta_json.value("corpus_fingerprint", "");
  meta.blocklist_fingerprint = meta_json.value("blocklist_fingerprint", "");
  meta.built_at = meta_json.value("built_at", "");

  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon file: " + path);
  std::string line;
  if (!std::getline(in, line) ||
      (line != "term,tfidf,fdr,apmis,apmis_rescaled" &&
       line != "term,tfidf,fdr,apmis,apmis_rescaled\r")) {
    throw Error("lexicon file " + path + " has an unexpected header");
  }
  std::vector<LexiconEntry> entries;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    // numeric columns never contain commas, so split from the right; the
    // term keeps any commas of its own
    std::array<std::size_t, 4> commas{};
    std::size_t cut = line.size();
    bool ok = true;
    for (int f = 3; f >= 0; --f) {
      std::size_t c = line.rfind(',', cut == 0 ? 0 : cut - 1);
      if (c == std::string::npos) {
        ok = false;
        break;
      }
      commas[f] = c;
      cut = c;
    }
    if (!ok || commas[0] == 0) {
      throw Error("lexicon file " + path + " line " + std::to_string(line_no) +
                  ": expected 5 columns");
    }
    LexiconEntry e;
    e.term = line.substr(0, commas[0]);
    std::array<double, 4> nums{};
    for (int f = 0; f < 4; ++f) {
      std::size_t begin = commas[f] + 1;
      std::size_t end = f < 3 ? commas[f + 1] : line.size();
      try {
        std::size_t used = 0;
        nums[f] = std::stod(line.substr(begin, end - begin), &used);
        if (used != end - begin) throw std::invalid_argument("trailing junk");
      } catch (const std::exception&) {
        throw Error("lexicon file " + path + " line " +
                    std::to_string(line_no) + ": bad number in column " +
                    std::to_string(f + 2));
      }
    }
    e.tfidf = nums[0];
    e.fdr = nums[1];
    e.apmis = nums[2];
    e.apmis_rescaled = nums[3];
    entries.push_back(std::move(e));
  }
  if (entries.empty()) throw Error("lexicon file " + path + " has no entries");

  // verify the rescaling invariant before trusting the file
  double lo = entries.front().apmis, hi = lo;
  for (const LexiconEntry& e : entries) {
    lo = std::min(lo, e.apmis);
    hi = std::max(hi, e.apmis);
  }
  for (const LexiconEntry& e : entries) {
    double expect = hi > lo ? 100.0 * (e.apmis - lo) / (hi - lo) : 50.0;
    if (std::abs(expect - e.apmis_rescaled) > 1e-6) {
      throw Error("lexicon file " + path + ": rescaled score for \"" + e.term +
                  "\" is inconsistent with the apmis column");
    }
  }
  return Lexicon(std::move(entries), std::move(meta));
}

std::vector<std::string> load_blocklist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open blocklist file: " + path);
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (!line.empty()) entries.push_back(line);
  }
  return entries;
}

std::string fingerprint_blocklist(const std::vector<std::string>& blocklist) {
  Fingerprint fp;
  for (const std::string& e : blocklist) fp.add(e);
  return fp.hex();
}

}  // namespace cyberlex
