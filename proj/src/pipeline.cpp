#include "cyberlex/pipeline.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "cyberlex/porter.hpp"

namespace cyberlex {

namespace {

bool is_ws_codepoint(char32_t cp) {
  switch (cp) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\v': case U'\f':
    case 0x00A0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
    case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_strippable_punct(char32_t cp) {
  if (cp < 0x80) {
    char c = static_cast<char>(cp);
    bool alnum = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                 (c >= '0' && c <= '9');
    return cp > 0x20 && !alnum;
  }
  switch (cp) {
    case 0x2018: case 0x2019: case 0x201C: case 0x201D:  // curly quotes
    case 0x2013: case 0x2014: case 0x2026:               // dashes, ellipsis
    case 0x00AB: case 0x00BB: case 0x00A1: case 0x00BF:
      return true;
    default:
      return false;
  }
}

bool is_emoji_codepoint(char32_t cp) {
  return (cp >= 0x2190 && cp <= 0x2BFF) ||   // arrows through misc symbols
         (cp >= 0x1F000 && cp <= 0x1FAFF) ||  // emoji blocks
         (cp >= 0xFE00 && cp <= 0xFE0F) ||    // variation selectors
         cp == 0x200D;                        // zero-width joiner
}

bool is_url(std::string_view tok) {
  if (tok.size() >= 4 && tok.substr(0, 4) == "www.") return true;
  std::size_t sep = tok.find("://");
  if (sep == std::string_view::npos || sep == 0) return false;
  for (char c : tok.substr(0, sep)) {
    bool scheme_char = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                       c == '+' || c == '-' || c == '.';
    if (!scheme_char) return false;
  }
  return true;
}

bool is_pure_number(std::string_view tok) {
  bool saw_digit = false;
  bool prev_digit = false;
  for (char c : tok) {
    if (c >= '0' && c <= '9') {
      saw_digit = true;
      prev_digit = true;
    } else if (c == '.' || c == ',') {
      if (!prev_digit) return false;  // no leading/doubled separators
      prev_digit = false;
    } else {
      return false;
    }
  }
  return saw_digit && prev_digit;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::vector<Utf8Char> chars = utf8_decode(text);

  std::size_t i = 0;
  while (i < chars.size()) {
    while (i < chars.size() && is_ws_codepoint(chars[i].cp)) ++i;
    std::size_t begin = i;
    while (i < chars.size() && !is_ws_codepoint(chars[i].cp)) ++i;
    if (begin == i) break;

    std::size_t lo = begin, hi = i;  // [lo, hi) after punctuation stripping
    while (lo < hi && is_strippable_punct(chars[lo].cp) &&
           chars[lo].cp != U'#' && chars[lo].cp != U'@') {
      ++lo;
    }
    while (hi > lo && is_strippable_punct(chars[hi - 1].cp)) --hi;
    if (lo == hi) continue;

    std::string tok;
    for (std::size_t k = lo; k < hi; ++k) {
      const Utf8Char& c = chars[k];
      if (c.cp < 0x80) {
        char ch = static_cast<char>(c.cp);
        if (ch >= 'A' && ch <= 'Z') ch += 'a' - 'A';
        tok.push_back(ch);
      } else {
        tok.append(text.substr(c.offset, c.size));
      }
    }
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

std::vector<std::string> tag_filter(const std::vector<TaggedToken>& tokens,
                                    const PipelineConfig& cfg) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const TaggedToken& t : tokens) {
    if (cfg.removed_tags.count(t.tag)) continue;
    out.push_back(t.surface);
  }
  return out;
}

std::vector<std::string> strip_noise(const std::vector<std::string>& tokens,
                                     const Source& source,
                                     const PipelineConfig& cfg) {
  const std::unordered_set<std::string>* forum = nullptr;
  if (auto it = cfg.forum_words.find(source.name); it != cfg.forum_words.end()) {
    forum = &it->second;
  }

  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& tok : tokens) {
    if (tok.empty()) continue;
    if (tok[0] == '@' || tok[0] == '#') continue;
    if (is_url(tok)) continue;
    if (is_pure_number(tok)) continue;
    if (cfg.stopwords.count(tok)) continue;
    if (forum && forum->count(tok)) continue;
    bool emoji = false;
    for (char32_t cp : utf8_codepoints(tok)) {
      if (is_emoji_codepoint(cp)) {
        emoji = true;
        break;
      }
    }
    if (emoji) continue;
    out.push_back(tok);
  }
  return out;
}

double char_entropy(std::string_view term) {
  if (term.empty()) throw Error("char_entropy: empty term");
  std::vector<char32_t> cps = utf8_codepoints(term);
  std::unordered_map<char32_t, std::size_t> counts;
  for (char32_t cp : cps) counts[cp]++;
  double len = static_cast<double>(cps.size());
  double h = 0.0;
  for (const auto& [cp, n] : counts) {
    double p = static_cast<double>(n) / len;
    h -= p * std::log2(p);
  }
  return h;
}

double unique_ratio_entropy(std::string_view term) {
  if (term.empty()) throw Error("unique_ratio_entropy: empty term");
  std::vector<char32_t> cps = utf8_codepoints(term);
  std::unordered_set<char32_t> uniq(cps.begin(), cps.end());
  double p = static_cast<double>(uniq.size()) / static_cast<double>(cps.size());
  return -(p * std::log2(p));
}

std::vector<std::string> run_pipeline(const Document& doc, const Tagger& tagger,
                                      const PipelineConfig& cfg) {
  std::vector<std::string> tokens = tokenize(doc.text);
  std::vector<TaggedToken> tagged = tagger.tag(tokens);
  std::vector<std::string> kept = tag_filter(tagged, cfg);
  kept = strip_noise(kept, doc.source, cfg);

  std::vector<std::string> out;
  out.reserve(kept.size());
  for (std::string& tok : kept) {
    std::size_t len = utf8_length(tok);
    if (len < cfg.min_len || len > cfg.max_len) continue;
    double h = cfg.unique_ratio_entropy ? unique_ratio_entropy(tok)
                                        : char_entropy(tok);
    if (!(h > cfg.entropy_floor)) continue;
    out.push_back(porter_stem(tok));
  }
  return out;
}

std::vector<std::vector<std::string>> run_pipeline_batch_serial(
    const std::vector<Document>& docs, const Tagger& tagger,
    const PipelineConfig& cfg) {
  std::vector<std::vector<std::string>> out(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    out[i] = run_pipeline(docs[i], tagger, cfg);
  }
  return out;
}

std::vector<std::vector<std::string>> run_pipeline_batch(
    const std::vector<Document>& docs, const Tagger& tagger,
    const PipelineConfig& cfg, int threads) {
  int n = resolve_threads(threads);
  if (n <= 1) return run_pipeline_batch_serial(docs, tagger, cfg);

  std::vector<std::vector<std::string>> out(docs.size());
#pragma omp parallel for num_threads(n) schedule(dynamic, 64)
  for (std::size_t i = 0; i < docs.size(); ++i) {
    out[i] = run_pipeline(docs[i], tagger, cfg);
  }
  return out;
}

std::unordered_set<std::string> load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open stopword file: " + path);
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (!line.empty()) words.insert(line);
  }
  return words;
}

std::map<std::string, std::unordered_set<std::string>> load_forum_words(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open forum-word file: " + path);
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed forum-word file " + path + ": " + e.what());
  }
  if (!root.is_object()) {
    throw Error("forum-word file " + path + ": top level must be an object");
  }
  std::map<std::string, std::unordered_set<std::string>> out;
  for (const auto& [source, words] : root.items()) {
    if (!words.is_array()) {
      throw Error("forum-word file " + path + ": entry \"" + source +
                  "\" is not an array");
    }
    auto& set = out[source];
    for (const auto& w : words) {
      if (!w.is_string()) {
        throw Error("forum-word file " + path + ": entry \"" + source +
                    "\" contains a non-string");
      }
      set.insert(w.get<std::string>());
    }
  }
  return out;
}

}  // namespace cyberlex
