#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cyberlex/corpus.hpp"

namespace cyberlex {

struct TaggedToken {
  std::string surface;
  std::string tag;  // Penn Treebank code, or UNK
};

// Penn Treebank word-level tag set plus the UNK sentinel.
bool is_penn_tag(std::string_view tag);

const std::set<std::string>& default_removed_tags();
const std::unordered_set<std::string>& default_stopwords();
const std::map<std::string, std::unordered_set<std::string>>&
default_forum_words();

std::unordered_set<std::string> load_stopwords(const std::string& path);
std::map<std::string, std::unordered_set<std::string>> load_forum_words(
    const std::string& path);

struct PipelineConfig {
  std::set<std::string> removed_tags = default_removed_tags();
  std::unordered_set<std::string> stopwords = default_stopwords();
  std::map<std::string, std::unordered_set<std::string>> forum_words =
      default_forum_words();
  std::size_t min_len = 2;
  std::size_t max_len = 15;
  double entropy_floor = 0.0;  // exclusive: keep H > entropy_floor
  // Use the single-p entropy -(p log2 p), p = unique chars / length, instead
  // of character-distribution Shannon entropy. Off by default: the single-p
  // formula keeps degenerate tokens like "aaaaa".
  bool unique_ratio_entropy = false;
};

class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual std::vector<TaggedToken> tag(
      const std::vector<std::string>& tokens) const = 0;
};

// Deterministic lookup tagger: exact dictionary hits first (closed-class
// words mostly), then surface-shape suffix rules, else UNK. Tokens arrive
// lowercased, so no capitalization cues are used.
class DictionaryTagger : public Tagger {
 public:
  DictionaryTagger();  // built-in dictionary
  explicit DictionaryTagger(
      std::unordered_map<std::string, std::string> dictionary);
  static DictionaryTagger from_file(const std::string& path);  // TSV rows

  std::vector<TaggedToken> tag(
      const std::vector<std::string>& tokens) const override;

 private:
  std::unordered_map<std::string, std::string> dict_;
};

// Lowercased tokens split on whitespace with surrounding punctuation
// stripped; leading # and @ survive so hashtags and mentions reach
// strip_noise intact.
std::vector<std::string> tokenize(std::string_view text);

// Drops surfaces whose tag is configured for removal; order preserved.
std::vector<std::string> tag_filter(const std::vector<TaggedToken>& tokens,
                                    const PipelineConfig& cfg);

// Removes URLs, mentions, hashtags, emoji-bearing tokens, pure numbers,
// stopwords and the source's forum words.
std::vector<std::string> strip_noise(const std::vector<std::string>& tokens,
                                     const Source& source,
                                     const PipelineConfig& cfg);

// Shannon entropy in bits over the term's character distribution.
double char_entropy(std::string_view term);

// The single-p variant: -(p log2 p) with p = unique chars / length.
double unique_ratio_entropy(std::string_view term);

// tokenize -> tag -> tag_filter -> strip_noise -> length filter ->
// entropy filter -> stem, in that order.
std::vector<std::string> run_pipeline(const Document& doc, const Tagger& tagger,
                                      const PipelineConfig& cfg);

std::vector<std::vector<std::string>> run_pipeline_batch_serial(
    const std::vector<Document>& docs, const Tagger& tagger,
    const PipelineConfig& cfg);
std::vector<std::vector<std::string>> run_pipeline_batch(
    const std::vector<Document>& docs, const Tagger& tagger,
    const PipelineConfig& cfg, int threads = 0);

}  // namespace cyberlex
