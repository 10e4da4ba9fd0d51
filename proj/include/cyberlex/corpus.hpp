#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyberlex/common.hpp"

namespace cyberlex {

enum class SourceKind {
  Twitter,
  Reddit,
  Stackoverflow,
  Cyberwarnews,
  Hackernews,
  Other,
};

struct Source {
  SourceKind kind = SourceKind::Other;
  std::string name;  // lowercase label as it appears in the input

  static Source parse(std::string_view label);
  bool operator==(const Source&) const = default;
};

enum class Label { Cyber, NonCyber };

std::string_view label_name(Label label);
Label parse_label(std::string_view name);  // throws on unknown values

// One unit of text: a tweet, a sentence, a comment.
struct Document {
  std::string id;
  Source source;
  std::string text;
  std::optional<Label> label;
};

struct Corpus {
  std::vector<Document> documents;
  std::map<std::string, std::size_t> source_counts;  // keyed by source name
};

// Reads a JSONL corpus file: one object per line with fields "id", "source",
// "text" and optional "label" ("cyber" | "non_cyber"). Errors name the
// offending line; expect_labels makes an unlabeled record an error.
Corpus load_corpus(const std::string& path, bool expect_labels);

// Canonical JSONL form of a corpus (LF endings, fixed field order); loading
// what this writes reproduces every field byte for byte.
void save_corpus(const Corpus& corpus, const std::string& path);
std::string to_jsonl_line(const Document& doc);

// Splits on terminal punctuation (. ! ?) followed by whitespace or end of
// text, except inside digit.digit and after a lone uppercase initial.
// Sentence ids are "<parent-id>#<k>" with k starting at 1.
std::vector<Document> split_sentences(const Document& doc);

// Removes documents whose normalized text was already seen, keeping the
// first occurrence and the original order.
Corpus dedupe(const Corpus& corpus);

// The dedupe key: lowercased, whitespace collapsed, leading "rt @handle:"
// stripped.
std::string normalized_text(std::string_view text);

}  // namespace cyberlex
