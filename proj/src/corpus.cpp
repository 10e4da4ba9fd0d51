#include "cyberlex/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

namespace cyberlex {

namespace {

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
  }
  return out;
}

bool is_space_char(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

std::string_view trimmed(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space_char(s[b])) ++b;
  while (e > b && is_space_char(s[e - 1])) --e;
  return s.substr(b, e - b);
}

}  // namespace

Source Source::parse(std::string_view label) {
  Source src;
  src.name = lower_ascii(trimmed(label));
  if (src.name == "twitter") {
    src.kind = SourceKind::Twitter;
  } else if (src.name == "reddit") {
    src.kind = SourceKind::Reddit;
  } else if (src.name == "stackoverflow") {
    src.kind = SourceKind::Stackoverflow;
  } else if (src.name == "cyberwarnews") {
    src.kind = SourceKind::Cyberwarnews;
  } else if (src.name == "hackernews") {
    src.kind = SourceKind::Hackernews;
  } else {
    src.kind = SourceKind::Other;
  }
  return src;
}

std::string_view label_name(Label label) {
  return label == Label::Cyber ? "cyber" : "non_cyber";
}

Label parse_label(std::string_view name) {
  if (name == "cyber") return Label::Cyber;
  if (name == "non_cyber") return Label::NonCyber;
  throw Error("unknown label value \"" + std::string(name) +
              "\" (expected \"cyber\" or \"non_cyber\")");
}

Corpus load_corpus(const std::string& path, bool expect_labels) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file: " + path);

  Corpus corpus;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;

    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error("malformed JSON on line " + std::to_string(line_no) + ": " +
                  e.what());
    }
    if (!rec.is_object()) {
      throw Error("line " + std::to_string(line_no) + ": record is not an object");
    }

    auto required_string = [&](const char* field) -> std::string {
      if (!rec.contains(field)) {
        throw Error("line " + std::to_string(line_no) +
                    ": missing required field \"" + field + "\"");
      }
      if (!rec[field].is_string()) {
        throw Error("line " + std::to_string(line_no) + ": field \"" + field +
                    "\" is not a string");
      }
      return rec[field].get<std::string>();
    };

    Document doc;
    doc.id = required_string("id");
    doc.source = Source::parse(required_string("source"));
    doc.text = required_string("text");
    if (trimmed(doc.text).empty()) {
      throw Error("line " + std::to_string(line_no) +
                  ": field \"text\" is empty");
    }
    if (!seen_ids.insert(doc.id).second) {
      throw Error("line " + std::to_string(line_no) + ": duplicate id \"" +
                  doc.id + "\"");
    }
    if (rec.contains("label")) {
      if (!rec["label"].is_string()) {
        throw Error("line " + std::to_string(line_no) +
                    ": field \"label\" is not a string");
      }
      try {
        doc.label = parse_label(rec["label"].get<std::string>());
      } catch (const Error& e) {
        throw Error("line " + std::to_string(line_no) + ": " + e.what());
      }
    } else if (expect_labels) {
      throw Error("line " + std::to_string(line_no) +
                  ": record has no label but labels were required");
    }

    corpus.source_counts[doc.source.name]++;
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

std::string to_jsonl_line(const Document& doc) {
  nlohmann::ordered_json rec;
  rec["id"] = doc.id;
  rec["source"] = doc.source.name;
  rec["text"] = doc.text;
  if (doc.label) rec["label"] = std::string(label_name(*doc.label));
  return rec.dump();
}

void save_corpus(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write corpus file: " + path);
  for (const Document& doc : corpus.documents) {
    out << to_jsonl_line(doc) << '\n';
  }
  if (!out) throw Error("short write to corpus file: " + path);
}

std::vector<Document> split_sentences(const Document& doc) {
  const std::string& text = doc.text;
  std::vector<Document> out;

  auto is_terminal = [](char c) { return c == '.' || c == '!' || c == '?'; };
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  auto is_upper = [](char c) { return c >= 'A' && c <= 'Z'; };

  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    std::string_view sentence = trimmed(
        std::string_view(text).substr(start, end - start));
    if (!sentence.empty()) {
      Document sdoc;
      sdoc.id = doc.id + "#" + std::to_string(out.size() + 1);
      sdoc.source = doc.source;
      sdoc.text = std::string(sentence);
      sdoc.label = doc.label;
      out.push_back(std::move(sdoc));
    }
    start = end;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_terminal(text[i])) continue;
    // consume a run of terminators ("again!!") as one boundary
    std::size_t last = i;
    while (last + 1 < text.size() && is_terminal(text[last + 1])) ++last;
    bool at_end = last + 1 == text.size();
    if (!at_end && !is_space_char(text[last + 1])) continue;
    if (text[i] == '.' && i == last) {
      // no split inside 2.0
      if (i > 0 && !at_end && is_digit(text[i - 1]) && is_digit(text[i + 1])) {
        continue;
      }
      // no split after a lone initial: "J. Smith"
      if (i > 0 && is_upper(text[i - 1]) &&
          (i == 1 || is_space_char(text[i - 2]))) {
        continue;
      }
    }
    emit(last + 1);
    i = last;
  }
  emit(text.size());
  return out;
}

std::string normalized_text(std::string_view text) {
  std::string lowered = lower_ascii(text);

  // strip a leading retweet marker: "rt @<handle>:"
  std::string_view v = trimmed(lowered);
  if (v.size() > 4 && v.substr(0, 4) == "rt @") {
    std::size_t colon = v.find(':', 4);
    std::size_t space = v.find_first_of(" \t", 4);
    if (colon != std::string_view::npos &&
        (space == std::string_view::npos || colon < space)) {
      v = trimmed(v.substr(colon + 1));
    }
  }

  std::string out;
  out.reserve(v.size());
  bool pending_space = false;
  for (char c : v) {
    if (is_space_char(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(c);
  }
  return out;
}

Corpus dedupe(const Corpus& corpus) {
  Corpus out;
  std::unordered_set<std::string> seen;
  for (const Document& doc : corpus.documents) {
    if (!seen.insert(normalized_text(doc.text)).second) continue;
    out.source_counts[doc.source.name]++;
    out.documents.push_back(doc);
  }
  return out;
}

}  // namespace cyberlex
