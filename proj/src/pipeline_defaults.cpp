#include <fstream>

#include "cyberlex/pipeline.hpp"

namespace cyberlex {

namespace {

const char* const kPennTags[] = {
    "CC", "CD",  "DT",  "EX",  "FW",   "IN",   "JJ",  "JJR", "JJS",
    "LS", "MD",  "NN",  "NNS", "NNP",  "NNPS", "PDT", "POS", "PRP",
    "PRP$", "RB", "RBR", "RBS", "RP",  "SYM",  "TO",  "UH",  "VB",
    "VBD", "VBG", "VBN", "VBP", "VBZ", "WDT",  "WP",  "WP$", "WRB",
};

// Standard English stopword list (the usual 179-word set).
const char* const kStopwords[] = {
    "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you",
    "you're", "you've", "you'll", "you'd", "your", "yours", "yourself",
    "yourselves", "he", "him", "his", "himself", "she", "she's", "her",
    "hers", "herself", "it", "it's", "its", "itself", "they", "them",
    "their", "theirs", "themselves", "what", "which", "who", "whom", "this",
    "that", "that'll", "these", "those", "am", "is", "are", "was", "were",
    "be", "been", "being", "have", "has", "had", "having", "do", "does",
    "did", "doing", "a", "an", "the", "and", "but", "if", "or", "because",
    "as", "until", "while", "of", "at", "by", "for", "with", "about",
    "against", "between", "into", "through", "during", "before", "after",
    "above", "below", "to", "from", "up", "down", "in", "out", "on", "off",
    "over", "under", "again", "further", "then", "once", "here", "there",
    "when", "where", "why", "how", "all", "any", "both", "each", "few",
    "more", "most", "other", "some", "such", "no", "nor", "not", "only",
    "own", "same", "so", "than", "too", "very", "s", "t", "can", "will",
    "just", "don", "don't", "should", "should've", "now", "d", "ll", "m",
    "o", "re", "ve", "y", "ain", "aren", "aren't", "couldn", "couldn't",
    "didn", "didn't", "doesn", "doesn't", "hadn", "hadn't", "hasn",
    "hasn't", "haven", "haven't", "isn", "isn't", "ma", "mightn",
    "mightn't", "mustn", "mustn't", "needn", "needn't", "shan", "shan't",
    "shouldn", "shouldn't", "wasn", "wasn't", "weren", "weren't", "won",
    "won't", "wouldn", "wouldn't",
};

// Closed-class words; the open classes fall through to suffix rules or UNK.
struct DictEntry {
  const char* surface;
  const char* tag;
};

const DictEntry kTagDict[] = {
    {"the", "DT"}, {"a", "DT"}, {"an", "DT"}, {"this", "DT"}, {"that", "DT"},
    {"these", "DT"}, {"those", "DT"}, {"some", "DT"}, {"any", "DT"},
    {"no", "DT"}, {"every", "DT"}, {"each", "DT"}, {"either", "DT"},
    {"neither", "DT"}, {"all", "PDT"}, {"both", "PDT"}, {"half", "PDT"},
    {"such", "PDT"},
    {"of", "IN"}, {"in", "IN"}, {"on", "IN"}, {"at", "IN"}, {"by", "IN"},
    {"for", "IN"}, {"with", "IN"}, {"from", "IN"}, {"into", "IN"},
    {"onto", "IN"}, {"about", "IN"}, {"against", "IN"}, {"between", "IN"},
    {"through", "IN"}, {"during", "IN"}, {"before", "IN"}, {"after", "IN"},
    {"above", "IN"}, {"below", "IN"}, {"under", "IN"}, {"over", "IN"},
    {"since", "IN"}, {"until", "IN"}, {"upon", "IN"}, {"within", "IN"},
    {"without", "IN"}, {"among", "IN"}, {"across", "IN"}, {"behind", "IN"},
    {"beyond", "IN"}, {"near", "IN"}, {"toward", "IN"}, {"towards", "IN"},
    {"as", "IN"}, {"per", "IN"}, {"via", "IN"}, {"although", "IN"},
    {"because", "IN"}, {"if", "IN"}, {"unless", "IN"}, {"whether", "IN"},
    {"there", "EX"},
    {"and", "CC"}, {"or", "CC"}, {"but", "CC"}, {"nor", "CC"}, {"yet", "CC"},
    {"plus", "CC"},
    {"to", "TO"},
    {"i", "PRP"}, {"me", "PRP"}, {"we", "PRP"}, {"us", "PRP"}, {"you", "PRP"},
    {"he", "PRP"}, {"him", "PRP"}, {"she", "PRP"}, {"it", "PRP"},
    {"they", "PRP"}, {"them", "PRP"}, {"myself", "PRP"}, {"yourself", "PRP"},
    {"himself", "PRP"}, {"herself", "PRP"}, {"itself", "PRP"},
    {"ourselves", "PRP"}, {"themselves", "PRP"},
    {"my", "PRP$"}, {"your", "PRP$"}, {"his", "PRP$"}, {"her", "PRP$"},
    {"its", "PRP$"}, {"our", "PRP$"}, {"their", "PRP$"},
    {"who", "WP"}, {"whom", "WP"}, {"whoever", "WP"},
    {"whose", "WP$"},
    {"which", "WDT"}, {"whatever", "WDT"},
    {"what", "WP"},
    {"can", "MD"}, {"could", "MD"}, {"may", "MD"}, {"might", "MD"},
    {"must", "MD"}, {"shall", "MD"}, {"should", "MD"}, {"will", "MD"},
    {"would", "MD"}, {"ought", "MD"},
    {"up", "RP"}, {"down", "RP"}, {"out", "RP"}, {"off", "RP"},
    {"be", "VB"}, {"am", "VBP"}, {"is", "VBZ"}, {"are", "VBP"},
    {"was", "VBD"}, {"were", "VBD"}, {"been", "VBN"}, {"being", "VBG"},
    {"have", "VBP"}, {"has", "VBZ"}, {"had", "VBD"}, {"do", "VBP"},
    {"does", "VBZ"}, {"did", "VBD"},
    {"not", "RB"}, {"n't", "RB"}, {"very", "RB"}, {"too", "RB"},
    {"also", "RB"}, {"always", "RB"}, {"never", "RB"}, {"often", "RB"},
    {"again", "RB"}, {"here", "RB"}, {"now", "RB"}, {"soon", "RB"},
    {"still", "RB"}, {"then", "RB"}, {"already", "RB"}, {"just", "RB"},
    {"when", "WRB"}, {"where", "WRB"}, {"why", "WRB"}, {"how", "WRB"},
};

bool all_digits(std::string_view tok) {
  if (tok.empty()) return false;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

bool ends_with(std::string_view tok, std::string_view suffix) {
  return tok.size() > suffix.size() &&
         tok.compare(tok.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string suffix_guess(std::string_view tok) {
  if (all_digits(tok)) return "CD";
  if (ends_with(tok, "ly")) return "RB";
  if (ends_with(tok, "ing")) return "VBG";
  if (ends_with(tok, "ed")) return "VBD";
  if (ends_with(tok, "tion") || ends_with(tok, "sion") ||
      ends_with(tok, "ment") || ends_with(tok, "ness") ||
      ends_with(tok, "ship") || ends_with(tok, "hood")) {
    return "NN";
  }
  if (ends_with(tok, "tions") || ends_with(tok, "sions") ||
      ends_with(tok, "ments")) {
    return "NNS";
  }
  if (ends_with(tok, "ize") || ends_with(tok, "ise")) return "VB";
  if (ends_with(tok, "ous") || ends_with(tok, "ful") ||
      ends_with(tok, "ive") || ends_with(tok, "able") ||
      ends_with(tok, "ible") || ends_with(tok, "ic")) {
    return "JJ";
  }
  return "UNK";
}

}  // namespace

bool is_penn_tag(std::string_view tag) {
  if (tag == "UNK") return true;
  for (const char* t : kPennTags) {
    if (tag == t) return true;
  }
  return false;
}

const std::set<std::string>& default_removed_tags() {
  static const std::set<std::string> tags = {
      "NN", "NNS", "NNP", "NNPS", "POS", "PRP", "PRP$", "WP", "WP$",
      "IN", "EX", "CC", "DT", "PDT", "WDT", "TO", "RP", "FW", "MD", "SYM",
  };
  return tags;
}

const std::unordered_set<std::string>& default_stopwords() {
  static const std::unordered_set<std::string> words(std::begin(kStopwords),
                                                     std::end(kStopwords));
  return words;
}

const std::map<std::string, std::unordered_set<std::string>>&
default_forum_words() {
  static const std::map<std::string, std::unordered_set<std::string>> words = {
      {"twitter", {"post"}},
      {"stackoverflow", {"votes", "upvotes", "downvotes"}},
      {"reddit", {"subreddit", "reddit", "forum"}},
  };
  return words;
}

DictionaryTagger::DictionaryTagger() {
  for (const DictEntry& e : kTagDict) dict_.emplace(e.surface, e.tag);
}

DictionaryTagger::DictionaryTagger(
    std::unordered_map<std::string, std::string> dictionary)
    : dict_(std::move(dictionary)) {}

DictionaryTagger DictionaryTagger::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open tag dictionary: " + path);
  std::unordered_map<std::string, std::string> dict;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw Error("tag dictionary " + path + " line " +
                  std::to_string(line_no) + ": expected surface<TAB>tag");
    }
    std::string tag = line.substr(tab + 1);
    if (!is_penn_tag(tag)) {
      throw Error("tag dictionary " + path + " line " +
                  std::to_string(line_no) + ": unknown tag \"" + tag + "\"");
    }
    dict[line.substr(0, tab)] = std::move(tag);
  }
  return DictionaryTagger(std::move(dict));
}

std::vector<TaggedToken> DictionaryTagger::tag(
    const std::vector<std::string>& tokens) const {
  std::vector<TaggedToken> out;
  out.reserve(tokens.size());
  for (const std::string& tok : tokens) {
    auto it = dict_.find(tok);
    if (it != dict_.end()) {
      out.push_back({tok, it->second});
    } else {
      out.push_back({tok, suffix_guess(tok)});
    }
  }
  return out;
}

}  // namespace cyberlex
