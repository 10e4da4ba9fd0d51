#include "cyberlex/config.hpp"

#include <filesystem>
#include <fstream>

namespace cyberlex {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool parse_bool(std::string_view v, const std::string& key) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw Error("config key \"" + key + "\": expected a boolean, got \"" +
              std::string(v) + "\"");
}

double parse_double(std::string_view v, const std::string& key) {
  try {
    std::size_t used = 0;
    double d = std::stod(std::string(v), &used);
    if (used != v.size()) throw std::invalid_argument("trailing junk");
    return d;
  } catch (const std::exception&) {
    throw Error("config key \"" + key + "\": expected a number, got \"" +
                std::string(v) + "\"");
  }
}

std::size_t parse_size(std::string_view v, const std::string& key) {
  try {
    std::size_t used = 0;
    unsigned long n = std::stoul(std::string(v), &used);
    if (used != v.size()) throw std::invalid_argument("trailing junk");
    return n;
  } catch (const std::exception&) {
    throw Error("config key \"" + key + "\": expected an integer, got \"" +
                std::string(v) + "\"");
  }
}

}  // namespace

void apply_resource_paths(RunConfig& cfg) {
  if (!cfg.stopwords_path.empty()) {
    cfg.pipeline.stopwords = load_stopwords(cfg.stopwords_path);
  }
  if (!cfg.forum_words_path.empty()) {
    cfg.pipeline.forum_words = load_forum_words(cfg.forum_words_path);
  }
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path);
  std::filesystem::path base = std::filesystem::path(path).parent_path();

  auto resolve = [&](std::string_view v) {
    std::filesystem::path p{std::string(v)};
    if (p.is_absolute()) return p.string();
    return (base / p).string();
  };

  RunConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view v = trim(line);
    if (v.empty() || v.front() == '#') continue;
    std::size_t eq = v.find('=');
    if (eq == std::string_view::npos) {
      throw Error("config file " + path + " line " + std::to_string(line_no) +
                  ": expected key = value");
    }
    std::string key{trim(v.substr(0, eq))};
    std::string_view value = trim(v.substr(eq + 1));

    if (key == "percentile") {
      cfg.percentile = parse_double(value, key);
    } else if (key == "prune_ratio") {
      cfg.prune_ratio = parse_double(value, key);
    } else if (key == "smoothing_mode") {
      cfg.smoothing = parse_smoothing(value);
    } else if (key == "log_base") {
      cfg.log_base = parse_log_base(value);
    } else if (key == "tfidf_aggregate") {
      if (value == "mean") {
        cfg.tfidf_aggregate = TfidfAggregate::Mean;
      } else if (value == "sum") {
        cfg.tfidf_aggregate = TfidfAggregate::Sum;
      } else {
        throw Error("config key \"tfidf_aggregate\": expected mean or sum");
      }
    } else if (key == "score_column") {
      cfg.score_column = parse_score_column(value);
    } else if (key == "inclusive_cutoff") {
      cfg.inclusive_cutoff = parse_bool(value, key);
    } else if (key == "cooc_window") {
      cfg.cooc_window = parse_size(value, key);
    } else if (key == "min_len") {
      cfg.pipeline.min_len = parse_size(value, key);
    } else if (key == "max_len") {
      cfg.pipeline.max_len = parse_size(value, key);
    } else if (key == "entropy_floor") {
      cfg.pipeline.entropy_floor = parse_double(value, key);
    } else if (key == "entropy_mode") {
      if (value == "shannon") {
        cfg.pipeline.unique_ratio_entropy = false;
      } else if (value == "unique_ratio") {
        cfg.pipeline.unique_ratio_entropy = true;
      } else {
        throw Error(
            "config key \"entropy_mode\": expected shannon or unique_ratio");
      }
    } else if (key == "removed_tags") {
      cfg.pipeline.removed_tags.clear();
      std::string_view rest = value;
      while (!rest.empty()) {
        std::size_t comma = rest.find(',');
        std::string_view tag = trim(rest.substr(0, comma));
        if (!tag.empty()) {
          if (!is_penn_tag(tag)) {
            throw Error("config key \"removed_tags\": unknown tag \"" +
                        std::string(tag) + "\"");
          }
          cfg.pipeline.removed_tags.insert(std::string(tag));
        }
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
    } else if (key == "stopwords") {
      cfg.stopwords_path = resolve(value);
    } else if (key == "blocklist") {
      cfg.blocklist_path = resolve(value);
    } else if (key == "forum_words") {
      cfg.forum_words_path = resolve(value);
    } else if (key == "tag_dictionary") {
      cfg.tag_dictionary_path = resolve(value);
    } else {
      throw Error("config file " + path + " line " + std::to_string(line_no) +
                  ": unknown key \"" + key + "\"");
    }
  }
  if (cfg.pipeline.min_len < 1 || cfg.pipeline.max_len < cfg.pipeline.min_len) {
    throw Error("config: requires 1 <= min_len <= max_len");
  }
  apply_resource_paths(cfg);
  return cfg;
}

}  // namespace cyberlex
