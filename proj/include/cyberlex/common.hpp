#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cyberlex {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// FNV-1a over length-prefixed chunks; used for corpus/blocklist fingerprints
// recorded in build metadata.
class Fingerprint {
 public:
  void add(std::string_view chunk);
  std::string hex() const;

 private:
  std::uint64_t state_ = 14695981039346656037ull;
};

// Decodes UTF-8 into codepoints; invalid sequences become U+FFFD, one
// replacement per bad byte.
std::vector<char32_t> utf8_codepoints(std::string_view s);

// Codepoint plus its byte position, for slicing the original string.
struct Utf8Char {
  char32_t cp;
  std::uint32_t offset;
  std::uint32_t size;
};

std::vector<Utf8Char> utf8_decode(std::string_view s);

// Number of codepoints in a UTF-8 string.
std::size_t utf8_length(std::string_view s);

// Thread-count resolution for the parallel kernels: n > 0 means exactly n,
// n <= 0 means all hardware threads OpenMP reports.
int resolve_threads(int threads);

}  // namespace cyberlex
