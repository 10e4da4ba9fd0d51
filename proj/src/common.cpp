#include "cyberlex/common.hpp"

#include <array>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cyberlex {

void Fingerprint::add(std::string_view chunk) {
  auto mix = [this](unsigned char byte) {
    state_ ^= byte;
    state_ *= 1099511628211ull;
  };
  std::uint64_t len = chunk.size();
  for (int shift = 0; shift < 64; shift += 8) {
    mix(static_cast<unsigned char>(len >> shift));
  }
  for (char c : chunk) mix(static_cast<unsigned char>(c));
}

std::string Fingerprint::hex() const {
  std::array<char, 17> buf{};
  std::snprintf(buf.data(), buf.size(), "%016llx",
                static_cast<unsigned long long>(state_));
  return std::string(buf.data());
}

std::vector<Utf8Char> utf8_decode(std::string_view s) {
  std::vector<Utf8Char> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    std::uint32_t len;
    char32_t cp;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      out.push_back({0xFFFD, static_cast<std::uint32_t>(i), 1});
      ++i;
      continue;
    }
    if (i + len > s.size()) {
      out.push_back({0xFFFD, static_cast<std::uint32_t>(i), 1});
      ++i;
      continue;
    }
    bool ok = true;
    for (std::uint32_t k = 1; k < len; ++k) {
      unsigned char bk = static_cast<unsigned char>(s[i + k]);
      if ((bk & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (bk & 0x3F);
    }
    if (!ok) {
      out.push_back({0xFFFD, static_cast<std::uint32_t>(i), 1});
      ++i;
      continue;
    }
    out.push_back({cp, static_cast<std::uint32_t>(i), len});
    i += len;
  }
  return out;
}

std::vector<char32_t> utf8_codepoints(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  for (const Utf8Char& c : utf8_decode(s)) out.push_back(c.cp);
  return out;
}

std::size_t utf8_length(std::string_view s) {
  std::size_t n = 0;
  for (char c : s) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace cyberlex
