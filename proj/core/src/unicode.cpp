#include "unicode.hpp"

#include <algorithm>
#include <iterator>

namespace semqa::uni {
namespace {

struct CodepointRange {
  char32_t lo;
  char32_t hi;
};

struct LowercasePair {
  char32_t cp;
  char32_t lower;
};

#include "unicode_tables.inc"

}  // namespace

bool is_punctuation(char32_t cp) {
  const auto* end = std::end(kPunctuationRanges);
  const auto* it = std::upper_bound(
      std::begin(kPunctuationRanges), end, cp,
      [](char32_t value, const CodepointRange& range) { return value < range.lo; });
  return it != std::begin(kPunctuationRanges) && cp <= (it - 1)->hi;
}

bool is_whitespace(char32_t cp) {
  return std::binary_search(std::begin(kWhitespaceCodepoints),
                            std::end(kWhitespaceCodepoints), cp);
}

char32_t to_lower(char32_t cp) {
  const auto* end = std::end(kLowercasePairs);
  const auto* it = std::lower_bound(
      std::begin(kLowercasePairs), end, cp,
      [](const LowercasePair& pair, char32_t value) { return pair.cp < value; });
  if (it != end && it->cp == cp) return it->lower;
  return cp;
}

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  const auto byte = [&](std::size_t p) { return static_cast<unsigned char>(text[p]); };
  while (i < text.size()) {
    const unsigned char b0 = byte(i);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    if (i + len > text.size()) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    bool valid = true;
    for (int k = 1; k < len; ++k) {
      if ((byte(i + k) & 0xC0) != 0x80) {
        valid = false;
        break;
      }
      cp = (cp << 6) | (byte(i + k) & 0x3F);
    }
    const char32_t min_cp = len == 2 ? 0x80 : len == 3 ? 0x800 : 0x10000;
    if (!valid || cp < min_cp || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) append_utf8(out, cp);
  return out;
}

char32_t codepoint_before(std::string_view text, std::size_t end) {
  if (end == 0 || end > text.size()) return 0;
  std::size_t start = end - 1;
  while (start > 0 && (static_cast<unsigned char>(text[start]) & 0xC0) == 0x80) {
    --start;
  }
  const std::u32string decoded = decode_utf8(text.substr(start, end - start));
  return decoded.empty() ? 0 : decoded.back();
}

char32_t codepoint_at(std::string_view text, std::size_t begin) {
  if (begin >= text.size()) return 0;
  std::size_t len = 1;
  const unsigned char b0 = static_cast<unsigned char>(text[begin]);
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
  }
  len = std::min(len, text.size() - begin);
  const std::u32string decoded = decode_utf8(text.substr(begin, len));
  return decoded.empty() ? 0 : decoded.front();
}

}  // namespace semqa::uni
