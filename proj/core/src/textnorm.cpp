#include "semqa/textnorm.hpp"

#include <array>
#include <cctype>

#include "unicode.hpp"

namespace semqa {
namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_article(const std::string& token) {
  return token == "a" || token == "an" || token == "the";
}

// Token (maximal non-whitespace run) ending right before byte `end`.
std::string_view token_before(std::string_view text, std::size_t end) {
  std::size_t start = end;
  while (start > 0 && !is_ascii_space(text[start - 1])) --start;
  return text.substr(start, end - start);
}

}  // namespace

TokenList normalize_tokens(std::string_view text) {
  TokenList tokens;
  std::string current;
  for (char32_t cp : uni::decode_utf8(text)) {
    if (uni::is_whitespace(cp)) {
      if (!current.empty() && !is_article(current)) tokens.push_back(current);
      current.clear();
      continue;
    }
    if (uni::is_punctuation(cp)) continue;
    uni::append_utf8(current, uni::to_lower(cp));
  }
  if (!current.empty() && !is_article(current)) tokens.push_back(current);
  return tokens;
}

const std::vector<std::string>& sentence_abbreviations() {
  static const std::vector<std::string> kAbbreviations = {
      "Mr",  "Mrs", "Ms",  "Dr",  "Prof", "St",  "Jr",
      "Sr",  "Mt",  "No",  "vs",  "etc",  "Inc", "Ltd",
      "Co",  "Fig", "al",  "e.g", "i.e",  "U.S", "U.K",
  };
  return kAbbreviations;
}

namespace {

bool is_abbreviation(std::string_view token) {
  for (const std::string& abbr : sentence_abbreviations()) {
    if (token == abbr) return true;
  }
  return false;
}

// True when the period at `pos` must not end a sentence.
bool period_guarded(std::string_view text, std::size_t pos) {
  if (pos > 0 && pos + 1 < text.size() &&
      std::isdigit(static_cast<unsigned char>(text[pos - 1])) &&
      std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
    return true;  // decimal such as 3.5
  }
  const std::string_view token = token_before(text, pos);
  if (token.size() == 1 && std::isupper(static_cast<unsigned char>(token[0]))) {
    return true;  // initial such as "George W."
  }
  return is_abbreviation(token);
}

SentenceSpan trimmed_span(std::string_view text, std::size_t begin,
                          std::size_t end) {
  while (begin < end && is_ascii_space(text[begin])) ++begin;
  while (end > begin && is_ascii_space(text[end - 1])) --end;
  return {begin, end};
}

}  // namespace

std::vector<SentenceSpan> split_sentence_spans(std::string_view text) {
  std::vector<SentenceSpan> spans;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    const bool at_end = i + 1 == text.size();
    if (!at_end && !uni::is_whitespace(uni::codepoint_at(text, i + 1))) {
      continue;
    }
    if (c == '.' && period_guarded(text, i)) continue;
    const SentenceSpan span = trimmed_span(text, start, i + 1);
    if (span.begin < span.end) spans.push_back(span);
    start = i + 1;
  }
  const SentenceSpan tail = trimmed_span(text, start, text.size());
  if (tail.begin < tail.end) spans.push_back(tail);
  return spans;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> sentences;
  for (const SentenceSpan& span : split_sentence_spans(text)) {
    sentences.emplace_back(text.substr(span.begin, span.end - span.begin));
  }
  return sentences;
}

}  // namespace semqa
