#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace semqa {

using TokenList = std::vector<std::string>;

// SQuAD-style answer normalization: lowercase, strip every Unicode
// punctuation character (category P), drop the articles a/an/the, split on
// whitespace. Tables are frozen at Unicode 13.0.0 (see src/unicode_tables.inc);
// changing them is a breaking change for golden files.
TokenList normalize_tokens(std::string_view text);

// Byte range [begin, end) of a sentence inside the original text, trimmed
// of surrounding whitespace.
struct SentenceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Splits on `.`, `!`, `?` followed by whitespace or end of text. A period is
// not a boundary after a single uppercase letter, after an abbreviation from
// sentence_abbreviations(), or between two digits. Terminators stay with the
// left sentence; empty sentences are dropped.
std::vector<std::string> split_sentences(std::string_view text);
std::vector<SentenceSpan> split_sentence_spans(std::string_view text);

// The fixed abbreviation list guarding sentence breaks (versioned: changing
// it is a breaking change for golden files).
const std::vector<std::string>& sentence_abbreviations();

}  // namespace semqa
