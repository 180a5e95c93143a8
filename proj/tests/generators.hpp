// Random-input generators for the property suites.
#pragma once

#include <string>
#include <vector>

#include "prop.hpp"
#include "semqa/markup.hpp"
#include "semqa/metrics.hpp"

namespace gen {

inline const std::vector<std::string>& word_pool() {
  static const std::vector<std::string> kWords = {
      "song",   "released", "crosby",  "bing",   "1943",  "film",
      "beast",  "musical",  "series",  "actor",  "plays", "church",
      "turbine", "power",   "energy",  "watts",  "wind",  "speed",
      "city",   "tour",     "band",    "album",  "north", "river",
  };
  return kWords;
}

inline std::string random_word(prop::Rng& rng) { return rng.pick(word_pool()); }

inline std::string random_words(prop::Rng& rng, int min_count, int max_count) {
  const int count = rng.range(min_count, max_count);
  std::string out;
  for (int i = 0; i < count; ++i) {
    if (!out.empty()) out += ' ';
    out += random_word(rng);
  }
  return out;
}

// Free-text piece whose quote-facing edges are whitespace or a
// punctuation-only chunk, the shape real connector text takes; this is the
// domain on which the token-partition property of strip_marks holds.
inline std::string random_connector(prop::Rng& rng) {
  static const std::vector<std::string> kLeads = {" ", " \"", " ( ", " , ",
                                                  " ; ", ". "};
  static const std::vector<std::string> kTails = {" ", "\" ", " ) ", " . ",
                                                  " : "};
  std::string out = rng.pick(kLeads);
  if (rng.chance(0.7)) out += random_words(rng, 1, 3);
  out += rng.pick(kTails);
  return out;
}

inline semqa::QuotedAnswer random_answer(prop::Rng& rng, int source_count) {
  semqa::QuotedAnswer answer;
  answer.source_count_hint = source_count;
  const int segment_count = rng.range(0, 8);
  bool last_was_text = false;
  for (int i = 0; i < segment_count; ++i) {
    if (!last_was_text && rng.chance(0.4)) {
      answer.segments.push_back(
          semqa::Segment::free_text(random_connector(rng)));
      last_was_text = true;
    } else {
      answer.segments.push_back(semqa::Segment::quote(
          rng.range(1, source_count), random_words(rng, 1, 5)));
      last_was_text = false;
    }
  }
  return answer.canonical();
}

inline std::vector<semqa::QuotedAnswer> random_references(prop::Rng& rng,
                                                          int source_count,
                                                          int min_count,
                                                          int max_count) {
  std::vector<semqa::QuotedAnswer> references;
  const int count = rng.range(min_count, max_count);
  for (int i = 0; i < count; ++i) {
    references.push_back(random_answer(rng, source_count));
  }
  return references;
}

inline semqa::ShortAnswerSets random_short_answers(prop::Rng& rng,
                                                   int source_count,
                                                   int reference_count) {
  semqa::ShortAnswerSets sets;
  for (int r = 0; r < reference_count; ++r) {
    std::vector<std::vector<std::string>> per_source;
    for (int k = 0; k < source_count; ++k) {
      std::vector<std::string> answers;
      const int count = rng.range(0, 2);
      for (int a = 0; a < count; ++a) {
        answers.push_back(random_words(rng, 1, 4));
      }
      per_source.push_back(std::move(answers));
    }
    sets.push_back(std::move(per_source));
  }
  return sets;
}

inline semqa::TokenList random_tokens(prop::Rng& rng, int max_length) {
  static const std::vector<std::string> kSmallAlphabet = {"x", "y", "z", "w",
                                                          "v"};
  semqa::TokenList tokens;
  const int length = rng.range(0, max_length);
  for (int i = 0; i < length; ++i) {
    tokens.push_back(rng.pick(kSmallAlphabet));
  }
  return tokens;
}

// Arbitrary text exercising the lenient parser: brackets, digits, unicode.
inline std::string random_noise(prop::Rng& rng) {
  static const std::vector<std::string> kPieces = {
      "[",  "]",  "[ ", " ]", "1",   "12",  "x",    " ",  "céline",
      "“",  "”;", "\t", "[ 1 ", "a]", "[2",  "\xFF", "é",  "quote",
  };
  const int count = rng.range(0, 12);
  std::string out;
  for (int i = 0; i < count; ++i) out += rng.pick(kPieces);
  return out;
}

}  // namespace gen
