#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "semqa/dataset.hpp"
#include "semqa/markup.hpp"

namespace semqa {

// Rewrites span-level attributions as sentence-level citations: marks are
// stripped, and every sentence that overlaps at least one quote gets ` [k]`
// per distinct source (first-appearance order) placed before its terminal
// punctuation. An answer without quotes is returned stripped and unchanged.
std::string to_sentence_citations(const QuotedAnswer& answer);

enum class RenderTarget { Ansi, Html };

// Highlights quotes with one of eight colors keyed by source index (cycling
// past eight). Ansi wraps quotes in background-color escapes; Html emits a
// minimal embedded stylesheet plus one span per quote, with all content
// escaped.
std::string render(const QuotedAnswer& answer, RenderTarget target);

struct FaithfulnessViolation {
  std::size_t segment_index = 0;  // position in answer.segments
  int source_index = 0;
  std::string quote_text;
  // Longest common substring between the quote and the attributed passage
  // (whitespace-collapsed), as a where-to-look hint.
  std::size_t hint_offset = 0;
  std::size_t hint_length = 0;
};

// Verifies that each quote occurs verbatim (case-sensitive, whitespace runs
// collapsed) in its attributed passage. Throws std::out_of_range when a
// quote's source index exceeds the passage count.
std::vector<FaithfulnessViolation> check_faithfulness(
    const QuotedAnswer& answer, const std::vector<Passage>& passages);

}  // namespace semqa
