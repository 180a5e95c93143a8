#include "semqa/baselines.hpp"

#include "semqa/textnorm.hpp"

namespace semqa {

QuotedAnswer lead_tail_baseline(const Example& example, BaselineMode mode,
                                int k) {
  if (k < 1) {
    throw std::invalid_argument("lead_tail_baseline: k must be >= 1");
  }
  QuotedAnswer answer;
  answer.source_count_hint = example.source_count();
  for (std::size_t p = 0; p < example.passages.size(); ++p) {
    const std::vector<std::string> sentences =
        split_sentences(example.passages[p].text);
    if (sentences.empty()) continue;
    const std::size_t take =
        std::min<std::size_t>(static_cast<std::size_t>(k), sentences.size());
    const std::size_t first =
        mode == BaselineMode::Lead ? 0 : sentences.size() - take;
    std::string joined;
    for (std::size_t s = first; s < first + take; ++s) {
      if (!joined.empty()) joined += ' ';
      joined += sentences[s];
    }
    if (!answer.segments.empty()) {
      answer.segments.push_back(Segment::free_text(" "));
    }
    answer.segments.push_back(
        Segment::quote(static_cast<int>(p) + 1, std::move(joined)));
  }
  return answer;
}

}  // namespace semqa
