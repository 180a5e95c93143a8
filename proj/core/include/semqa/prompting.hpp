#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "semqa/dataset.hpp"

namespace semqa {

enum class RetrievalMethod { Tfidf, Precomputed };

// Ranks training examples against the query question, by TF-IDF cosine
// (descending, ties by question text then id) or by externally supplied
// similarity scores keyed by example id. Returns the top n in ascending
// similarity order, so the most similar exemplar sits last, adjacent to the
// query block. Throws std::invalid_argument when n exceeds the training size
// or Precomputed scores are missing.
std::vector<Example> retrieve_exemplars(
    std::string_view query_question, const std::vector<Example>& train,
    std::size_t n, RetrievalMethod method,
    const std::map<std::string, double>* scores = nullptr);

enum class PromptFormat { QSum, QSumS };

// Assembles the few-shot prompt: instruction header, one block per exemplar
// (question, numbered ` [i] Title: text` sources, answer line), then the
// query block ending with a bare answer label. Each exemplar contributes one
// seeded-uniformly chosen reference; QSumS passes it through
// to_sentence_citations. Throws std::invalid_argument when an exemplar has
// no references.
std::string build_prompt(const std::vector<Example>& exemplars,
                         const Example& query, PromptFormat format,
                         std::uint64_t seed);

}  // namespace semqa
