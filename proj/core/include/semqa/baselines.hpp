#pragma once

#include "semqa/dataset.hpp"
#include "semqa/markup.hpp"

namespace semqa {

enum class BaselineMode { Lead, Tail };

// Quotes the first (Lead) or last (Tail, original order) min(k, count)
// sentences of every passage, one quote per source in passage order,
// separated by single-space free text. Sources whose text yields no
// sentences are skipped.
QuotedAnswer lead_tail_baseline(const Example& example, BaselineMode mode,
                                int k);

}  // namespace semqa
