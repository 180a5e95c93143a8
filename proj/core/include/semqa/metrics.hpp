#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semqa/markup.hpp"
#include "semqa/textnorm.hpp"

namespace semqa {

// short_answers[r][k-1] holds the short-answer strings that reference r
// covers from source k. Outer length = number of references, inner length =
// number of sources; inner sets may be empty.
using ShortAnswerSets = std::vector<std::vector<std::vector<std::string>>>;

// Longest common subsequence length, O(|x|*|y|) dynamic program.
std::size_t lcs_length(const TokenList& x, const TokenList& y);

// LCS F-measure between the hypothesis and each reference (both run through
// normalize_tokens), maximum over references, scaled to [0, 100].
// Conventions: empty-vs-empty token lists score 1; a zero denominator or
// P+R=0 scores 0. Throws std::invalid_argument on an empty reference list.
double rouge_l(std::string_view hypothesis,
               const std::vector<std::string>& references);

// Multiset token F1. Both empty -> 1, exactly one empty -> 0.
double token_f1(const TokenList& predicted, const TokenList& gold);

// Per-source extraction F1 averaged over sources 1..source_count, where each
// source takes the best token_f1 against any reference's extractions for that
// source. Scaled to [0, 100]. A source quoted by neither side counts as
// agreement (F1 = 1): references may legitimately leave passages unused.
double sem_f1(const QuotedAnswer& hypothesis,
              const std::vector<QuotedAnswer>& references, int source_count);

// Short-answer recall granularity. ReferenceBundle treats all of one
// reference's short answers for a source as a single token bag and takes the
// max over references; PerAnswer takes the max over individual short-answer
// strings instead.
enum class SemRecGranularity { ReferenceBundle, PerAnswer };

// Token recall of reference short answers inside the hypothesis's per-source
// extractions, max over references, averaged over sources, scaled to
// [0, 100]. A source with no gold short answers scores full recall.
double sem_rec(const QuotedAnswer& hypothesis,
               const ShortAnswerSets& short_answers, int source_count,
               SemRecGranularity granularity = SemRecGranularity::ReferenceBundle);

// Geometric mean of the two percent scores.
double semqa_score(double sem_f1_percent, double rouge_l_percent);

// Percentile bootstrap of the mean: `resamples` seeded redraws with
// replacement; returns the ((1-c)/2, 1-(1-c)/2) empirical percentiles with
// linear interpolation. Deterministic for a fixed seed on every platform.
std::pair<double, double> bootstrap_ci(const std::vector<double>& values,
                                       int resamples, double confidence,
                                       std::uint64_t seed);

struct ExampleScores {
  std::string example_id;
  double rouge_l = 0.0;
  double sem_f1 = 0.0;
  double sem_rec = 0.0;
  double semqa = 0.0;
  int parse_warnings = 0;
};

struct AggregateScores {
  double rouge_l = 0.0;
  double sem_f1 = 0.0;
  double sem_rec = 0.0;
  double semqa = 0.0;
  long parse_warnings = 0;  // total, not mean
};

struct MetricReport {
  std::vector<ExampleScores> per_example;  // sorted by example_id
  AggregateScores aggregate;
  // metric name -> (low, high); filled only when bootstrap was requested
  std::map<std::string, std::pair<double, double>> intervals;
};

// Sorts rows by example_id, averages them (per-example SEMQA first, then the
// mean), and optionally attaches bootstrap intervals for all four metrics.
MetricReport make_report(std::vector<ExampleScores> rows,
                         std::optional<int> bootstrap_resamples = std::nullopt,
                         double confidence = 0.95, std::uint64_t seed = 0);

std::string report_to_json(const MetricReport& report);
// Column order: example_id, rouge_l, sem_f1, sem_rec, semqa, parse_warnings;
// two decimal places; one `aggregate` row at the end.
std::string report_to_csv(const MetricReport& report);

}  // namespace semqa
