#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "semqa/markup.hpp"
#include "semqa/metrics.hpp"

namespace semqa {

struct Passage {
  std::string title;
  std::string text;

  friend bool operator==(const Passage&, const Passage&) = default;
};

enum class Origin { PAQ, NQ };

std::string_view to_string(Origin origin);

struct Example {
  std::string id;
  std::string question;
  Origin origin = Origin::PAQ;
  std::vector<Passage> passages;
  std::vector<QuotedAnswer> answers;  // references, strict-parsed
  std::vector<std::string> answer_markup;  // original markup strings
  ShortAnswerSets short_answers;      // [reference][source][answer strings]

  int source_count() const { return static_cast<int>(passages.size()); }
};

struct ValidationIssue {
  std::size_t line = 0;  // 1-based line in the input file; 0 if not line-bound
  std::string example_id;
  std::string field;
  std::string message;
  bool is_error = true;  // false: lint warning (e.g. answer over 100 words)
};

struct LoadResult {
  std::vector<Example> examples;
  std::vector<ValidationIssue> issues;

  bool ok() const;  // true when no issue is an error
  std::size_t error_count() const;
  std::size_t warning_count() const;
};

// Reads canonical JSONL: one object per line with fields id, question,
// origin ("PAQ"|"NQ"), passages [{title, text}...], answers [markup...],
// short_answers [[[str...] x K] x refs]. Answer markup is strict-parsed
// against K. Lines with errors are reported and skipped; lint violations are
// reported and kept. Throws std::runtime_error when the file cannot be read.
LoadResult load_dataset(const std::string& path);
LoadResult load_dataset(std::istream& input);

// Permissive importer for externally published variants of the schema:
// accepts key/example_id aliases for id, summaries/quoted_answers for
// answers, parallel title/text arrays for passages, and a missing origin
// (defaults to PAQ). Emits canonical Examples.
LoadResult import_dataset(const std::string& path);

// Canonical single-line JSON for one example (the load_dataset schema).
std::string example_to_jsonl(const Example& example);
std::string issues_to_json(const std::vector<ValidationIssue>& issues);

enum class QuestionType { What, Who, Where, When, How, Which, Why, StandFor, Other };

std::string_view to_string(QuestionType type);

// Case-insensitive: questions containing "stand for" first, then dispatch on
// the first word, otherwise Other.
QuestionType question_type(std::string_view question);

struct DatasetStats {
  std::size_t example_count = 0;
  std::size_t unique_question_count = 0;
  std::size_t answer_count = 0;
  std::map<Origin, std::size_t> by_origin;
  std::map<QuestionType, std::size_t> question_types;
  std::map<int, std::size_t> sources_per_question;
  std::map<int, std::size_t> references_per_question;

  int max_sources() const;
};

DatasetStats compute_stats(const std::vector<Example>& examples);
std::string stats_to_json(const DatasetStats& stats);
std::string stats_to_table(const DatasetStats& stats);

struct SplitRatios {
  double train = 0.6;
  double validation = 0.07;
  double test = 0.33;
};

struct DatasetSplit {
  std::vector<Example> train;
  std::vector<Example> validation;
  std::vector<Example> test;
};

// Groups examples into connected components linked by shared passage titles,
// then assigns groups (largest first, seeded shuffle among equal sizes) to
// the split with the largest remaining deficit. No passage title can end up
// in both test and train/validation. Throws std::invalid_argument unless the
// ratios are non-negative and sum to 1 (±1e-9).
DatasetSplit split_dataset(const std::vector<Example>& examples,
                           SplitRatios ratios, std::uint64_t seed);

}  // namespace semqa
