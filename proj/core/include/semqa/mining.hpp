#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semqa/dataset.hpp"

namespace semqa {

// One (question, passage, short answer) row as fed into the mining filters.
// qa_score is an externally computed answerability probability in [0, 1].
struct TripletRecord {
  std::string question;
  Passage passage;
  std::string short_answer;
  std::string page_id;
  std::optional<double> qa_score;
};

enum class SimilarityTrigger { Levenshtein, IoU, Semantic };

struct SimilarityVerdict {
  bool similar = false;
  std::vector<SimilarityTrigger> triggered_by;
};

// Unit-cost edit distance over Unicode scalar values (not bytes).
std::size_t levenshtein(std::string_view x, std::string_view y);

// Intersection-over-union of normalize_tokens sets; both empty -> 1.
double word_iou(std::string_view x, std::string_view y);

// Binary answer similarity: edit distance <= 10, word IoU > 0.75, or an
// externally supplied semantic score > 0.5 (an absent score never triggers).
SimilarityVerdict phi(std::string_view x, std::string_view y,
                      std::optional<double> semantic_score = std::nullopt);

// Symmetric lookup of externally computed semantic similarity, keyed by the
// two answer strings of a pair.
class PairScoreTable {
 public:
  void insert(std::string_view a, std::string_view b, double score);
  std::optional<double> lookup(std::string_view a, std::string_view b) const;
  std::size_t size() const { return scores_.size(); }

 private:
  std::unordered_map<std::string, double> scores_;
};

struct DedupOptions {
  double min_qa_score = 0.5;
  std::size_t min_answer_words = 4;
};

// The per-question answer filter: drops low-score candidates, sorts the rest
// by descending qa_score (ties keep input order), then keeps a candidate only
// if its page is new, its short answer has at least min_answer_words words,
// is not a substring of an earlier kept passage (case-insensitive), and is
// not phi-similar to an earlier kept answer. Throws std::invalid_argument
// when any candidate lacks qa_score.
std::vector<TripletRecord> dedup_answers(
    const std::vector<TripletRecord>& candidates,
    const PairScoreTable* semantic_scores = nullptr,
    const DedupOptions& options = {});

// TF-IDF over normalize_tokens output: raw term counts, smoothed idf
// ln((1+N)/(1+df)) + 1, L2-normalized vectors. transform() keeps fitted
// vocabulary terms only.
class TfidfModel {
 public:
  // (term id, weight) pairs sorted by term id, L2-normalized.
  using SparseVector = std::vector<std::pair<std::size_t, double>>;

  static TfidfModel fit(const std::vector<std::string>& documents);

  SparseVector transform(std::string_view text) const;
  const SparseVector& document_vector(std::size_t index) const;
  std::size_t document_count() const { return documents_.size(); }

  static double cosine(const SparseVector& a, const SparseVector& b);

 private:
  std::unordered_map<std::string, std::size_t> vocabulary_;
  std::vector<double> idf_;
  std::vector<SparseVector> documents_;
};

// Connected components of the question graph with an edge wherever TF-IDF
// cosine exceeds the threshold. Components list ascending member indices and
// are ordered by smallest member.
std::vector<std::vector<std::size_t>> merge_questions(
    const std::vector<std::string>& questions, double threshold = 0.9);

// Word intersection ratio |S1 n S2| / min(|S1|, |S2|) over normalized token
// sets. Both empty -> 1, exactly one empty -> 0.
double passage_overlap(const Passage& p1, const Passage& p2);

struct StratumKey {
  QuestionType question_type = QuestionType::Other;
  int answer_count = 0;
};

// Balanced sampling: items are bucketed by (question type, answer count);
// buckets are visited round-robin in sorted key order, drawing one seeded
// uniform item per visit from each non-empty bucket until the quota is
// reached. Returns selected item indices in draw order. Throws
// std::invalid_argument when quota exceeds the item count.
std::vector<std::size_t> balanced_sample(const std::vector<StratumKey>& items,
                                         std::size_t quota,
                                         std::uint64_t seed);

}  // namespace semqa
