#include "semqa/mining.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_set>

#include "rng.hpp"
#include "semqa/textnorm.hpp"
#include "unicode.hpp"

namespace semqa {

std::size_t levenshtein(std::string_view x, std::string_view y) {
  const std::u32string a = uni::decode_utf8(x);
  const std::u32string b = uni::decode_utf8(y);
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> curr(b.size() + 1);
  std::iota(prev.begin(), prev.end(), 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    curr[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t substitution = prev[j - 1] + (a[i - 1] != b[j - 1]);
      curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, substitution});
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

namespace {

std::unordered_set<std::string> token_set(std::string_view text) {
  std::unordered_set<std::string> set;
  for (std::string& token : normalize_tokens(text)) set.insert(std::move(token));
  return set;
}

std::size_t intersection_size(const std::unordered_set<std::string>& a,
                              const std::unordered_set<std::string>& b) {
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  std::size_t count = 0;
  for (const std::string& token : small) count += large.count(token);
  return count;
}

}  // namespace

double word_iou(std::string_view x, std::string_view y) {
  const auto sx = token_set(x);
  const auto sy = token_set(y);
  if (sx.empty() && sy.empty()) return 1.0;
  const std::size_t inter = intersection_size(sx, sy);
  const std::size_t union_size = sx.size() + sy.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(union_size);
}

SimilarityVerdict phi(std::string_view x, std::string_view y,
                      std::optional<double> semantic_score) {
  SimilarityVerdict verdict;
  if (levenshtein(x, y) <= 10) {
    verdict.triggered_by.push_back(SimilarityTrigger::Levenshtein);
  }
  if (word_iou(x, y) > 0.75) {
    verdict.triggered_by.push_back(SimilarityTrigger::IoU);
  }
  if (semantic_score && *semantic_score > 0.5) {
    verdict.triggered_by.push_back(SimilarityTrigger::Semantic);
  }
  verdict.similar = !verdict.triggered_by.empty();
  return verdict;
}

namespace {

std::string pair_key(std::string_view a, std::string_view b) {
  if (b < a) std::swap(a, b);
  std::string key(a);
  key += '\x1f';
  key += b;
  return key;
}

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::size_t whitespace_word_count(std::string_view text) {
  std::size_t count = 0;
  bool in_word = false;
  for (char c : text) {
    const bool space = std::isspace(static_cast<unsigned char>(c)) != 0;
    if (!space && !in_word) ++count;
    in_word = !space;
  }
  return count;
}

}  // namespace

void PairScoreTable::insert(std::string_view a, std::string_view b,
                            double score) {
  scores_[pair_key(a, b)] = score;
}

std::optional<double> PairScoreTable::lookup(std::string_view a,
                                             std::string_view b) const {
  const auto it = scores_.find(pair_key(a, b));
  if (it == scores_.end()) return std::nullopt;
  return it->second;
}

std::vector<TripletRecord> dedup_answers(
    const std::vector<TripletRecord>& candidates,
    const PairScoreTable* semantic_scores, const DedupOptions& options) {
  for (const TripletRecord& candidate : candidates) {
    if (!candidate.qa_score) {
      throw std::invalid_argument(
          "dedup_answers: candidate for '" + candidate.question +
          "' lacks qa_score");
    }
  }
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return *candidates[a].qa_score > *candidates[b].qa_score;
                   });

  std::vector<TripletRecord> kept;
  std::unordered_set<std::string> kept_pages;
  std::vector<std::string> kept_passages_lower;
  for (std::size_t index : order) {
    const TripletRecord& candidate = candidates[index];
    if (*candidate.qa_score < options.min_qa_score) continue;
    if (kept_pages.count(candidate.page_id)) continue;
    if (whitespace_word_count(candidate.short_answer) <
        options.min_answer_words) {
      continue;
    }
    const std::string answer_lower = ascii_lower(candidate.short_answer);
    bool drop = false;
    for (const std::string& passage : kept_passages_lower) {
      if (passage.find(answer_lower) != std::string::npos) {
        drop = true;
        break;
      }
    }
    if (!drop) {
      for (const TripletRecord& earlier : kept) {
        const std::optional<double> score =
            semantic_scores ? semantic_scores->lookup(candidate.short_answer,
                                                      earlier.short_answer)
                            : std::nullopt;
        if (phi(candidate.short_answer, earlier.short_answer, score).similar) {
          drop = true;
          break;
        }
      }
    }
    if (drop) continue;
    kept_pages.insert(candidate.page_id);
    kept_passages_lower.push_back(ascii_lower(candidate.passage.text));
    kept.push_back(candidate);
  }
  return kept;
}

TfidfModel TfidfModel::fit(const std::vector<std::string>& documents) {
  TfidfModel model;
  std::vector<std::vector<std::size_t>> doc_term_ids(documents.size());
  std::vector<std::size_t> df;
  for (std::size_t d = 0; d < documents.size(); ++d) {
    std::unordered_set<std::size_t> seen;
    for (const std::string& token : normalize_tokens(documents[d])) {
      auto [it, inserted] =
          model.vocabulary_.emplace(token, model.vocabulary_.size());
      if (inserted) df.push_back(0);
      doc_term_ids[d].push_back(it->second);
      if (seen.insert(it->second).second) ++df[it->second];
    }
  }
  const double n = static_cast<double>(documents.size());
  model.idf_.resize(df.size());
  for (std::size_t t = 0; t < df.size(); ++t) {
    model.idf_[t] =
        std::log((1.0 + n) / (1.0 + static_cast<double>(df[t]))) + 1.0;
  }
  model.documents_.reserve(documents.size());
  for (const auto& term_ids : doc_term_ids) {
    std::vector<std::pair<std::size_t, double>> counts;
    for (std::size_t id : term_ids) {
      auto it = std::find_if(counts.begin(), counts.end(),
                             [id](const auto& entry) { return entry.first == id; });
      if (it == counts.end()) {
        counts.emplace_back(id, 1.0);
      } else {
        it->second += 1.0;
      }
    }
    std::sort(counts.begin(), counts.end());
    double norm = 0.0;
    for (auto& [id, weight] : counts) {
      weight *= model.idf_[id];
      norm += weight * weight;
    }
    norm = std::sqrt(norm);
    if (norm > 0.0) {
      for (auto& [id, weight] : counts) weight /= norm;
    }
    model.documents_.push_back(std::move(counts));
  }
  return model;
}

TfidfModel::SparseVector TfidfModel::transform(std::string_view text) const {
  SparseVector vector;
  for (const std::string& token : normalize_tokens(text)) {
    const auto it = vocabulary_.find(token);
    if (it == vocabulary_.end()) continue;  // fitted vocabulary only
    auto entry = std::find_if(vector.begin(), vector.end(), [&](const auto& e) {
      return e.first == it->second;
    });
    if (entry == vector.end()) {
      vector.emplace_back(it->second, 1.0);
    } else {
      entry->second += 1.0;
    }
  }
  std::sort(vector.begin(), vector.end());
  double norm = 0.0;
  for (auto& [id, weight] : vector) {
    weight *= idf_[id];
    norm += weight * weight;
  }
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (auto& [id, weight] : vector) weight /= norm;
  }
  return vector;
}

const TfidfModel::SparseVector& TfidfModel::document_vector(
    std::size_t index) const {
  return documents_.at(index);
}

double TfidfModel::cosine(const SparseVector& a, const SparseVector& b) {
  double dot = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      dot += a[i].second * b[j].second;
      ++i;
      ++j;
    } else if (a[i].first < b[j].first) {
      ++i;
    } else {
      ++j;
    }
  }
  return dot;
}

std::vector<std::vector<std::size_t>> merge_questions(
    const std::vector<std::string>& questions, double threshold) {
  if (questions.empty()) {
    throw std::invalid_argument("merge_questions: empty question list");
  }
  const TfidfModel model = TfidfModel::fit(questions);

  std::vector<std::size_t> parent(questions.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t i = 0; i < questions.size(); ++i) {
    for (std::size_t j = i + 1; j < questions.size(); ++j) {
      if (TfidfModel::cosine(model.document_vector(i),
                             model.document_vector(j)) > threshold) {
        parent[find(i)] = find(j);
      }
    }
  }

  std::vector<std::vector<std::size_t>> groups;
  std::unordered_map<std::size_t, std::size_t> group_of_root;
  for (std::size_t i = 0; i < questions.size(); ++i) {
    const std::size_t root = find(i);
    const auto [it, inserted] = group_of_root.emplace(root, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  return groups;
}

double passage_overlap(const Passage& p1, const Passage& p2) {
  const auto s1 = token_set(p1.text);
  const auto s2 = token_set(p2.text);
  if (s1.empty() && s2.empty()) return 1.0;
  if (s1.empty() || s2.empty()) return 0.0;
  const std::size_t inter = intersection_size(s1, s2);
  return static_cast<double>(inter) /
         static_cast<double>(std::min(s1.size(), s2.size()));
}

std::vector<std::size_t> balanced_sample(const std::vector<StratumKey>& items,
                                         std::size_t quota,
                                         std::uint64_t seed) {
  if (quota > items.size()) {
    throw std::invalid_argument("balanced_sample: quota exceeds item count");
  }
  std::map<std::pair<int, int>, std::vector<std::size_t>> cells;
  for (std::size_t i = 0; i < items.size(); ++i) {
    cells[{static_cast<int>(items[i].question_type), items[i].answer_count}]
        .push_back(i);
  }
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> selected;
  selected.reserve(quota);
  while (selected.size() < quota) {
    for (auto& [key, members] : cells) {
      if (members.empty()) continue;
      const std::size_t pick = detail::uniform_index(rng, members.size());
      selected.push_back(members[pick]);
      members.erase(members.begin() + static_cast<std::ptrdiff_t>(pick));
      if (selected.size() == quota) break;
    }
  }
  return selected;
}

}  // namespace semqa
