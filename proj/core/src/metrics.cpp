#include "semqa/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "rng.hpp"

namespace semqa {

std::size_t lcs_length(const TokenList& x, const TokenList& y) {
  if (x.empty() || y.empty()) return 0;
  std::vector<std::size_t> prev(y.size() + 1, 0);
  std::vector<std::size_t> curr(y.size() + 1, 0);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j) {
      if (x[i - 1] == y[j - 1]) {
        curr[j] = prev[j - 1] + 1;
      } else {
        curr[j] = std::max(prev[j], curr[j - 1]);
      }
    }
    std::swap(prev, curr);
  }
  return prev[y.size()];
}

namespace {

double lcs_fscore(const TokenList& hyp, const TokenList& ref) {
  if (hyp.empty() && ref.empty()) return 1.0;
  if (hyp.empty() || ref.empty()) return 0.0;
  const double l = static_cast<double>(lcs_length(hyp, ref));
  const double p = l / static_cast<double>(hyp.size());
  const double r = l / static_cast<double>(ref.size());
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

}  // namespace

double rouge_l(std::string_view hypothesis,
               const std::vector<std::string>& references) {
  if (references.empty()) {
    throw std::invalid_argument("rouge_l: empty reference list");
  }
  const TokenList hyp = normalize_tokens(hypothesis);
  double best = 0.0;
  for (const std::string& reference : references) {
    best = std::max(best, lcs_fscore(hyp, normalize_tokens(reference)));
  }
  return 100.0 * best;
}

double token_f1(const TokenList& predicted, const TokenList& gold) {
  if (predicted.empty() && gold.empty()) return 1.0;
  if (predicted.empty() || gold.empty()) return 0.0;
  std::unordered_map<std::string, int> gold_counts;
  for (const std::string& token : gold) ++gold_counts[token];
  std::size_t overlap = 0;
  for (const std::string& token : predicted) {
    const auto it = gold_counts.find(token);
    if (it != gold_counts.end() && it->second > 0) {
      --it->second;
      ++overlap;
    }
  }
  const double p = static_cast<double>(overlap) / predicted.size();
  const double r = static_cast<double>(overlap) / gold.size();
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

double sem_f1(const QuotedAnswer& hypothesis,
              const std::vector<QuotedAnswer>& references, int source_count) {
  if (source_count < 1) {
    throw std::invalid_argument("sem_f1: source count must be positive");
  }
  if (references.empty()) {
    throw std::invalid_argument("sem_f1: empty reference list");
  }
  double total = 0.0;
  for (int k = 1; k <= source_count; ++k) {
    const TokenList hyp_tokens = normalize_tokens(psi_k(hypothesis, k));
    double best = 0.0;
    for (const QuotedAnswer& reference : references) {
      best = std::max(
          best, token_f1(hyp_tokens, normalize_tokens(psi_k(reference, k))));
    }
    total += best;
  }
  return 100.0 * total / source_count;
}

namespace {

std::unordered_map<std::string, int> token_counts(const TokenList& tokens) {
  std::unordered_map<std::string, int> counts;
  for (const std::string& token : tokens) ++counts[token];
  return counts;
}

// Multiset recall of `gold` inside `hyp`; empty gold counts as covered.
double token_recall(const TokenList& gold,
                    const std::unordered_map<std::string, int>& hyp) {
  if (gold.empty()) return 1.0;
  std::unordered_map<std::string, int> needed = token_counts(gold);
  std::size_t covered = 0;
  for (const auto& [token, count] : needed) {
    const auto it = hyp.find(token);
    if (it != hyp.end()) covered += std::min(count, it->second);
  }
  return static_cast<double>(covered) / gold.size();
}

}  // namespace

double sem_rec(const QuotedAnswer& hypothesis,
               const ShortAnswerSets& short_answers, int source_count,
               SemRecGranularity granularity) {
  if (source_count < 1) {
    throw std::invalid_argument("sem_rec: source count must be positive");
  }
  if (short_answers.empty()) {
    throw std::invalid_argument("sem_rec: no short-answer reference entries");
  }
  static const std::vector<std::string> kNone;
  double total = 0.0;
  for (int k = 1; k <= source_count; ++k) {
    const auto hyp_counts =
        token_counts(normalize_tokens(psi_k(hypothesis, k)));
    double best = 0.0;
    bool any_gold = false;
    for (const auto& reference : short_answers) {
      const std::vector<std::string>& answers =
          static_cast<std::size_t>(k) <= reference.size() ? reference[k - 1]
                                                          : kNone;
      if (granularity == SemRecGranularity::ReferenceBundle) {
        std::string bundle;
        for (const std::string& answer : answers) {
          if (!bundle.empty()) bundle += ' ';
          bundle += answer;
        }
        const TokenList gold = normalize_tokens(bundle);
        if (gold.empty()) {
          // This reference does not cover source k; agreeing with it is fine.
          best = 1.0;
          continue;
        }
        best = std::max(best, token_recall(gold, hyp_counts));
      } else {
        for (const std::string& answer : answers) {
          const TokenList gold = normalize_tokens(answer);
          if (gold.empty()) continue;
          any_gold = true;
          best = std::max(best, token_recall(gold, hyp_counts));
        }
      }
    }
    if (granularity == SemRecGranularity::PerAnswer && !any_gold) best = 1.0;
    total += best;
  }
  return 100.0 * total / source_count;
}

double semqa_score(double sem_f1_percent, double rouge_l_percent) {
  if (sem_f1_percent < 0.0 || sem_f1_percent > 100.0 ||
      rouge_l_percent < 0.0 || rouge_l_percent > 100.0) {
    throw std::invalid_argument("semqa_score: inputs must be in [0, 100]");
  }
  return std::sqrt(sem_f1_percent * rouge_l_percent);
}

namespace {

// Empirical percentile with linear interpolation over a sorted sample.
double percentile(const std::vector<double>& sorted, double q) {
  if (sorted.size() == 1) return sorted.front();
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

}  // namespace

std::pair<double, double> bootstrap_ci(const std::vector<double>& values,
                                       int resamples, double confidence,
                                       std::uint64_t seed) {
  if (values.empty()) {
    throw std::invalid_argument("bootstrap_ci: empty value list");
  }
  if (resamples < 1) {
    throw std::invalid_argument("bootstrap_ci: resamples must be >= 1");
  }
  if (confidence <= 0.0 || confidence >= 1.0) {
    throw std::invalid_argument("bootstrap_ci: confidence must be in (0, 1)");
  }
  std::mt19937_64 rng(seed);
  const std::size_t n = values.size();
  std::vector<double> means;
  means.reserve(resamples);
  for (int b = 0; b < resamples; ++b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sum += values[detail::uniform_index(rng, n)];
    }
    means.push_back(sum / static_cast<double>(n));
  }
  std::sort(means.begin(), means.end());
  const double alpha = (1.0 - confidence) / 2.0;
  return {percentile(means, alpha), percentile(means, 1.0 - alpha)};
}

}  // namespace semqa
