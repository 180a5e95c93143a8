#include "semqa/prompting.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "rng.hpp"
#include "semqa/mining.hpp"
#include "semqa/transform.hpp"

namespace semqa {
namespace {

constexpr std::string_view kQuotedHeader =
    "Answer the question by summarizing the given sources while explicitly "
    "copying spans from the sources. When copying a span, use brackets and "
    "the respective source number to indicate that this span was copied. Use "
    "explicit copying as much as possible and for all factual statements, "
    "while preserving fluency. Make sure to use all relevant sources and "
    "properly quote them. Here are some examples:";

constexpr std::string_view kCitedHeader =
    "Instruction: Write a high-quality answer for the given question using "
    "only the provided search results and cite them properly using "
    "[1][2][3].";

struct Ranked {
  double similarity = 0.0;
  std::size_t index = 0;
};

std::vector<Example> take_top(const std::vector<Example>& train,
                              std::vector<Ranked> ranked, std::size_t n) {
  std::sort(ranked.begin(), ranked.end(), [&](const Ranked& a, const Ranked& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    if (train[a.index].question != train[b.index].question) {
      return train[a.index].question < train[b.index].question;
    }
    return train[a.index].id < train[b.index].id;
  });
  // Most similar last, adjacent to the query block.
  std::vector<Example> exemplars;
  exemplars.reserve(n);
  for (std::size_t i = n; i > 0; --i) {
    exemplars.push_back(train[ranked[i - 1].index]);
  }
  return exemplars;
}

}  // namespace

std::vector<Example> retrieve_exemplars(
    std::string_view query_question, const std::vector<Example>& train,
    std::size_t n, RetrievalMethod method,
    const std::map<std::string, double>* scores) {
  if (n > train.size()) {
    throw std::invalid_argument(
        "retrieve_exemplars: n exceeds the training set size");
  }
  if (n == 0) return {};

  std::vector<Ranked> ranked(train.size());
  if (method == RetrievalMethod::Tfidf) {
    std::vector<std::string> questions;
    questions.reserve(train.size());
    for (const Example& example : train) questions.push_back(example.question);
    const TfidfModel model = TfidfModel::fit(questions);
    const TfidfModel::SparseVector query = model.transform(query_question);
    for (std::size_t i = 0; i < train.size(); ++i) {
      ranked[i] = {TfidfModel::cosine(query, model.document_vector(i)), i};
    }
  } else {
    if (!scores) {
      throw std::invalid_argument(
          "retrieve_exemplars: Precomputed retrieval requires scores");
    }
    for (std::size_t i = 0; i < train.size(); ++i) {
      const auto it = scores->find(train[i].id);
      if (it == scores->end()) {
        throw std::invalid_argument(
            "retrieve_exemplars: no score for training example '" +
            train[i].id + "'");
      }
      ranked[i] = {it->second, i};
    }
  }
  return take_top(train, std::move(ranked), n);
}

namespace {

void append_example_block(std::string& out, const Example& example) {
  out += "Question: ";
  out += example.question;
  out += '\n';
  for (std::size_t p = 0; p < example.passages.size(); ++p) {
    out += " [";
    out += std::to_string(p + 1);
    out += "] ";
    out += example.passages[p].title;
    out += ": ";
    out += example.passages[p].text;
    out += '\n';
  }
}

}  // namespace

std::string build_prompt(const std::vector<Example>& exemplars,
                         const Example& query, PromptFormat format,
                         std::uint64_t seed) {
  for (const Example& exemplar : exemplars) {
    if (exemplar.answers.empty()) {
      throw std::invalid_argument("build_prompt: exemplar '" + exemplar.id +
                                  "' has no references");
    }
  }
  const std::string_view label =
      format == PromptFormat::QSum ? "Quoted summary:" : "Answer:";

  std::mt19937_64 rng(seed);
  std::string out(format == PromptFormat::QSum ? kQuotedHeader : kCitedHeader);
  out += '\n';
  for (const Example& exemplar : exemplars) {
    append_example_block(out, exemplar);
    const std::size_t pick =
        detail::uniform_index(rng, exemplar.answers.size());
    const QuotedAnswer& reference = exemplar.answers[pick];
    out += label;
    out += ' ';
    out += format == PromptFormat::QSum ? serialize(reference)
                                        : to_sentence_citations(reference);
    out += "\n\n";
  }
  append_example_block(out, query);
  out += label;
  return out;
}

}  // namespace semqa
