#include "semqa/dataset.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "rng.hpp"

namespace semqa {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view to_string(Origin origin) {
  return origin == Origin::PAQ ? "PAQ" : "NQ";
}

bool LoadResult::ok() const { return error_count() == 0; }

std::size_t LoadResult::error_count() const {
  std::size_t count = 0;
  for (const ValidationIssue& issue : issues) count += issue.is_error ? 1 : 0;
  return count;
}

std::size_t LoadResult::warning_count() const {
  return issues.size() - error_count();
}

namespace {

constexpr std::size_t kAnswerWordLimit = 100;

std::size_t word_count(std::string_view text) {
  std::size_t count = 0;
  bool in_word = false;
  for (char c : text) {
    const bool space = std::isspace(static_cast<unsigned char>(c)) != 0;
    if (!space && !in_word) ++count;
    in_word = !space;
  }
  return count;
}

struct LineContext {
  std::size_t line = 0;
  std::string id;
  std::vector<ValidationIssue>* issues = nullptr;
  bool failed = false;

  void error(const std::string& field, const std::string& message) {
    issues->push_back({line, id, field, message, true});
    failed = true;
  }
  void warning(const std::string& field, const std::string& message) {
    issues->push_back({line, id, field, message, false});
  }
};

// Post-parse checks shared by the strict loader and the importer.
void validate_example(Example& example, LineContext& ctx) {
  if (example.passages.size() < 2) {
    ctx.error("passages", "an example requires at least two passages");
  }
  for (std::size_t p = 0; p < example.passages.size(); ++p) {
    if (example.passages[p].text.empty()) {
      ctx.error("passages[" + std::to_string(p) + "].text",
                "passage text must be non-empty");
    }
  }
  if (!example.short_answers.empty() &&
      example.short_answers.size() != example.answers.size()) {
    ctx.error("short_answers",
              "outer length must equal the number of answers");
  }
  for (std::size_t r = 0; r < example.short_answers.size(); ++r) {
    if (example.short_answers[r].size() !=
        static_cast<std::size_t>(example.source_count())) {
      ctx.error("short_answers[" + std::to_string(r) + "]",
                "inner length must equal the passage count");
    }
  }
  for (std::size_t a = 0; a < example.answers.size(); ++a) {
    const std::size_t words = word_count(strip_marks(example.answers[a]));
    if (words > kAnswerWordLimit) {
      ctx.warning("answers[" + std::to_string(a) + "]",
                  "answer has " + std::to_string(words) +
                      " words (limit " + std::to_string(kAnswerWordLimit) +
                      ")");
    }
  }
}

bool parse_answers(Example& example, const std::vector<std::string>& markup,
                   LineContext& ctx) {
  for (std::size_t a = 0; a < markup.size(); ++a) {
    try {
      ParseResult parsed =
          parse(markup[a], ParseMode::Strict, example.source_count());
      example.answers.push_back(std::move(parsed.answer));
    } catch (const MarkupError& error) {
      ctx.error("answers[" + std::to_string(a) + "]", error.what());
      return false;
    }
  }
  return true;
}

ShortAnswerSets read_short_answers(const json& node) {
  ShortAnswerSets sets;
  for (const json& reference : node) {
    std::vector<std::vector<std::string>> per_source;
    for (const json& source : reference) {
      std::vector<std::string> answers;
      for (const json& answer : source) answers.push_back(answer.get<std::string>());
      per_source.push_back(std::move(answers));
    }
    sets.push_back(std::move(per_source));
  }
  return sets;
}

std::optional<Origin> origin_from_string(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (upper == "PAQ") return Origin::PAQ;
  if (upper == "NQ") return Origin::NQ;
  return std::nullopt;
}

void load_line_strict(const std::string& line, LineContext& ctx,
                      std::vector<Example>& out) {
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::exception& error) {
    ctx.error("", std::string("invalid JSON: ") + error.what());
    return;
  }
  if (!doc.is_object()) {
    ctx.error("", "line is not a JSON object");
    return;
  }

  Example example;
  try {
    example.id = doc.at("id").get<std::string>();
    ctx.id = example.id;
    example.question = doc.at("question").get<std::string>();
    const auto origin = origin_from_string(doc.at("origin").get<std::string>());
    if (!origin) {
      ctx.error("origin", "must be \"PAQ\" or \"NQ\"");
      return;
    }
    example.origin = *origin;
    for (const json& passage : doc.at("passages")) {
      example.passages.push_back({passage.at("title").get<std::string>(),
                                  passage.at("text").get<std::string>()});
    }
    std::vector<std::string> markup;
    for (const json& answer : doc.at("answers")) {
      markup.push_back(answer.get<std::string>());
    }
    example.short_answers = read_short_answers(doc.at("short_answers"));
    if (!parse_answers(example, markup, ctx)) return;
  } catch (const json::exception& error) {
    ctx.error("", std::string("schema violation: ") + error.what());
    return;
  }

  validate_example(example, ctx);
  if (!ctx.failed) out.push_back(std::move(example));
}

}  // namespace

LoadResult load_dataset(std::istream& input) {
  LoadResult result;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(input, line)) {
    ++line_number;
    if (line.empty()) continue;
    LineContext ctx{line_number, "", &result.issues, false};
    load_line_strict(line, ctx, result.examples);
    if (!ctx.failed && !result.examples.empty() &&
        !seen_ids.insert(result.examples.back().id).second) {
      ctx.error("id", "duplicate example id '" + result.examples.back().id + "'");
      result.examples.pop_back();
    }
  }
  return result;
}

LoadResult load_dataset(const std::string& path) {
  std::ifstream input(path);
  if (!input) {
    throw std::runtime_error("cannot open dataset file: " + path);
  }
  return load_dataset(input);
}

namespace {

// Accepts published-variant field spellings and emits a canonical Example.
void import_line(const std::string& line, LineContext& ctx,
                 std::vector<Example>& out, std::size_t ordinal) {
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::exception& error) {
    ctx.error("", std::string("invalid JSON: ") + error.what());
    return;
  }
  if (!doc.is_object()) {
    ctx.error("", "line is not a JSON object");
    return;
  }

  const auto first_of = [&](std::initializer_list<const char*> names) -> const json* {
    for (const char* name : names) {
      if (doc.contains(name)) return &doc.at(name);
    }
    return nullptr;
  };

  Example example;
  try {
    if (const json* id = first_of({"id", "key", "example_id"})) {
      example.id = id->is_string() ? id->get<std::string>() : id->dump();
    } else {
      char buffer[32];
      std::snprintf(buffer, sizeof(buffer), "ex%05zu", ordinal);
      example.id = buffer;
      ctx.warning("id", "missing id; generated '" + example.id + "'");
    }
    ctx.id = example.id;

    if (const json* question = first_of({"question", "query"})) {
      example.question = question->get<std::string>();
    } else {
      ctx.error("question", "missing question");
      return;
    }

    if (const json* origin = first_of({"origin", "source", "dataset"})) {
      if (const auto parsed = origin_from_string(origin->get<std::string>())) {
        example.origin = *parsed;
      } else {
        ctx.warning("origin", "unknown origin; defaulting to PAQ");
      }
    } else {
      ctx.warning("origin", "missing origin; defaulting to PAQ");
    }

    if (const json* passages = first_of({"passages", "sources"})) {
      for (const json& passage : *passages) {
        const json* title = passage.contains("title") ? &passage.at("title") : nullptr;
        const json* text = nullptr;
        for (const char* name : {"text", "passage", "content"}) {
          if (passage.contains(name)) {
            text = &passage.at(name);
            break;
          }
        }
        if (!text) {
          ctx.error("passages", "passage entry lacks a text field");
          return;
        }
        example.passages.push_back(
            {title ? title->get<std::string>() : std::string(),
             text->get<std::string>()});
      }
    } else {
      const json* titles = first_of({"passage_titles", "titles", "source_titles"});
      const json* texts = first_of({"passage_texts", "texts", "source_texts"});
      if (!titles || !texts || titles->size() != texts->size()) {
        ctx.error("passages", "missing passages");
        return;
      }
      for (std::size_t p = 0; p < texts->size(); ++p) {
        example.passages.push_back({titles->at(p).get<std::string>(),
                                    texts->at(p).get<std::string>()});
      }
    }

    std::vector<std::string> markup;
    if (const json* answers = first_of({"answers", "summaries", "quoted_answers"})) {
      if (answers->is_string()) {
        markup.push_back(answers->get<std::string>());
      } else {
        for (const json& answer : *answers) {
          markup.push_back(answer.get<std::string>());
        }
      }
    } else if (const json* answer = first_of({"answer", "summary"})) {
      markup.push_back(answer->get<std::string>());
    } else {
      ctx.warning("answers", "missing answers; imported without references");
    }

    if (const json* sets = first_of({"short_answers", "short_answers_by_source"})) {
      example.short_answers = read_short_answers(*sets);
    } else if (!markup.empty()) {
      ctx.warning("short_answers", "missing short answers");
    }

    if (!parse_answers(example, markup, ctx)) return;
  } catch (const json::exception& error) {
    ctx.error("", std::string("schema violation: ") + error.what());
    return;
  }

  validate_example(example, ctx);
  if (!ctx.failed) out.push_back(std::move(example));
}

}  // namespace

LoadResult import_dataset(const std::string& path) {
  std::ifstream input(path);
  if (!input) {
    throw std::runtime_error("cannot open dataset file: " + path);
  }
  LoadResult result;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(input, line)) {
    ++line_number;
    if (line.empty()) continue;
    LineContext ctx{line_number, "", &result.issues, false};
    import_line(line, ctx, result.examples, result.examples.size());
  }
  return result;
}

std::string example_to_jsonl(const Example& example) {
  ordered_json doc;
  doc["id"] = example.id;
  doc["question"] = example.question;
  doc["origin"] = std::string(to_string(example.origin));
  doc["passages"] = ordered_json::array();
  for (const Passage& passage : example.passages) {
    doc["passages"].push_back({{"title", passage.title}, {"text", passage.text}});
  }
  doc["answers"] = ordered_json::array();
  for (const QuotedAnswer& answer : example.answers) {
    doc["answers"].push_back(serialize(answer));
  }
  doc["short_answers"] = example.short_answers;
  return doc.dump();
}

std::string issues_to_json(const std::vector<ValidationIssue>& issues) {
  ordered_json errors = ordered_json::array();
  ordered_json warnings = ordered_json::array();
  for (const ValidationIssue& issue : issues) {
    ordered_json entry{{"line", issue.line},
                       {"example_id", issue.example_id},
                       {"field", issue.field},
                       {"message", issue.message}};
    (issue.is_error ? errors : warnings).push_back(std::move(entry));
  }
  ordered_json doc{{"errors", std::move(errors)},
                   {"warnings", std::move(warnings)}};
  return doc.dump(2) + "\n";
}

std::string_view to_string(QuestionType type) {
  switch (type) {
    case QuestionType::What: return "what";
    case QuestionType::Who: return "who";
    case QuestionType::Where: return "where";
    case QuestionType::When: return "when";
    case QuestionType::How: return "how";
    case QuestionType::Which: return "which";
    case QuestionType::Why: return "why";
    case QuestionType::StandFor: return "stand_for";
    case QuestionType::Other: return "other";
  }
  return "other";
}

QuestionType question_type(std::string_view question) {
  std::string lower(question);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower.find("stand for") != std::string::npos) return QuestionType::StandFor;

  std::size_t begin = 0;
  while (begin < lower.size() &&
         std::isspace(static_cast<unsigned char>(lower[begin]))) {
    ++begin;
  }
  std::size_t end = begin;
  while (end < lower.size() &&
         !std::isspace(static_cast<unsigned char>(lower[end]))) {
    ++end;
  }
  std::string_view word(lower.data() + begin, end - begin);
  while (!word.empty() && std::ispunct(static_cast<unsigned char>(word.front()))) {
    word.remove_prefix(1);
  }
  while (!word.empty() && std::ispunct(static_cast<unsigned char>(word.back()))) {
    word.remove_suffix(1);
  }

  if (word == "what") return QuestionType::What;
  if (word == "who") return QuestionType::Who;
  if (word == "where") return QuestionType::Where;
  if (word == "when") return QuestionType::When;
  if (word == "how") return QuestionType::How;
  if (word == "which") return QuestionType::Which;
  if (word == "why") return QuestionType::Why;
  return QuestionType::Other;
}

int DatasetStats::max_sources() const {
  return sources_per_question.empty() ? 0 : sources_per_question.rbegin()->first;
}

DatasetStats compute_stats(const std::vector<Example>& examples) {
  DatasetStats stats;
  stats.example_count = examples.size();
  std::unordered_set<std::string> questions;
  for (const Example& example : examples) {
    questions.insert(example.question);
    stats.answer_count += example.answers.size();
    ++stats.by_origin[example.origin];
    ++stats.question_types[question_type(example.question)];
    ++stats.sources_per_question[example.source_count()];
    ++stats.references_per_question[static_cast<int>(example.answers.size())];
  }
  stats.unique_question_count = questions.size();
  return stats;
}

std::string stats_to_json(const DatasetStats& stats) {
  ordered_json doc;
  doc["example_count"] = stats.example_count;
  doc["unique_question_count"] = stats.unique_question_count;
  doc["answer_count"] = stats.answer_count;
  ordered_json origin;
  for (const auto& [key, count] : stats.by_origin) {
    origin[std::string(to_string(key))] = count;
  }
  doc["origin"] = std::move(origin);
  ordered_json types;
  for (const auto& [key, count] : stats.question_types) {
    types[std::string(to_string(key))] = count;
  }
  doc["question_types"] = std::move(types);
  ordered_json sources;
  for (const auto& [key, count] : stats.sources_per_question) {
    sources[std::to_string(key)] = count;
  }
  doc["sources_per_question"] = std::move(sources);
  doc["max_sources_per_question"] = stats.max_sources();
  ordered_json references;
  for (const auto& [key, count] : stats.references_per_question) {
    references[std::to_string(key)] = count;
  }
  doc["references_per_question"] = std::move(references);
  return doc.dump(2) + "\n";
}

std::string stats_to_table(const DatasetStats& stats) {
  std::ostringstream out;
  const auto row = [&out](const std::string& label, std::size_t value) {
    out << std::left << std::setw(26) << label << value << '\n';
  };
  row("examples", stats.example_count);
  row("unique questions", stats.unique_question_count);
  row("answers", stats.answer_count);
  for (const auto& [key, count] : stats.by_origin) {
    row("origin " + std::string(to_string(key)), count);
  }
  out << "question types\n";
  for (const auto& [key, count] : stats.question_types) {
    row("  " + std::string(to_string(key)), count);
  }
  out << "sources per question (max " << stats.max_sources() << ")\n";
  for (const auto& [key, count] : stats.sources_per_question) {
    row("  " + std::to_string(key), count);
  }
  out << "references per question\n";
  for (const auto& [key, count] : stats.references_per_question) {
    row("  " + std::to_string(key), count);
  }
  return out.str();
}

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

DatasetSplit split_dataset(const std::vector<Example>& examples,
                           SplitRatios ratios, std::uint64_t seed) {
  const double sum = ratios.train + ratios.validation + ratios.test;
  if (ratios.train < 0 || ratios.validation < 0 || ratios.test < 0 ||
      std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "split_dataset: ratios must be non-negative and sum to 1");
  }

  // Examples sharing any passage title must travel together.
  DisjointSet components(examples.size());
  std::unordered_map<std::string, std::size_t> title_owner;
  for (std::size_t i = 0; i < examples.size(); ++i) {
    for (const Passage& passage : examples[i].passages) {
      const auto [it, inserted] = title_owner.emplace(passage.title, i);
      if (!inserted) components.unite(i, it->second);
    }
  }
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < examples.size(); ++i) {
    by_root[components.find(i)].push_back(i);
  }
  std::vector<std::vector<std::size_t>> groups;
  groups.reserve(by_root.size());
  for (std::size_t i = 0; i < examples.size(); ++i) {
    auto it = by_root.find(i);
    if (it != by_root.end()) groups.push_back(std::move(it->second));
  }

  std::mt19937_64 rng(seed);
  detail::fisher_yates_shuffle(groups, rng);
  std::stable_sort(groups.begin(), groups.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });

  const double total = static_cast<double>(examples.size());
  const double targets[3] = {ratios.train * total, ratios.validation * total,
                             ratios.test * total};
  double counts[3] = {0, 0, 0};
  std::array<std::vector<std::size_t>, 3> assigned;
  for (const auto& group : groups) {
    int best = 0;
    double best_deficit = targets[0] - counts[0];
    for (int s = 1; s < 3; ++s) {
      const double deficit = targets[s] - counts[s];
      if (deficit > best_deficit) {
        best = s;
        best_deficit = deficit;
      }
    }
    counts[best] += static_cast<double>(group.size());
    assigned[best].insert(assigned[best].end(), group.begin(), group.end());
  }

  DatasetSplit split;
  std::vector<Example>* outputs[3] = {&split.train, &split.validation,
                                      &split.test};
  for (int s = 0; s < 3; ++s) {
    std::sort(assigned[s].begin(), assigned[s].end());
    for (std::size_t index : assigned[s]) {
      outputs[s]->push_back(examples[index]);
    }
  }
  return split;
}

}  // namespace semqa
