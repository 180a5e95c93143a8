// Command-line surface for the semqa library: scoring, baselines, format
// conversion, rendering, dataset statistics, splitting, mining, and prompt
// construction. All randomized behavior is seeded (--seed, or SEMQA_SEED).

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "semqa/baselines.hpp"
#include "semqa/dataset.hpp"
#include "semqa/markup.hpp"
#include "semqa/metrics.hpp"
#include "semqa/mining.hpp"
#include "semqa/prompting.hpp"
#include "semqa/transform.hpp"

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitJoinFailure = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SEMQA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring non-numeric SEMQA_SEED\n";
    }
  }
  return 0;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

void print_issues(const std::vector<semqa::ValidationIssue>& issues) {
  for (const semqa::ValidationIssue& issue : issues) {
    std::cerr << (issue.is_error ? "error" : "warning") << ": line "
              << issue.line;
    if (!issue.example_id.empty()) std::cerr << " (" << issue.example_id << ")";
    if (!issue.field.empty()) std::cerr << " [" << issue.field << "]";
    std::cerr << ": " << issue.message << "\n";
  }
}

semqa::LoadResult load_or_fail(const std::string& path) {
  semqa::LoadResult result = semqa::load_dataset(path);
  print_issues(result.issues);
  if (!result.ok()) {
    throw std::runtime_error("dataset '" + path + "' failed validation with " +
                             std::to_string(result.error_count()) + " errors");
  }
  return result;
}

struct Hypothesis {
  std::string id;
  std::string answer;
};

std::vector<Hypothesis> load_hypotheses(const std::string& path) {
  std::ifstream input(path);
  if (!input) throw std::runtime_error("cannot open hypotheses file: " + path);
  std::vector<Hypothesis> hypotheses;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(input, line)) {
    ++line_number;
    if (line.empty()) continue;
    json doc;
    try {
      doc = json::parse(line);
      Hypothesis hyp{doc.at("id").get<std::string>(),
                     doc.at("answer").get<std::string>()};
      if (!seen.insert(hyp.id).second) {
        throw std::runtime_error("duplicate hypothesis id '" + hyp.id + "'");
      }
      hypotheses.push_back(std::move(hyp));
    } catch (const json::exception& error) {
      throw std::runtime_error("hypotheses line " +
                               std::to_string(line_number) + ": " +
                               error.what());
    }
  }
  return hypotheses;
}

// ---------------------------------------------------------------- score ----

struct ScoreOptions {
  std::string hypotheses_path;
  std::string dataset_path;
  std::string out_path;
  std::string format = "json";
  int bootstrap = 0;
  double confidence = 0.95;
  std::uint64_t seed = 0;
  bool strict = false;
  bool per_answer_recall = false;
};

int run_score(const ScoreOptions& options) {
  const semqa::LoadResult data = load_or_fail(options.dataset_path);
  std::map<std::string, const semqa::Example*> by_id;
  for (const semqa::Example& example : data.examples) {
    by_id[example.id] = &example;
  }

  const std::vector<Hypothesis> hypotheses =
      load_hypotheses(options.hypotheses_path);
  std::vector<std::string> unmatched;
  for (const Hypothesis& hyp : hypotheses) {
    if (!by_id.count(hyp.id)) unmatched.push_back(hyp.id);
  }
  if (!unmatched.empty()) {
    std::cerr << "error: " << unmatched.size()
              << " hypothesis id(s) missing from the dataset:\n";
    for (const std::string& id : unmatched) std::cerr << "  " << id << "\n";
    return kExitJoinFailure;
  }
  if (hypotheses.size() < data.examples.size()) {
    std::cerr << "note: scoring " << hypotheses.size() << " of "
              << data.examples.size() << " dataset examples\n";
  }

  const semqa::SemRecGranularity granularity =
      options.per_answer_recall ? semqa::SemRecGranularity::PerAnswer
                                : semqa::SemRecGranularity::ReferenceBundle;
  std::vector<semqa::ExampleScores> rows;
  rows.reserve(hypotheses.size());
  for (const Hypothesis& hyp : hypotheses) {
    const semqa::Example& example = *by_id.at(hyp.id);
    const int k = example.source_count();
    const semqa::ParseResult parsed = semqa::parse(
        hyp.answer,
        options.strict ? semqa::ParseMode::Strict : semqa::ParseMode::Lenient,
        k);

    std::vector<std::string> reference_texts;
    for (const semqa::QuotedAnswer& reference : example.answers) {
      reference_texts.push_back(semqa::strip_marks(reference));
    }
    semqa::ExampleScores row;
    row.example_id = hyp.id;
    row.rouge_l =
        semqa::rouge_l(semqa::strip_marks(parsed.answer), reference_texts);
    row.sem_f1 = semqa::sem_f1(parsed.answer, example.answers, k);
    row.sem_rec =
        semqa::sem_rec(parsed.answer, example.short_answers, k, granularity);
    row.semqa = semqa::semqa_score(row.sem_f1, row.rouge_l);
    row.parse_warnings = static_cast<int>(parsed.warnings.size());
    rows.push_back(std::move(row));
  }

  const std::optional<int> resamples =
      options.bootstrap > 0 ? std::optional<int>(options.bootstrap)
                            : std::nullopt;
  const semqa::MetricReport report = semqa::make_report(
      std::move(rows), resamples, options.confidence, options.seed);
  write_output(options.out_path, options.format == "csv"
                                     ? semqa::report_to_csv(report)
                                     : semqa::report_to_json(report));
  return kExitOk;
}

// ------------------------------------------------------------- baseline ----

int run_baseline(const std::string& dataset_path, const std::string& mode,
                 int k, const std::string& out_path) {
  const semqa::LoadResult data = load_or_fail(dataset_path);
  const semqa::BaselineMode baseline_mode =
      mode == "tail" ? semqa::BaselineMode::Tail : semqa::BaselineMode::Lead;
  std::vector<const semqa::Example*> ordered;
  for (const semqa::Example& example : data.examples) {
    ordered.push_back(&example);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const semqa::Example* a, const semqa::Example* b) {
              return a->id < b->id;
            });
  std::string out;
  for (const semqa::Example* example : ordered) {
    const semqa::QuotedAnswer answer =
        semqa::lead_tail_baseline(*example, baseline_mode, k);
    ordered_json row{{"id", example->id}, {"answer", semqa::serialize(answer)}};
    out += row.dump() + "\n";
  }
  write_output(out_path, out);
  return kExitOk;
}

// -------------------------------------------------------------- convert ----

int run_convert(const std::string& to, const std::string& from,
                const std::string& in_path, const std::string& out_path,
                bool strict) {
  if (!to.empty() && !from.empty()) {
    throw std::runtime_error("--to and --from are mutually exclusive");
  }
  if (!from.empty()) {
    if (from != "quotesum-repo") {
      throw std::runtime_error("unknown import format '" + from + "'");
    }
    semqa::LoadResult imported = semqa::import_dataset(in_path);
    print_issues(imported.issues);
    if (!imported.ok()) {
      throw std::runtime_error("import failed with " +
                               std::to_string(imported.error_count()) +
                               " errors");
    }
    std::string out;
    for (const semqa::Example& example : imported.examples) {
      out += semqa::example_to_jsonl(example) + "\n";
    }
    write_output(out_path, out);
    return kExitOk;
  }
  if (to != "qsum-s") {
    throw std::runtime_error("unknown conversion target '" + to + "'");
  }
  std::vector<Hypothesis> rows = load_hypotheses(in_path);
  std::sort(rows.begin(), rows.end(),
            [](const Hypothesis& a, const Hypothesis& b) { return a.id < b.id; });
  std::string out;
  for (const Hypothesis& hyp : rows) {
    const semqa::ParseResult parsed = semqa::parse(
        hyp.answer,
        strict ? semqa::ParseMode::Strict : semqa::ParseMode::Lenient);
    ordered_json row{{"id", hyp.id},
                     {"answer", semqa::to_sentence_citations(parsed.answer)}};
    out += row.dump() + "\n";
  }
  write_output(out_path, out);
  return kExitOk;
}

// --------------------------------------------------------------- render ----

int run_render(const std::string& in_path, const std::string& target,
               const std::string& out_path) {
  std::vector<Hypothesis> answers = load_hypotheses(in_path);
  std::sort(answers.begin(), answers.end(),
            [](const Hypothesis& a, const Hypothesis& b) { return a.id < b.id; });
  std::string out;
  if (target == "html") {
    out += "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n";
    out += "<title>quoted answers</title>\n</head>\n<body>\n";
    for (const Hypothesis& hyp : answers) {
      const semqa::ParseResult parsed =
          semqa::parse(hyp.answer, semqa::ParseMode::Lenient);
      out += "<section>\n<h2>";
      for (char c : hyp.id) {
        switch (c) {
          case '&': out += "&amp;"; break;
          case '<': out += "&lt;"; break;
          case '>': out += "&gt;"; break;
          default: out += c;
        }
      }
      out += "</h2>\n";
      out += semqa::render(parsed.answer, semqa::RenderTarget::Html);
      out += "\n</section>\n";
    }
    out += "</body>\n</html>\n";
  } else {
    for (const Hypothesis& hyp : answers) {
      const semqa::ParseResult parsed =
          semqa::parse(hyp.answer, semqa::ParseMode::Lenient);
      out += hyp.id + "\t" +
             semqa::render(parsed.answer, semqa::RenderTarget::Ansi) + "\n";
    }
  }
  write_output(out_path, out);
  return kExitOk;
}

// ---------------------------------------------------------------- stats ----

int run_stats(const std::string& dataset_path, const std::string& format,
              const std::string& out_path, const std::string& report_path) {
  semqa::LoadResult data = semqa::load_dataset(dataset_path);
  print_issues(data.issues);
  if (!report_path.empty()) {
    write_output(report_path, semqa::issues_to_json(data.issues));
  }
  if (!data.ok()) {
    throw std::runtime_error("dataset '" + dataset_path +
                             "' failed validation with " +
                             std::to_string(data.error_count()) + " errors");
  }
  const semqa::DatasetStats stats = semqa::compute_stats(data.examples);
  write_output(out_path, format == "json" ? semqa::stats_to_json(stats)
                                          : semqa::stats_to_table(stats));
  return kExitOk;
}

// ---------------------------------------------------------------- split ----

int run_split(const std::string& dataset_path, double train, double validation,
              double test, std::uint64_t seed, const std::string& out_train,
              const std::string& out_validation, const std::string& out_test) {
  const semqa::LoadResult data = load_or_fail(dataset_path);
  const semqa::DatasetSplit split =
      semqa::split_dataset(data.examples, {train, validation, test}, seed);
  const auto dump = [](const std::vector<semqa::Example>& examples) {
    std::string out;
    for (const semqa::Example& example : examples) {
      out += semqa::example_to_jsonl(example) + "\n";
    }
    return out;
  };
  write_output(out_train, dump(split.train));
  write_output(out_validation, dump(split.validation));
  write_output(out_test, dump(split.test));
  return kExitOk;
}

// ----------------------------------------------------------------- mine ----

struct MineOptions {
  std::string triplets_path;
  std::string pair_scores_path;
  std::string out_path;
  std::string origin = "PAQ";
  double min_score = 0.5;
  std::size_t min_words = 4;
  double merge_threshold = 0.9;
  bool filter_overlap = false;
  double overlap_threshold = 0.4;
  std::size_t min_passages = 2;
  std::size_t quota = 0;
  std::uint64_t seed = 0;
};

std::vector<semqa::TripletRecord> load_triplets(const std::string& path) {
  std::ifstream input(path);
  if (!input) throw std::runtime_error("cannot open triplets file: " + path);
  std::vector<semqa::TripletRecord> records;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(input, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      const json doc = json::parse(line);
      semqa::TripletRecord record;
      record.question = doc.at("question").get<std::string>();
      record.passage = {doc.at("passage").at("title").get<std::string>(),
                        doc.at("passage").at("text").get<std::string>()};
      record.short_answer = doc.at("short_answer").get<std::string>();
      record.page_id = doc.at("page_id").get<std::string>();
      if (doc.contains("qa_score")) {
        const double score = doc.at("qa_score").get<double>();
        if (score < 0.0 || score > 1.0) {
          throw std::runtime_error("qa_score out of [0, 1]");
        }
        record.qa_score = score;
      }
      records.push_back(std::move(record));
    } catch (const std::exception& error) {
      throw std::runtime_error("triplets line " + std::to_string(line_number) +
                               ": " + error.what());
    }
  }
  return records;
}

semqa::PairScoreTable load_pair_scores(const std::string& path) {
  std::ifstream input(path);
  if (!input) throw std::runtime_error("cannot open pair-score file: " + path);
  semqa::PairScoreTable table;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(input, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      const json doc = json::parse(line);
      table.insert(doc.at("a").get<std::string>(),
                   doc.at("b").get<std::string>(),
                   doc.at("score").get<double>());
    } catch (const json::exception& error) {
      throw std::runtime_error("pair-score line " +
                               std::to_string(line_number) + ": " +
                               error.what());
    }
  }
  return table;
}

struct MinedQuestion {
  std::string question;
  std::vector<semqa::TripletRecord> kept;
};

int run_mine(const MineOptions& options) {
  const std::vector<semqa::TripletRecord> triplets =
      load_triplets(options.triplets_path);
  semqa::PairScoreTable pair_scores;
  const semqa::PairScoreTable* scores = nullptr;
  if (!options.pair_scores_path.empty()) {
    pair_scores = load_pair_scores(options.pair_scores_path);
    scores = &pair_scores;
  }
  const semqa::DedupOptions dedup_options{options.min_score,
                                          options.min_words};

  // Group candidates by question text, first appearance order.
  std::vector<std::string> question_order;
  std::map<std::string, std::vector<semqa::TripletRecord>> by_question;
  for (const semqa::TripletRecord& record : triplets) {
    if (!by_question.count(record.question)) {
      question_order.push_back(record.question);
    }
    by_question[record.question].push_back(record);
  }

  // Per-question dedup; questions that cannot yield two passages drop out.
  std::vector<MinedQuestion> survivors;
  for (const std::string& question : question_order) {
    std::vector<semqa::TripletRecord> kept =
        semqa::dedup_answers(by_question[question], scores, dedup_options);
    if (kept.size() < options.min_passages) continue;
    survivors.push_back({question, std::move(kept)});
  }

  // Merge near-duplicate questions and re-filter each merged pool.
  std::vector<MinedQuestion> merged;
  if (!survivors.empty()) {
    std::vector<std::string> questions;
    for (const MinedQuestion& survivor : survivors) {
      questions.push_back(survivor.question);
    }
    for (const std::vector<std::size_t>& group :
         semqa::merge_questions(questions, options.merge_threshold)) {
      // Representative: highest mean qa_score over kept answers; ties and
      // missing scores fall back to the lexicographically smallest question.
      std::string representative;
      double best_mean = -1.0;
      std::vector<semqa::TripletRecord> pool;
      for (const std::size_t member : group) {
        const MinedQuestion& survivor = survivors[member];
        double sum = 0.0;
        for (const semqa::TripletRecord& record : survivor.kept) {
          sum += record.qa_score.value_or(0.0);
        }
        const double mean =
            survivor.kept.empty()
                ? 0.0
                : sum / static_cast<double>(survivor.kept.size());
        if (mean > best_mean ||
            (mean == best_mean && survivor.question < representative)) {
          best_mean = mean;
          representative = survivor.question;
        }
        pool.insert(pool.end(), survivor.kept.begin(), survivor.kept.end());
      }
      std::vector<semqa::TripletRecord> kept =
          group.size() == 1 ? std::move(pool)
                            : semqa::dedup_answers(pool, scores, dedup_options);
      if (kept.size() < options.min_passages) continue;
      merged.push_back({representative, std::move(kept)});
    }
  }

  // Optional near-duplicate passage filter (the natural-question path).
  if (options.filter_overlap) {
    for (MinedQuestion& mined : merged) {
      std::vector<semqa::TripletRecord> filtered;
      for (const semqa::TripletRecord& record : mined.kept) {
        bool drop = false;
        for (const semqa::TripletRecord& earlier : filtered) {
          if (semqa::passage_overlap(record.passage, earlier.passage) >
              options.overlap_threshold) {
            drop = true;
            break;
          }
        }
        if (!drop) filtered.push_back(record);
      }
      mined.kept = std::move(filtered);
    }
    std::erase_if(merged, [&](const MinedQuestion& mined) {
      return mined.kept.size() < options.min_passages;
    });
  }

  // Balanced sampling across (question type, answer count) strata.
  if (options.quota > 0) {
    std::vector<semqa::StratumKey> strata;
    for (const MinedQuestion& mined : merged) {
      strata.push_back({semqa::question_type(mined.question),
                        static_cast<int>(mined.kept.size())});
    }
    std::vector<MinedQuestion> sampled;
    for (const std::size_t index :
         semqa::balanced_sample(strata, options.quota, options.seed)) {
      sampled.push_back(std::move(merged[index]));
    }
    merged = std::move(sampled);
  }

  // Deterministic emission order and ids.
  std::sort(merged.begin(), merged.end(),
            [](const MinedQuestion& a, const MinedQuestion& b) {
              return a.question < b.question;
            });
  std::string out;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    const MinedQuestion& mined = merged[i];
    char id[32];
    std::snprintf(id, sizeof(id), "mined-%04zu", i);
    ordered_json passages = ordered_json::array();
    ordered_json short_answers = ordered_json::array();
    for (const semqa::TripletRecord& record : mined.kept) {
      passages.push_back({{"title", record.passage.title},
                          {"text", record.passage.text}});
      short_answers.push_back(ordered_json::array({record.short_answer}));
    }
    ordered_json row{{"id", id},
                     {"question", mined.question},
                     {"origin", options.origin},
                     {"passages", std::move(passages)},
                     {"short_answers",
                      ordered_json::array({std::move(short_answers)})}};
    out += row.dump() + "\n";
  }
  write_output(options.out_path, out);
  return kExitOk;
}

// --------------------------------------------------------------- prompt ----

struct PromptOptions {
  std::string train_path;
  std::string query_path;
  std::string query_id;
  std::string out_path;
  std::string format = "qsum";
  std::string method = "tfidf";
  std::string order = "similar-last";
  std::string scores_path;
  std::size_t shots = 2;
  std::uint64_t seed = 0;
};

int run_prompt(const PromptOptions& options) {
  const semqa::LoadResult train = load_or_fail(options.train_path);

  semqa::LoadResult query_data = semqa::import_dataset(options.query_path);
  if (!query_data.ok()) {
    print_issues(query_data.issues);
    throw std::runtime_error("query file failed validation");
  }
  const semqa::Example* query = nullptr;
  if (!options.query_id.empty()) {
    for (const semqa::Example& example : query_data.examples) {
      if (example.id == options.query_id) query = &example;
    }
    if (!query) {
      throw std::runtime_error("query id '" + options.query_id +
                               "' not found in " + options.query_path);
    }
  } else if (query_data.examples.size() == 1) {
    query = &query_data.examples.front();
  } else {
    throw std::runtime_error(
        "query file holds " + std::to_string(query_data.examples.size()) +
        " examples; pick one with --query-id");
  }

  std::map<std::string, double> scores;
  const std::map<std::string, double>* scores_ptr = nullptr;
  if (!options.scores_path.empty()) {
    std::ifstream input(options.scores_path);
    if (!input) {
      throw std::runtime_error("cannot open scores file: " +
                               options.scores_path);
    }
    std::string line;
    while (std::getline(input, line)) {
      if (line.empty()) continue;
      const json doc = json::parse(line);
      scores[doc.at("id").get<std::string>()] = doc.at("score").get<double>();
    }
    scores_ptr = &scores;
  }

  std::vector<semqa::Example> exemplars = semqa::retrieve_exemplars(
      query->question, train.examples, options.shots,
      options.method == "precomputed" ? semqa::RetrievalMethod::Precomputed
                                      : semqa::RetrievalMethod::Tfidf,
      scores_ptr);
  if (options.order == "similar-first") {
    std::reverse(exemplars.begin(), exemplars.end());
  }
  const std::string prompt = semqa::build_prompt(
      exemplars, *query,
      options.format == "qsum-s" ? semqa::PromptFormat::QSumS
                                 : semqa::PromptFormat::QSum,
      options.seed);
  write_output(options.out_path, prompt);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SEMQA quoted-answer toolkit"};
  app.require_subcommand(1);
  const std::uint64_t seed_default = default_seed();

  // score
  ScoreOptions score;
  score.seed = seed_default;
  CLI::App* score_cmd =
      app.add_subcommand("score", "Score hypotheses against a dataset");
  score_cmd->add_option("--hypotheses", score.hypotheses_path,
                        "Hypotheses JSONL ({\"id\",\"answer\"})")
      ->required();
  score_cmd->add_option("--dataset", score.dataset_path, "Dataset JSONL")
      ->required();
  score_cmd->add_option("--bootstrap", score.bootstrap,
                        "Bootstrap resamples for confidence intervals");
  score_cmd->add_option("--confidence", score.confidence,
                        "Bootstrap confidence level");
  score_cmd->add_option("--seed", score.seed, "Bootstrap seed");
  score_cmd->add_option("--out", score.out_path, "Output path (default stdout)");
  score_cmd->add_option("--format", score.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  CLI::Option* strict_flag = score_cmd->add_flag(
      "--strict", score.strict, "Strict hypothesis parsing");
  bool score_lenient = false;
  score_cmd->add_flag("--lenient", score_lenient,
                      "Lenient hypothesis parsing (the default)")
      ->excludes(strict_flag);
  score_cmd->add_flag("--per-answer-recall", score.per_answer_recall,
                      "Score short-answer recall per answer string instead of "
                      "per reference bundle");

  // baseline
  std::string baseline_dataset, baseline_mode = "lead", baseline_out;
  int baseline_k = 1;
  CLI::App* baseline_cmd =
      app.add_subcommand("baseline", "Emit lead/tail sentence baselines");
  baseline_cmd->add_option("--dataset", baseline_dataset, "Dataset JSONL")
      ->required();
  baseline_cmd->add_option("--mode", baseline_mode, "lead or tail")
      ->check(CLI::IsMember({"lead", "tail"}));
  baseline_cmd->add_option("--k", baseline_k, "Sentences per source")
      ->check(CLI::PositiveNumber);
  baseline_cmd->add_option("--out", baseline_out, "Output hypotheses JSONL");

  // convert
  std::string convert_to, convert_from, convert_in, convert_out;
  bool convert_strict = false;
  CLI::App* convert_cmd = app.add_subcommand(
      "convert", "Convert answer formats or import external datasets");
  convert_cmd->add_option("--to", convert_to,
                          "Conversion target (qsum-s: sentence citations)");
  convert_cmd->add_option("--from", convert_from,
                          "Import source format (quotesum-repo)");
  convert_cmd->add_option("--in", convert_in, "Input file")->required();
  convert_cmd->add_option("--out", convert_out, "Output path");
  convert_cmd->add_flag("--strict", convert_strict, "Strict answer parsing");

  // render
  std::string render_in, render_target = "ansi", render_out;
  CLI::App* render_cmd =
      app.add_subcommand("render", "Render quoted answers with highlights");
  render_cmd->add_option("--in", render_in, "Answers JSONL")->required();
  render_cmd->add_option("--target", render_target, "ansi or html")
      ->check(CLI::IsMember({"ansi", "html"}));
  render_cmd->add_option("--out", render_out, "Output path");

  // stats
  std::string stats_dataset, stats_format = "table", stats_out, stats_report;
  CLI::App* stats_cmd =
      app.add_subcommand("stats", "Dataset statistics");
  stats_cmd->add_option("--dataset", stats_dataset, "Dataset JSONL")
      ->required();
  stats_cmd->add_option("--format", stats_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  stats_cmd->add_option("--out", stats_out, "Output path");
  stats_cmd->add_option("--validation-report", stats_report,
                        "Write the load validation report as JSON");

  // split
  std::string split_dataset_path, split_train_out, split_validation_out,
      split_test_out;
  double split_train = 0.6, split_validation = 0.07, split_test = 0.33;
  std::uint64_t split_seed = seed_default;
  CLI::App* split_cmd = app.add_subcommand(
      "split", "Split a dataset with page-disjoint test assignment");
  split_cmd->add_option("--dataset", split_dataset_path, "Dataset JSONL")
      ->required();
  split_cmd->add_option("--train-ratio", split_train, "Train fraction");
  split_cmd->add_option("--validation-ratio", split_validation,
                        "Validation fraction");
  split_cmd->add_option("--test-ratio", split_test, "Test fraction");
  split_cmd->add_option("--seed", split_seed, "Shuffle seed");
  split_cmd->add_option("--out-train", split_train_out, "Train output")
      ->required();
  split_cmd
      ->add_option("--out-validation", split_validation_out,
                   "Validation output")
      ->required();
  split_cmd->add_option("--out-test", split_test_out, "Test output")
      ->required();

  // mine
  MineOptions mine;
  mine.seed = seed_default;
  CLI::App* mine_cmd = app.add_subcommand(
      "mine", "Run the dataset-construction filters over candidate triplets");
  mine_cmd->add_option("--triplets", mine.triplets_path, "Triplets JSONL")
      ->required();
  mine_cmd->add_option("--pair-scores", mine.pair_scores_path,
                       "Semantic pair-score sidecar JSONL");
  mine_cmd->add_option("--out", mine.out_path, "Mined questions JSONL");
  mine_cmd->add_option("--origin", mine.origin, "Origin tag for output rows")
      ->check(CLI::IsMember({"PAQ", "NQ"}));
  mine_cmd->add_option("--min-score", mine.min_score,
                       "Minimum qa_score to keep a candidate");
  mine_cmd->add_option("--min-words", mine.min_words,
                       "Minimum words in a short answer");
  mine_cmd->add_option("--merge-threshold", mine.merge_threshold,
                       "TF-IDF cosine threshold for merging questions");
  mine_cmd->add_flag("--filter-overlap", mine.filter_overlap,
                     "Drop passages overlapping an earlier kept passage");
  mine_cmd->add_option("--overlap-threshold", mine.overlap_threshold,
                       "Word intersection ratio threshold");
  mine_cmd->add_option("--min-passages", mine.min_passages,
                       "Minimum kept passages per question");
  mine_cmd->add_option("--quota", mine.quota,
                       "Balanced sample size (0 keeps everything)");
  mine_cmd->add_option("--seed", mine.seed, "Sampling seed");

  // prompt
  PromptOptions prompt;
  prompt.seed = seed_default;
  CLI::App* prompt_cmd =
      app.add_subcommand("prompt", "Build a few-shot prompt for a query");
  prompt_cmd->add_option("--train", prompt.train_path, "Training dataset JSONL")
      ->required();
  prompt_cmd->add_option("--query", prompt.query_path, "Query example JSONL")
      ->required();
  prompt_cmd->add_option("--query-id", prompt.query_id,
                         "Example id inside --query");
  prompt_cmd->add_option("--n", prompt.shots, "Number of exemplars");
  prompt_cmd->add_option("--format", prompt.format, "qsum or qsum-s")
      ->check(CLI::IsMember({"qsum", "qsum-s"}));
  prompt_cmd->add_option("--method", prompt.method, "tfidf or precomputed")
      ->check(CLI::IsMember({"tfidf", "precomputed"}));
  prompt_cmd->add_option("--order", prompt.order,
                         "Exemplar ordering relative to the query")
      ->check(CLI::IsMember({"similar-last", "similar-first"}));
  prompt_cmd->add_option("--scores", prompt.scores_path,
                         "Precomputed similarity JSONL ({\"id\",\"score\"})");
  prompt_cmd->add_option("--seed", prompt.seed, "Reference-choice seed");
  prompt_cmd->add_option("--out", prompt.out_path, "Output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (score_cmd->parsed()) return run_score(score);
    if (baseline_cmd->parsed()) {
      return run_baseline(baseline_dataset, baseline_mode, baseline_k,
                          baseline_out);
    }
    if (convert_cmd->parsed()) {
      return run_convert(convert_to, convert_from, convert_in, convert_out,
                         convert_strict);
    }
    if (render_cmd->parsed()) {
      return run_render(render_in, render_target, render_out);
    }
    if (stats_cmd->parsed()) {
      return run_stats(stats_dataset, stats_format, stats_out, stats_report);
    }
    if (split_cmd->parsed()) {
      return run_split(split_dataset_path, split_train, split_validation,
                       split_test, split_seed, split_train_out,
                       split_validation_out, split_test_out);
    }
    if (mine_cmd->parsed()) return run_mine(mine);
    if (prompt_cmd->parsed()) return run_prompt(prompt);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitError;
  }
  return kExitOk;
}
