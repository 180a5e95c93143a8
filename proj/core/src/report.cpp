#include <algorithm>
#include <cstdio>

#include "json.hpp"
#include "semqa/metrics.hpp"

namespace semqa {

MetricReport make_report(std::vector<ExampleScores> rows,
                         std::optional<int> bootstrap_resamples,
                         double confidence, std::uint64_t seed) {
  MetricReport report;
  std::sort(rows.begin(), rows.end(),
            [](const ExampleScores& a, const ExampleScores& b) {
              return a.example_id < b.example_id;
            });
  report.per_example = std::move(rows);

  const std::size_t n = report.per_example.size();
  if (n > 0) {
    for (const ExampleScores& row : report.per_example) {
      report.aggregate.rouge_l += row.rouge_l;
      report.aggregate.sem_f1 += row.sem_f1;
      report.aggregate.sem_rec += row.sem_rec;
      report.aggregate.semqa += row.semqa;
      report.aggregate.parse_warnings += row.parse_warnings;
    }
    report.aggregate.rouge_l /= static_cast<double>(n);
    report.aggregate.sem_f1 /= static_cast<double>(n);
    report.aggregate.sem_rec /= static_cast<double>(n);
    report.aggregate.semqa /= static_cast<double>(n);
  }

  if (bootstrap_resamples && n > 0) {
    const auto values_of = [&](auto member) {
      std::vector<double> values;
      values.reserve(n);
      for (const ExampleScores& row : report.per_example) {
        values.push_back(row.*member);
      }
      return values;
    };
    const std::pair<const char*, double ExampleScores::*> metrics[] = {
        {"rouge_l", &ExampleScores::rouge_l},
        {"sem_f1", &ExampleScores::sem_f1},
        {"sem_rec", &ExampleScores::sem_rec},
        {"semqa", &ExampleScores::semqa},
    };
    std::uint64_t metric_seed = seed;
    for (const auto& [name, member] : metrics) {
      report.intervals[name] = bootstrap_ci(
          values_of(member), *bootstrap_resamples, confidence, metric_seed++);
    }
  }
  return report;
}

std::string report_to_json(const MetricReport& report) {
  nlohmann::ordered_json doc;
  doc["per_example"] = nlohmann::ordered_json::array();
  for (const ExampleScores& row : report.per_example) {
    doc["per_example"].push_back({{"example_id", row.example_id},
                                  {"rouge_l", row.rouge_l},
                                  {"sem_f1", row.sem_f1},
                                  {"sem_rec", row.sem_rec},
                                  {"semqa", row.semqa},
                                  {"parse_warnings", row.parse_warnings}});
  }
  doc["aggregate"] = {{"rouge_l", report.aggregate.rouge_l},
                      {"sem_f1", report.aggregate.sem_f1},
                      {"sem_rec", report.aggregate.sem_rec},
                      {"semqa", report.aggregate.semqa},
                      {"parse_warnings", report.aggregate.parse_warnings}};
  if (!report.intervals.empty()) {
    nlohmann::ordered_json intervals;
    for (const auto& [metric, bounds] : report.intervals) {
      intervals[metric] = {bounds.first, bounds.second};
    }
    doc["intervals"] = std::move(intervals);
  }
  return doc.dump(2) + "\n";
}

namespace {

std::string fixed2(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return buffer;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string report_to_csv(const MetricReport& report) {
  std::string out = "example_id,rouge_l,sem_f1,sem_rec,semqa,parse_warnings\n";
  for (const ExampleScores& row : report.per_example) {
    out += csv_field(row.example_id);
    out += ',' + fixed2(row.rouge_l) + ',' + fixed2(row.sem_f1) + ',' +
           fixed2(row.sem_rec) + ',' + fixed2(row.semqa) + ',' +
           std::to_string(row.parse_warnings) + '\n';
  }
  out += "aggregate," + fixed2(report.aggregate.rouge_l) + ',' +
         fixed2(report.aggregate.sem_f1) + ',' +
         fixed2(report.aggregate.sem_rec) + ',' +
         fixed2(report.aggregate.semqa) + ',' +
         std::to_string(report.aggregate.parse_warnings) + '\n';
  return out;
}

}  // namespace semqa
