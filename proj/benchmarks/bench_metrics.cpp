#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "semqa/baselines.hpp"
#include "semqa/dataset.hpp"
#include "semqa/markup.hpp"
#include "semqa/metrics.hpp"
#include "semqa/mining.hpp"
#include "semqa/textnorm.hpp"

namespace {

using namespace semqa;

const std::vector<std::string>& vocabulary() {
  static const std::vector<std::string> kWords = {
      "turbine", "power",  "answer",  "source",  "city",   "released",
      "musical", "church", "band",    "energy",  "series", "film",
      "actor",   "located", "between", "watts",  "speed",  "north"};
  return kWords;
}

std::string synthetic_text(std::mt19937_64& rng, int words) {
  std::string out;
  for (int i = 0; i < words; ++i) {
    if (!out.empty()) out += ' ';
    out += vocabulary()[rng() % vocabulary().size()];
  }
  return out;
}

std::string synthetic_markup(std::mt19937_64& rng, int segments, int sources) {
  std::string out;
  for (int i = 0; i < segments; ++i) {
    if (rng() % 2 == 0) {
      out += synthetic_text(rng, 4) + " ";
    } else {
      out += "[ " + std::to_string(1 + rng() % sources) + " " +
             synthetic_text(rng, 6) + " ] ";
    }
  }
  return out;
}

void BM_NormalizeTokens(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const std::string text = synthetic_text(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize_tokens(text));
  }
  state.SetBytesProcessed(state.iterations() *
                          static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_NormalizeTokens)->Arg(20)->Arg(100)->Arg(500);

void BM_ParseLenient(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const std::string markup =
      synthetic_markup(rng, static_cast<int>(state.range(0)), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse(markup, ParseMode::Lenient, 5));
  }
}
BENCHMARK(BM_ParseLenient)->Arg(8)->Arg(32);

void BM_LcsLength(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const int n = static_cast<int>(state.range(0));
  TokenList x;
  TokenList y;
  for (int i = 0; i < n; ++i) {
    x.push_back(vocabulary()[rng() % vocabulary().size()]);
    y.push_back(vocabulary()[rng() % vocabulary().size()]);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(lcs_length(x, y));
  }
}
BENCHMARK(BM_LcsLength)->Arg(25)->Arg(100)->Arg(400);

void BM_RougeL(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const std::string hyp = synthetic_text(rng, 80);
  std::vector<std::string> refs;
  for (int r = 0; r < 3; ++r) refs.push_back(synthetic_text(rng, 80));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rouge_l(hyp, refs));
  }
}
BENCHMARK(BM_RougeL);

void BM_SemF1(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const int sources = static_cast<int>(state.range(0));
  const QuotedAnswer hyp =
      parse(synthetic_markup(rng, 10, sources), ParseMode::Lenient, sources)
          .answer;
  std::vector<QuotedAnswer> refs;
  for (int r = 0; r < 3; ++r) {
    refs.push_back(
        parse(synthetic_markup(rng, 10, sources), ParseMode::Lenient, sources)
            .answer);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(sem_f1(hyp, refs, sources));
  }
}
BENCHMARK(BM_SemF1)->Arg(2)->Arg(7);

void BM_Levenshtein(benchmark::State& state) {
  std::mt19937_64 rng(6);
  const std::string a = synthetic_text(rng, static_cast<int>(state.range(0)));
  const std::string b = synthetic_text(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(levenshtein(a, b));
  }
}
BENCHMARK(BM_Levenshtein)->Arg(5)->Arg(20);

void BM_TfidfRetrieval(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::vector<std::string> corpus;
  for (int i = 0; i < static_cast<int>(state.range(0)); ++i) {
    corpus.push_back(synthetic_text(rng, 9));
  }
  const std::string query = synthetic_text(rng, 9);
  for (auto _ : state) {
    const TfidfModel model = TfidfModel::fit(corpus);
    const TfidfModel::SparseVector vector = model.transform(query);
    double best = 0.0;
    for (std::size_t d = 0; d < corpus.size(); ++d) {
      best = std::max(best,
                      TfidfModel::cosine(vector, model.document_vector(d)));
    }
    benchmark::DoNotOptimize(best);
  }
}
BENCHMARK(BM_TfidfRetrieval)->Arg(100)->Arg(1000);

void BM_BootstrapCi(benchmark::State& state) {
  std::mt19937_64 rng(8);
  std::vector<double> values;
  for (int i = 0; i < 1000; ++i) {
    values.push_back(static_cast<double>(rng() % 100));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bootstrap_ci(values, static_cast<int>(state.range(0)), 0.95, 17));
  }
}
BENCHMARK(BM_BootstrapCi)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
