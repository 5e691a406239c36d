#include <benchmark/benchmark.h>

#include <random>

#include "chroma/contract.hpp"
#include "chroma/interp.hpp"
#include "chroma/random_diagram.hpp"
#include "chroma/rules.hpp"

using namespace chroma;

namespace {

Tensor<CycloNum> random_tensor(std::mt19937& rng, std::vector<int> labels) {
  Tensor<CycloNum> t{std::move(labels), {}};
  std::uniform_int_distribution<int> coef(-3, 3);
  for (std::size_t i = 0; i < (std::size_t{1} << t.labels.size()); ++i)
    t.data.push_back(CycloNum(coef(rng), coef(rng), coef(rng), coef(rng), static_cast<unsigned>(i % 2)));
  return t;
}

// Two rank-r tensors sharing half their legs.
void contract_pair(benchmark::State& state, bool parallel) {
  const int r = static_cast<int>(state.range(0));
  std::vector<int> la, lb;
  for (int i = 0; i < r; ++i) la.push_back(i);
  for (int i = r / 2; i < r / 2 + r; ++i) lb.push_back(i);
  std::mt19937 rng(1);
  auto a = random_tensor(rng, la), b = random_tensor(rng, lb);
  for (auto _ : state) {
    auto c = parallel ? contract_pair_parallel(a, b) : contract_pair_serial(a, b);
    benchmark::DoNotOptimize(c.data.data());
  }
}

void BM_ContractSerial(benchmark::State& s) { contract_pair(s, false); }
void BM_ContractParallel(benchmark::State& s) { contract_pair(s, true); }
BENCHMARK(BM_ContractSerial)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ContractParallel)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

void eval_random(benchmark::State& state, bool parallel) {
  std::mt19937 rng(2);
  RandomOptions o;
  o.max_nodes = 8;
  o.max_ports = 3;
  o.extra_edges = 4;
  std::vector<Diagram> ds;
  for (int i = 0; i < 32; ++i) ds.push_back(random_diagram(rng, Flavour::RGB, o));
  for (auto _ : state)
    for (const auto& d : ds) benchmark::DoNotOptimize(eval(d, {parallel}));
}

void BM_EvalSerial(benchmark::State& s) { eval_random(s, false); }
void BM_EvalParallel(benchmark::State& s) { eval_random(s, true); }
BENCHMARK(BM_EvalSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvalParallel)->Unit(benchmark::kMillisecond);

void soundness(benchmark::State& state, bool parallel) {
  const auto& rules = load_library(Flavour::RGB).rules;
  for (auto _ : state) benchmark::DoNotOptimize(check_soundness(rules, 3, parallel));
}

void BM_SoundnessSerial(benchmark::State& s) { soundness(s, false); }
void BM_SoundnessParallel(benchmark::State& s) { soundness(s, true); }
BENCHMARK(BM_SoundnessSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SoundnessParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
