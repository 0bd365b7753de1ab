#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>

#include "cogsem/io.hpp"
#include "cogsem/model.hpp"
#include "cogsem/truth.hpp"

using namespace cogsem;

namespace {

ResolutionPower eye() {
  return ResolutionPower{"eye", {{"t", "time"}, {"s1", "place"}}, {{"s0", "point"}}, {{"seen", "scene"}}};
}

std::vector<PrimitiveObservation> corpus(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  auto pick = [&](int k) { return std::uniform_int_distribution<int>(0, k - 1)(rng); };
  std::vector<PrimitiveObservation> out;
  for (std::size_t i = 0; i < n; ++i) {
    PrimitiveObservation a;
    a.world.labels = {pick(2) ? "real" : "dream"};
    a.observer.labels = {"o" + std::to_string(pick(8))};
    a.observer.power = eye();
    a.observer.state = {ParamValue::integer(pick(64)), ParamValue::symbol("here")};
    a.observer.ac_im = pick(4) ? AcIm::actual : AcIm::imaginary;
    a.resolution_point = {ParamValue::tuple({pick(16), pick(16)})};
    a.result = ParamValue::symbol(pick(2) ? "red" : "blue");
    out.push_back(std::move(a));
  }
  return out;
}

void BM_ProcessAt(benchmark::State& state) {
  CognitiveModel m(corpus(static_cast<std::size_t>(state.range(0)), 1), {{"real", {2, {}}}, {"dream", {2, {}}}});
  RegionMap regions;
  for (TimePoint t = 10; t <= 40; ++t)
    for (std::int64_t x = 0; x < 8; ++x)
      for (std::int64_t y = 0; y < 8; ++y) regions[t].insert({x, y});
  for (auto _ : state) benchmark::DoNotOptimize(process_at(m, "real", Segment(10, 40), regions));
}
BENCHMARK(BM_ProcessAt)->Arg(1000)->Arg(10000);

void BM_ConsistencyChecks(benchmark::State& state) {
  auto a = corpus(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_observation_axiom(a));
    benchmark::DoNotOptimize(check_weak_consistency(a));
    benchmark::DoNotOptimize(check_strong_consistency(a));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ConsistencyChecks)->Arg(1000)->Arg(10000);

void BM_InterpretAndEval(benchmark::State& state) {
  auto base = std::filesystem::path(COGSEM_FIXTURES) / "trees";
  CognitiveModel m = load_model(base / "model_most.json");
  Lexicon lex = load_lexicon(base / "lexicon.json", m);
  Context ctx = load_context(base / "context.json", m);
  DepTree tree = load_tree(base / "tree_most.json");
  for (auto _ : state) {
    Interpretation in = interpret(tree, lex, ctx, m);
    benchmark::DoNotOptimize(eval_sentence(in, m, {}).value);
  }
}
BENCHMARK(BM_InterpretAndEval);

}  // namespace
BENCHMARK_MAIN();
