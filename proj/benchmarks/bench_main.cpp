#include <benchmark/benchmark.h>

#include "dyb/document.hpp"
#include "dyb/groupoid.hpp"
#include "dyb/rational.hpp"

#include "../tests/helpers.hpp"

using namespace dyb;

static void BM_VerifyDynGroup(benchmark::State& state) {
  DynGroup g = fx::three_group();
  for (auto _ : state) benchmark::DoNotOptimize(verify_dyn_group(g).passed);
}
BENCHMARK(BM_VerifyDynGroup);

static void BM_VerifyPostGroup(benchmark::State& state) {
  PostGroup p = fx::three_post();
  for (auto _ : state) benchmark::DoNotOptimize(verify_post_group(p).passed);
}
BENCHMARK(BM_VerifyPostGroup);

static void BM_CheckDybe(benchmark::State& state) {
  Braiding r = braided_to_solution(post_to_braided(fx::three_post()));
  for (auto _ : state) benchmark::DoNotOptimize(check_dybe(r).passed);
}
BENCHMARK(BM_CheckDybe);

static void BM_VerifyMatchedPair(benchmark::State& state) {
  MatchedPair mp = braided_as_pair(post_to_braided(fx::three_post()));
  for (auto _ : state) benchmark::DoNotOptimize(verify_matched_pair(mp).passed);
}
BENCHMARK(BM_VerifyMatchedPair);

static void BM_DoubleGroup(benchmark::State& state) {
  MatchedPair mp = braided_as_pair(post_to_braided(fx::three_post()));
  for (auto _ : state) benchmark::DoNotOptimize(double_group(mp).n());
}
BENCHMARK(BM_DoubleGroup);

static void BM_FunctorQ(benchmark::State& state) {
  DynGroup g = fx::three_group();
  for (auto _ : state) benchmark::DoNotOptimize(functor_q(g).num_morphisms());
}
BENCHMARK(BM_FunctorQ);

static void BM_DiagramCommutes(benchmark::State& state) {
  BraidedGroup b = post_to_braided(fx::three_post());
  for (auto _ : state) benchmark::DoNotOptimize(diagram_commutes(b));
}
BENCHMARK(BM_DiagramCommutes);

static void BM_EnumerateGroups(benchmark::State& state) {
  SearchSpec spec;
  spec.kind = StructureKind::dynamical_group;
  spec.elem_size = static_cast<int>(state.range(0));
  spec.lambda_size = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_count(spec));
}
BENCHMARK(BM_EnumerateGroups)->Args({2, 2})->Args({3, 2})->Args({3, 3});

static void BM_EnumeratePosts(benchmark::State& state) {
  SearchSpec spec;
  spec.kind = StructureKind::post_group;
  spec.elem_size = 3;
  spec.lambda_size = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_count(spec));
}
BENCHMARK(BM_EnumeratePosts)->Arg(2)->Arg(3);

static void BM_RationalSuite(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(run_rational_suite({"example_2_6", 100, 7}).passed);
}
BENCHMARK(BM_RationalSuite);

static void BM_ParseSerialize(benchmark::State& state) {
  std::string text = serialize_document(post_to_doc(fx::three_post()));
  for (auto _ : state) {
    StructureDocument doc = parse_document(text);
    benchmark::DoNotOptimize(serialize_document(doc).size());
  }
}
BENCHMARK(BM_ParseSerialize);

BENCHMARK_MAIN();
