#include <benchmark/benchmark.h>

#include "presclass/cayley_graph.hpp"
#include "presclass/classify.hpp"
#include "presclass/coset_enumeration.hpp"
#include "presclass/descriptor.hpp"
#include "presclass/dicyclic_theory.hpp"
#include "presclass/element_expr.hpp"
#include "presclass/families.hpp"
#include "presclass/iso.hpp"

using namespace presclass;

static void BM_ClassifyDicyclicPairs(benchmark::State& state) {
  const FiniteGroup g = dicyclic(static_cast<int>(state.range(0)));
  ClassifyOptions options;
  options.minimal_only = true;
  for (auto _ : state) benchmark::DoNotOptimize(classify(g, 2, options).class_count());
}
BENCHMARK(BM_ClassifyDicyclicPairs)->Arg(3)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_ClassifyOrbitCollapse(benchmark::State& state) {
  const FiniteGroup g = dicyclic(static_cast<int>(state.range(0)));
  ClassifyOptions options;
  options.minimal_only = true;
  options.orbit_collapse = true;
  for (auto _ : state) benchmark::DoNotOptimize(classify(g, 2, options).class_count());
}
BENCHMARK(BM_ClassifyOrbitCollapse)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_ClassifySymmetricTriples(benchmark::State& state) {
  const FiniteGroup g = parse_group("perm:4:(1,2);(1,2,3,4)");
  ClassifyOptions options;
  options.minimal_only = true;
  for (auto _ : state) benchmark::DoNotOptimize(classify(g, 3, options).class_count());
}
BENCHMARK(BM_ClassifySymmetricTriples)->Unit(benchmark::kMillisecond);

static void BM_DirectedIso(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FiniteGroup g = dicyclic(n);
  const CayleyGraph lhs = build_cayley_graph(g, parse_sequence(g, "a*x,x"));
  const CayleyGraph rhs = build_cayley_graph(g, parse_sequence(g, "a^3*x,a^2*x"));
  for (auto _ : state) benchmark::DoNotOptimize(directed_iso(lhs, rhs).has_value());
}
BENCHMARK(BM_DirectedIso)->Arg(3)->Arg(32)->Arg(128);

static void BM_ToddCoxeterClassical(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Presentation p = parse_presentation(classical_presentation_text(n));
  for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(p).order());
}
BENCHMARK(BM_ToddCoxeterClassical)->Arg(4)->Arg(16)->Arg(64);
BENCHMARK_MAIN();
