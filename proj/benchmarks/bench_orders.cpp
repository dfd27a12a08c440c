#include <benchmark/benchmark.h>

#include "pathord/dp.hpp"
#include "pathord/enumerate.hpp"
#include "pathord/instances.hpp"
#include "pathord/orders.hpp"
#include "pathord/search.hpp"

using namespace pathord;
namespace in = pathord::instances;

namespace {

struct Chain {
  ReductionTriple a = triple_from_algebra(in::chain_weights());
  ReductionTriple b = triple_from_precedence(in::chain_precedence());
};

// f^n(a) vs f^n(b): base_calls grows linearly for the flat comparator.
void BM_FastGwpoTower(benchmark::State& st) {
  Chain c;
  Term s = in::tower(st.range(0), "a"), t = in::tower(st.range(0), "b");
  std::size_t calls = 0;
  for (auto _ : st) {
    ComparisonStats stats;
    benchmark::DoNotOptimize(gwpo_fast_gt(s, t, c.a.pair, c.b.pair, &stats));
    calls = stats.total();
  }
  st.counters["base_calls"] = static_cast<double>(calls);
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_FastGwpoTower)->RangeMultiplier(2)->Range(4, 256)->Complexity();

void BM_RecursiveGwpoTower(benchmark::State& st) {
  Chain c;
  Term s = in::tower(st.range(0), "a"), t = in::tower(st.range(0), "b");
  std::size_t calls = 0;
  for (auto _ : st) {
    ComparisonStats stats;
    benchmark::DoNotOptimize(gwpo_gt(s, t, c.a.pair, c.b.pair, &stats));
    calls = stats.total();
  }
  st.counters["base_calls"] = static_cast<double>(calls);
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_RecursiveGwpoTower)->RangeMultiplier(2)->Range(4, 256)->Complexity();

void BM_MgwpoPredecessor(benchmark::State& st) {
  ReductionTriple a = triple_from_algebra(in::predecessor_weights());
  ReductionTriple b = triple_from_algebra(in::predecessor_levels());
  Trs trs = in::predecessor_trs();
  for (auto _ : st) {
    for (const Rule& r : trs.rules) benchmark::DoNotOptimize(mgwpo_gt(r.lhs, r.rhs, a, b));
  }
}
BENCHMARK(BM_MgwpoPredecessor);

void BM_EnumerateUniverse(benchmark::State& st) {
  Signature sig{Symbol("f", 2), Symbol("g", 1), Symbol("a", 0), Symbol("b", 0)};
  std::size_t n = 0;
  for (auto _ : st) {
    auto u = enum_terms(sig, {"x", "y"}, st.range(0));
    n = u.size();
    benchmark::DoNotOptimize(u);
  }
  st.counters["terms"] = static_cast<double>(n);
}
BENCHMARK(BM_EnumerateUniverse)->DenseRange(3, 6);

void BM_SearchPredecessor(benchmark::State& st) {
  Obligation ob = direct_obligation(in::predecessor_trs());
  SearchSpace sp = SearchSpace::defaults(Template::mgwpo_direct);
  for (auto _ : st) benchmark::DoNotOptimize(find_certificate(ob, sp));
}
BENCHMARK(BM_SearchPredecessor)->Unit(benchmark::kMillisecond);

void BM_VerifyZantema(benchmark::State& st) {
  Obligation ob = dp_obligation(in::zantema_trs());
  Certificate c = in::zantema_certificate();
  for (auto _ : st) benchmark::DoNotOptimize(verify_certificate(ob, c));
}
BENCHMARK(BM_VerifyZantema)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
