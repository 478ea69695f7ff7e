#include <benchmark/benchmark.h>

#include "cclone/classify.hpp"

using namespace cclone;

namespace {

Relation clausal_rel(int a, int b, int n) {
  return build_clausal(ClausalSpec(DomainSize(n), {a}, {b}));
}

void BM_preserves_binary_vs_sigma_n4(benchmark::State& state) {
  const DomainSize n(4);
  const Relation target = sigma(1, 2, n);
  const Operation f = Operation::projection(n, 2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(preserves(f, target));
}
BENCHMARK(BM_preserves_binary_vs_sigma_n4);

void BM_pol1_clausal_n5(benchmark::State& state) {
  const DomainSize n(5);
  const std::vector<Relation> q{clausal_rel(2, 1, 5)};
  for (auto _ : state) {
    auto ops = pol_k(n, q, 1);
    benchmark::DoNotOptimize(ops);
  }
}
BENCHMARK(BM_pol1_clausal_n5);

void BM_pol2_clausal_n3(benchmark::State& state) {
  const DomainSize n(3);
  const std::vector<Relation> q{clausal_rel(1, 0, 3)};
  for (auto _ : state) {
    auto ops = pol_k(n, q, 2);
    benchmark::DoNotOptimize(ops);
  }
}
BENCHMARK(BM_pol2_clausal_n3);

// the completeness-walk hot path: pol_2 of an arity-4 clausal relation
void BM_pol2_arity4_clausal_n3(benchmark::State& state) {
  const DomainSize n(3);
  const std::vector<Relation> q{build_clausal(ClausalSpec(n, {1, 1}, {1, 1}))};
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_pol_k(n, q, 2, [&](const Operation&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_pol2_arity4_clausal_n3);

void BM_family_search_miss_n4(benchmark::State& state) {
  const MaxCCloneParams params(1, 0, DomainSize(4));
  const Relation designated = two_block_equivalence(0, DomainSize(4));
  for (auto _ : state) {
    auto result = family_search(params, designated);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_family_search_miss_n4);

void BM_enumerate_bounded_orders(benchmark::State& state) {
  const DomainSize n(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto orders = enumerate_class(RelationClass::BoundedOrder, n);
    benchmark::DoNotOptimize(orders);
  }
}
BENCHMARK(BM_enumerate_bounded_orders)->Arg(4)->Arg(5);

void BM_verify_theorem(benchmark::State& state) {
  const DomainSize n(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto report = verify_theorem(n);
    benchmark::DoNotOptimize(report.ok);
  }
}
BENCHMARK(BM_verify_theorem)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
