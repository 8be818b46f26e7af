#include <benchmark/benchmark.h>

#include <random>

#include "enriques/existence.hpp"
#include "enriques/reduction.hpp"

using namespace enriques;

namespace {

std::vector<MukaiVector> sample_vectors(int count, int rank_bound, int coeff_bound,
                                        bool even_only) {
  std::mt19937_64 g(12);
  auto pick = [&g](long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(g);
  };
  std::vector<MukaiVector> out;
  while (static_cast<int>(out.size()) < count) {
    Int r = Int(pick(1, rank_bound));
    if (even_only && parity(r) != 0) continue;
    Int s = Int(pick(-8, 8));
    if (parity(r) != parity(s)) s += Int(1);
    NSClass c;
    c.d1 = Int(pick(-coeff_bound, coeff_bound));
    c.d2 = Int(pick(-coeff_bound, coeff_bound));
    for (int i = 0; i < 8; ++i) c.e.c[i] = Int(pick(-coeff_bound, coeff_bound));
    MukaiVector v(r, c, s);
    if (is_primitive(v)) out.push_back(v);
  }
  return out;
}

void BM_MukaiPairing(benchmark::State& state) {
  auto vs = sample_vectors(64, 8, 2, false);
  size_t i = 0;
  for (auto _ : state) {
    const MukaiVector& a = vs[i % vs.size()];
    const MukaiVector& b = vs[(i + 7) % vs.size()];
    benchmark::DoNotOptimize(mukai_pairing(a, b).get());
    ++i;
  }
}
BENCHMARK(BM_MukaiPairing);

void BM_ReduceEven(benchmark::State& state) {
  auto vs = sample_vectors(256, static_cast<int>(state.range(0)), 1, true);
  size_t i = 0;
  for (auto _ : state) {
    CanonicalForm c = reduce_even(vs[i % vs.size()]);
    benchmark::DoNotOptimize(c.vector.s.get());
    ++i;
  }
}
BENCHMARK(BM_ReduceEven)->Arg(4)->Arg(8);

void BM_ReduceOdd(benchmark::State& state) {
  auto vs = sample_vectors(256, 7, 1, false);
  std::vector<MukaiVector> odd;
  for (const auto& v : vs)
    if (parity(v.r) == 1) odd.push_back(v);
  size_t i = 0;
  for (auto _ : state) {
    CanonicalForm c = reduce_odd(odd[i % odd.size()]);
    benchmark::DoNotOptimize(c.vector.s.get());
    ++i;
  }
}
BENCHMARK(BM_ReduceOdd);

void BM_ExistsUnnodal(benchmark::State& state) {
  auto vs = sample_vectors(256, 8, 2, false);
  SurfaceContext ctx;
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exists_unnodal(vs[i % vs.size()], ctx).nonempty);
    ++i;
  }
}
BENCHMARK(BM_ExistsUnnodal);

void BM_TraceReplay(benchmark::State& state) {
  auto vs = sample_vectors(64, 8, 1, true);
  std::vector<MoveTrace> traces;
  for (const auto& v : vs) traces.push_back(reduce_even(v).trace);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(replay(traces[i % traces.size()]).s.get());
    ++i;
  }
}
BENCHMARK(BM_TraceReplay);

}  // namespace

BENCHMARK_MAIN();
