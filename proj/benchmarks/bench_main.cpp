#include <benchmark/benchmark.h>

#include "nonevade/certifier.hpp"
#include "nonevade/chain_game.hpp"
#include "nonevade/generate.hpp"
#include "nonevade/oracles.hpp"
#include "nonevade/order_complex.hpp"

using namespace nonevade;

namespace {

Lattice boolean(std::int64_t n) { return generate("boolean", {.n = n}); }

void BM_CertifyBoolean(benchmark::State& state) {
  const auto l = boolean(state.range(0));
  const auto x = l.atoms().front();
  for (auto _ : state) benchmark::DoNotOptimize(certify(l, x));
}
BENCHMARK(BM_CertifyBoolean)->DenseRange(2, 5);

void BM_CertifyPartition(benchmark::State& state) {
  const auto l = generate("partition", {.n = state.range(0)});
  const auto x = l.atoms().front();
  for (auto _ : state) benchmark::DoNotOptimize(certify(l, x));
}
BENCHMARK(BM_CertifyPartition)->DenseRange(3, 5);

void BM_VerifyAndCollapse(benchmark::State& state) {
  const auto l = boolean(state.range(0));
  const auto x = l.atoms().front();
  const auto c = order_complex(interior_without_complements(l, x));
  const auto cert = certify(l, x).certificate;
  for (auto _ : state) benchmark::DoNotOptimize(extract_collapses(*cert, c));
}
BENCHMARK(BM_VerifyAndCollapse)->DenseRange(2, 5);

void BM_BruteNonevasive(benchmark::State& state) {
  const auto l = generate("chain", {.n = state.range(0) + 2});
  const auto c = order_complex(interior(l));
  for (auto _ : state) benchmark::DoNotOptimize(brute_nonevasive(c, 64));
}
BENCHMARK(BM_BruteNonevasive)->DenseRange(4, 10, 2);

void BM_BruteNonevasiveDivisor(benchmark::State& state) {
  const auto l = generate("divisor", {.n = state.range(0)});
  const auto x = l.atoms().front();
  const auto c = order_complex(interior_without_complements(l, x));
  for (auto _ : state) benchmark::DoNotOptimize(brute_nonevasive(c));
}
BENCHMARK(BM_BruteNonevasiveDivisor)->Arg(24)->Arg(36)->Arg(60);

void BM_ExhaustiveCheck(benchmark::State& state) {
  const auto l = boolean(4);
  const auto x = l.atoms().front();
  const auto ground = interior_without_complements(l, x).labels();
  const auto s = compile_strategy(*certify(l, x).certificate, ground);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_check(*s, ground, l));
  state.counters["ground"] = static_cast<double>(ground.size());
}
BENCHMARK(BM_ExhaustiveCheck);

}  // namespace
BENCHMARK_MAIN();
