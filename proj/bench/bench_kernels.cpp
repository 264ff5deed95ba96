// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "runo/builtin.hpp"
#include "runo/identity.hpp"
#include "runo/logic.hpp"
#include "runo/structure.hpp"
#include "runo/variety.hpp"

using namespace runo;

namespace {

const FiniteAlgebra& square_a5() {
  static const FiniteAlgebra a = power(builtin(5), 2);
  return a;
}

// Holds everywhere, so the sweep never exits early.
const Equation& long_identity() {
  static const Equation e = parse_equation("x /\\ (y \\/ z) /\\ w = (x /\\ y /\\ w) \\/ (x /\\ z /\\ w)");
  return e;
}

void BM_identity_serial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(holds_serial(square_a5(), long_identity()).holds);
  s.SetItemsProcessed(s.iterations() * 65536);
}

void BM_identity_parallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(holds(square_a5(), long_identity()).holds);
  s.SetItemsProcessed(s.iterations() * 65536);
}

void BM_validity_serial(benchmark::State& s) {
  const Formula f = parse_formula("(p /\\ q ->h r) ->h (p ->h (q ->h r))");
  const Matrix m = matrix(square_a5());
  for (auto _ : s) benchmark::DoNotOptimize(is_valid_serial(f, m).valid);
}

void BM_validity_parallel(benchmark::State& s) {
  const Formula f = parse_formula("(p /\\ q ->h r) ->h (p ->h (q ->h r))");
  const Matrix m = matrix(square_a5());
  for (auto _ : s) benchmark::DoNotOptimize(is_valid(f, m).valid);
}

void BM_clone_serial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(binary_clone_size_serial(builtin(1)));
}

void BM_clone_parallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(binary_clone_size(builtin(1)));
}

void BM_enumerate_serial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(enumerate_runo1_serial(4).size());
}

void BM_enumerate_parallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(enumerate_runo1(4).size());
}

void BM_bases_serial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(verify_bases_serial().errata());
}

void BM_bases_parallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(verify_bases().errata());
}

}  // namespace

BENCHMARK(BM_identity_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_identity_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_validity_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_validity_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_clone_serial)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_clone_parallel)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_enumerate_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bases_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bases_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
