#include <benchmark/benchmark.h>

#include <map>

#include "superkac/format.hpp"
#include "superkac/primvec.hpp"

using namespace superkac;

namespace {

struct Case {
  Weight lambda;
  Construction con;
};

// Built once; the large case takes a few seconds to construct.
const Case& sample(int which) {
  static std::map<int, Case> cache;
  auto it = cache.find(which);
  if (it == cache.end()) {
    const char* weight = which == 0 ? "[1111;-1;10010]" : "[0020;0;0210]";
    const char* code = which == 0 ? "1 0" : "0 0 3/4 4";
    const Weight w = parse_weight(weight);
    it = cache.emplace(which, Case{w, construct(w, parse_code(code))}).first;
  }
  return it->second;
}

void BM_primitive_parallel(benchmark::State& state) {
  const Case& c = sample(static_cast<int>(state.range(0)));
  const KacRealization kac(c.lambda);
  for (auto _ : state) benchmark::DoNotOptimize(is_primitive(kac, c.con.vector, {true}));
  state.counters["terms"] = static_cast<double>(c.con.vector.size());
}

void BM_primitive_serial(benchmark::State& state) {
  const Case& c = sample(static_cast<int>(state.range(0)));
  const KacRealization kac(c.lambda);
  for (auto _ : state) benchmark::DoNotOptimize(is_primitive_serial(kac, c.con.vector));
  state.counters["terms"] = static_cast<double>(c.con.vector.size());
}

void BM_code_oracle_parallel(benchmark::State& state) {
  const NqcType t = nqc(parse_weight("[00020;0;0210]"));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_codes_exhaustive(t));
}

void BM_code_oracle_serial(benchmark::State& state) {
  const NqcType t = nqc(parse_weight("[00020;0;0210]"));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_codes_exhaustive_serial(t));
}

}  // namespace

BENCHMARK(BM_primitive_parallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_primitive_serial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_code_oracle_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_code_oracle_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
