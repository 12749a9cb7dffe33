#include <benchmark/benchmark.h>

#include <random>

#include "abps/abps.hpp"

using namespace abps;

static void BM_SpringerTable(benchmark::State& state) {
  const auto g = springer::ComplexGroup::sp(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::size_t n = 0;
    for (const auto& u : springer::unipotent_classes(g)) {
      const auto a = springer::component_group(g, u);
      for (const auto& eta : springer::characters(a)) {
        benchmark::DoNotOptimize(springer::generalized_springer(g, u, eta));
        ++n;
      }
    }
    state.counters["pairs"] = static_cast<double>(n);
  }
}
BENCHMARK(BM_SpringerTable)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_CuspidalTriples(benchmark::State& state) {
  const auto g = springer::ComplexGroup::so(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(springer::cuspidal_triples(g));
}
BENCHMARK(BM_CuspidalTriples)->Arg(9)->Arg(16);

static void BM_SmithNormalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-9, 9);
  combi::IntMatrix a(n, std::vector<std::int64_t>(n));
  for (auto& r : a)
    for (auto& x : r) x = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(combi::smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(3)->Arg(6);

static void BM_SpectralEQ(benchmark::State& state) {
  const auto a = extquot::weyl_bk(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extquot::spectral_eq(a));
}
BENCHMARK(BM_SpectralEQ)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_MuSp4(benchmark::State& state) {
  const auto g = langlands::PadicGroup::parse("Sp4");
  const auto cat = langlands::Catalogue::defaults();
  inertial::InertialTriple j;
  const auto zeta = langlands::WFLine::from_decl(*cat.find("zeta"));
  j.lines = {zeta, zeta};
  j.core.summands = {{langlands::WFLine::trivial(), 1}};
  const auto data = inertial::build_inertial(g, j);
  for (auto _ : state) benchmark::DoNotOptimize(inertial::mu(data));
}
BENCHMARK(BM_MuSp4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
