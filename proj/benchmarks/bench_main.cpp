#include <benchmark/benchmark.h>

#include "nvs/matrix.hpp"
#include "nvs/ninth.hpp"
#include "nvs/relations.hpp"
#include "nvs/ssyt.hpp"
#include "nvs/zeta_trunc.hpp"

namespace {

nvs::Matrix<nvs::Rational> random_rational(int n, std::uint64_t seed) {
  nvs::RationalSampler s(seed);
  nvs::Matrix<nvs::Rational> m(static_cast<std::size_t>(n),
                               static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = s.next_rational();
  return m;
}

void DetBareiss(benchmark::State& state) {
  auto m = random_rational(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(nvs::det_bareiss(m));
}
BENCHMARK(DetBareiss)->Arg(4)->Arg(6)->Arg(8);

void DetCofactor(benchmark::State& state) {
  auto m = random_rational(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(nvs::det_cofactor(m));
}
BENCHMARK(DetCofactor)->Arg(4)->Arg(6);

void PolyProduct(benchmark::State& state) {
  nvs::NinthContext ctx{10, 5};
  nvs::SymbolicXPlus x(10);
  nvs::SkewShape shape = nvs::SkewShape::parse("3,3,3");
  nvs::SparsePoly s = nvs::s_minor(ctx, shape, 5, x);
  for (auto _ : state) benchmark::DoNotOptimize(s * s);
}
BENCHMARK(PolyProduct);

void SsytEnumeration(benchmark::State& state) {
  nvs::SkewShape shape = nvs::SkewShape::parse("3,3,3");
  for (auto _ : state)
    benchmark::DoNotOptimize(nvs::ssyt_count(shape, static_cast<int>(state.range(0))));
}
BENCHMARK(SsytEnumeration)->Arg(4)->Arg(6);

void ZetaTruncDp(benchmark::State& state) {
  nvs::ZWord w{1, 2, 3};
  for (auto _ : state)
    benchmark::DoNotOptimize(nvs::zeta_trunc_hp(w, state.range(0), false));
}
BENCHMARK(ZetaTruncDp)->Arg(1000)->Arg(10000);

void RelationExchange(benchmark::State& state) {
  nvs::RelationInstance inst = nvs::plucker_quadratic(
      nvs::Partition({3, 2, 2, 1}), 2, nvs::PluckerVariant::Row);
  for (auto _ : state)
    benchmark::DoNotOptimize(nvs::verify_relation_exact(inst));
}
BENCHMARK(RelationExchange);

}  // namespace

BENCHMARK_MAIN();
