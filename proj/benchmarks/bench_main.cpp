#include <benchmark/benchmark.h>

#include <random>

#include "pquot/driver.hpp"

using namespace pquot;

namespace {

const VarList kXY{Var::x, Var::y};

void BM_FieldMul(benchmark::State& state) {
  const FieldCtx& K = field_make(static_cast<unsigned>(state.range(0)));
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::uint64_t> d(1, K.size() - 1);
  std::vector<std::uint32_t> v(1024);
  for (auto& x : v) x = static_cast<std::uint32_t>(d(rng));
  std::uint32_t acc = 1;
  for (auto _ : state) {
    for (auto x : v) acc = K.mul(acc, x) | 1u;
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}
BENCHMARK(BM_FieldMul)->Arg(3)->Arg(8)->Arg(16)->Arg(24)->Arg(32);

void BM_PolyGcd(benchmark::State& state) {
  const FieldCtx& K = field_make(2);
  const MultiPoly c = parse_poly("x^2*y + g*y^3 + x + 1", K, kXY);
  const MultiPoly a = parse_poly("x^3 + y^2*x + g^2", K, kXY) * c, b = parse_poly("y^4 + x*y + g", K, kXY) * c;
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolyGcd);

void BM_LocalQuotientDim(benchmark::State& state) {
  const FieldCtx& K = field_make(1);
  const std::array<MultiPoly, 2> gens{parse_poly("x*y^2", K, kXY), parse_poly("x^2+y^3", K, kXY)};
  const std::array<FieldElement, 2> origin{FieldElement::zero(K), FieldElement::zero(K)};
  for (auto _ : state) benchmark::DoNotOptimize(local_quotient_dim(gens, origin));
}
BENCHMARK(BM_LocalQuotientDim);

void BM_ResolveE8(benchmark::State& state) {
  const MultiPoly f = parse_poly("X^3+Y^5", field_make(1), {Var::X, Var::Y});
  for (auto _ : state) benchmark::DoNotOptimize(resolve_dual_graph(f));
}
BENCHMARK(BM_ResolveE8);

void BM_Configuration(benchmark::State& state) {
  static const std::array<std::pair<const char*, const char*>, 4> rows{
      {{"x^2", "y^2"}, {"x^2+x", "y^2+y"}, {"x^2+x*y^2", "y^3"}, {"x*y^2", "x^2+y^3"}}};
  const auto& [F, G] = rows[static_cast<std::size_t>(state.range(0))];
  const FieldCtx& K = field_make(1);
  const PolyDerivation d = PolyDerivation::make(Chart::U0, parse_poly(F, K, kXY), parse_poly(G, K, kXY));
  for (auto _ : state) benchmark::DoNotOptimize(configuration(d));
}
BENCHMARK(BM_Configuration)->DenseRange(0, 3);

void BM_SurveyGF2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(survey(field_make(1)));
  state.SetItemsProcessed(state.iterations() * 128);
}
BENCHMARK(BM_SurveyGF2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
