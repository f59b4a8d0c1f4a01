#include <benchmark/benchmark.h>

#include <random>

#include "twist/cover.hpp"
#include "twist/exactla.hpp"
#include "twist/seifert.hpp"

using namespace twist;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) ? Execution::parallel : Execution::serial;
}

LambdaMatrix wide_matrix(std::size_t rows, std::size_t cols) {
  std::mt19937_64 g(7);
  std::uniform_int_distribution<long> coeff(-3, 3);
  LambdaMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = LaurentPoly(0, {coeff(g), coeff(g), coeff(g)});
  return m;
}

void BM_MaximalMinors(benchmark::State& state) {
  LambdaMatrix m = wide_matrix(3, 14);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_minor_gcd(m, mode(state)));
  state.counters["minors"] = static_cast<double>(binomial(14, 3));
}
BENCHMARK(BM_MaximalMinors)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_LiftAction(benchmark::State& state) {
  // Conjugation by a word in ker(alpha), lifted to the 60-sheeted A5 cover.
  Word a = Word::letter(0), b = Word::letter(1), c = Word::letter(2);
  FiniteHom alpha(GroupTarget::alternating(5),
                  {parse_cycles("(1 2 3)", 5), parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(2 4)(3 5)", 5)});
  Word w = (a.power(3) * b.power(5) * c.power(2) * b * a.power(3) * b.inverse()).power(40);
  FreeEndo f(3, {w * a * w.inverse(), w * b * w.inverse(), w * c * w.inverse()});
  CoverGraph cover = build_cover(3, alpha);
  for (auto _ : state) benchmark::DoNotOptimize(lift_action_matrix(cover, f, mode(state)));
  state.counters["h1_rank"] = static_cast<double>(cover.h1_rank());
}
BENCHMARK(BM_LiftAction)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_ResultantSweep(benchmark::State& state) {
  SeifertMatrix s(IntMatrix{{1, 1, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}});
  for (auto _ : state) benchmark::DoNotOptimize(resultant_sweep(s, 30, mode(state)));
}
BENCHMARK(BM_ResultantSweep)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
