#include "pisotlab/charpoly.hpp"
#include "pisotlab/cones.hpp"
#include "pisotlab/dynamics.hpp"
#include "pisotlab/seminorm.hpp"

#include <benchmark/benchmark.h>

using namespace pisotlab;

namespace {

Word long_word(Family f, int d, int len) {
  std::vector<int> letters;
  for (int i = 0; i < len; ++i) letters.push_back(1 + i % (f == Family::Brun ? 3 : d));
  return Word(f, d, letters);
}

void BM_CharPoly(benchmark::State& state) {
  const ExactMatrix m = product(long_word(Family::FullySubtractive, 4, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->Arg(8)->Arg(32);

void BM_PisotCheck(benchmark::State& state) {
  const ExactMatrix m = product(long_word(Family::FullySubtractive, 3, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(pisot_check(m));
}
BENCHMARK(BM_PisotCheck)->Arg(3)->Arg(8)->Arg(16);

void BM_HyperplaneSeminorm(benchmark::State& state) {
  const ExactMatrix b = transpose(product(long_word(Family::Brun, 3, 6)));
  const RatVector v{4, 3, 2};
  for (auto _ : state) benchmark::DoNotOptimize(hyperplane_seminorm(b, v));
}
BENCHMARK(BM_HyperplaneSeminorm);

void BM_ConeCertify(benchmark::State& state) {
  const ExactMatrix b = transpose(family_generator(Family::FullySubtractive, 3, 1));
  const Cone d = standard_domain(Family::FullySubtractive, 3);
  for (auto _ : state) benchmark::DoNotOptimize(cone_seminorm_certify(b, d, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ConeCertify)->Arg(12)->Arg(24);

void BM_LyapunovSteps(benchmark::State& state) {
  const BernoulliSpec spec = uniform_bernoulli(Family::Brun, 3, 7);
  const auto method = static_cast<LyapunovMethod>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(lyapunov_estimate(Family::Brun, 3, spec, state.range(0), 1, method, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LyapunovSteps)
    ->Args({100000, static_cast<long>(LyapunovMethod::exterior_power)})
    ->Args({100000, static_cast<long>(LyapunovMethod::seminorm_track)})
    ->Unit(benchmark::kMillisecond);

void BM_Orbit(benchmark::State& state) {
  const RatVector x{Rational(355, 113), Rational(22, 7), 1};
  for (auto _ : state) benchmark::DoNotOptimize(orbit(Family::Brun, x, 30));
}
BENCHMARK(BM_Orbit);

}  // namespace

BENCHMARK_MAIN();
