#include <benchmark/benchmark.h>

#include "ipsd/expm.hpp"
#include "ipsd/models.hpp"
#include "ipsd/rng.hpp"
#include "ipsd/simulate.hpp"

namespace {

void BM_Sep2jGenerator(benchmark::State& state) {
  ipsd::Kernel k = ipsd::chain_kernel(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto g = ipsd::sep2j_generator(k, 2, 4);
    benchmark::DoNotOptimize(g.space().size());
  }
}
BENCHMARK(BM_Sep2jGenerator)->Arg(3)->Arg(5);

void BM_DenseExpm(benchmark::State& state) {
  ipsd::Kernel k = ipsd::chain_kernel(3);
  auto g = ipsd::sip_generator(k, 2, static_cast<int>(state.range(0)));
  ipsd::RealMatrix m = ipsd::to_real(g.dense());
  for (auto _ : state) {
    auto e = ipsd::expm(m, ipsd::Real(1));
    benchmark::DoNotOptimize(e.data.data());
  }
}
BENCHMARK(BM_DenseExpm)->Arg(3)->Arg(5);

void BM_Gillespie(benchmark::State& state) {
  ipsd::Kernel k = ipsd::chain_kernel(5);
  ipsd::RateView view = ipsd::sip_rate_view(k, 2);
  ipsd::Config init{3, 0, 0, 0, 3};
  ipsd::CounterRng rng(7, 0);
  for (auto _ : state) {
    auto tr = ipsd::gillespie(view, init, 1.0, rng);
    benchmark::DoNotOptimize(tr.n_events);
  }
}
BENCHMARK(BM_Gillespie);

}  // namespace

BENCHMARK_MAIN();
