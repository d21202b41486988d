#include <benchmark/benchmark.h>

#include <random>

#include "frobgrow/decomposer.hpp"
#include "frobgrow/frobenius.hpp"
#include "frobgrow/groebner.hpp"
#include "frobgrow/hq.hpp"
#include "frobgrow/sequences.hpp"

using namespace frobgrow;

namespace {

SequenceSpec standard(PrimeModulus p) {
  return SequenceSpec(UniPoly::constant(p, 1), UniPoly::var(p), UniPoly::constant(p, 1));
}

void BM_PSeq(benchmark::State& state) {
  auto spec = standard(PrimeModulus(3));
  for (auto _ : state) benchmark::DoNotOptimize(p_seq(spec, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_PSeq)->Arg(25)->Arg(243);

void BM_Factor(benchmark::State& state) {
  PrimeModulus p(2);
  UniPoly f = p_seq(standard(p), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(uni_factor(f, 1));
}
BENCHMARK(BM_Factor)->Arg(30)->Arg(126);

void BM_HqKatzman(benchmark::State& state) {
  PrimeModulus p(3);
  auto fam = katzman_family(p);
  auto q = PrimePower::make(p, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h_q(*fam.ring, q, current_budget(), 1));
}
BENCHMARK(BM_HqKatzman)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_HqSs5(benchmark::State& state) {
  PrimeModulus p(3);
  auto fam = ss5_family(p);
  auto q = PrimePower::make(p, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h_q(*fam.ring, q, current_budget(), 1));
}
BENCHMARK(BM_HqSs5)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_WitnessColon(benchmark::State& state) {
  PrimeModulus p(static_cast<std::uint64_t>(state.range(0)));
  auto q = PrimePower::make(p, 2);
  for (auto _ : state) {
    // fresh ideals each round so cached bases are not reused
    auto f = ss5_family(p);
    benchmark::DoNotOptimize(witness_colon(f, q));
  }
}
BENCHMARK(BM_WitnessColon)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  PrimeModulus p(3);
  auto q = PrimePower::make(p, static_cast<unsigned>(state.range(0)));
  auto h = ss_hq_closed_form(standard(p), q);
  for (auto _ : state) benchmark::DoNotOptimize(stable_decomposition(ss5_family(p), q, h));
}
BENCHMARK(BM_Decompose)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

// Basis of I^[q] : h under three orders: the default (weighted grevlex, t last),
// grevlex with t last but unweighted, and grevlex with t first.
void BM_OrderChoice(benchmark::State& state) {
  PrimeModulus p(3);
  auto q = PrimePower::make(p, 2);
  const auto h = ss_hq_closed_form(standard(p), q);
  for (auto _ : state) {
    state.PauseTiming();
    auto fam = ss5_family(p);
    const auto& ring = fam.ring->ring();
    Ideal F = frobenius_generators(fam.ideal, q);
    Ideal Q = colon(F, from_uni(h, ring, 0));
    std::vector<std::size_t> rank = ring->default_rank();
    OrderPtr order;
    switch (state.range(0)) {
      case 0: order = ring->default_order(); break;
      case 1: order = std::make_shared<const MonomialOrder>(MonomialOrder::grevlex(rank)); break;
      default: {
        std::vector<std::size_t> t_first{0};
        for (auto v : rank)
          if (v != 0) t_first.push_back(v);
        order = std::make_shared<const MonomialOrder>(MonomialOrder::grevlex(t_first));
      }
    }
    Ideal fresh(Q.ring_spec(), Q.generators());
    state.ResumeTiming();
    benchmark::DoNotOptimize(fresh.basis(order));
  }
}
BENCHMARK(BM_OrderChoice)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
