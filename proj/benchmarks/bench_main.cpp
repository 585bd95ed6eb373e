#include "rootlie/classify.hpp"
#include "rootlie/oracle.hpp"
#include "rootlie/rng.hpp"
#include "rootlie/structure.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using namespace rootlie;

Fan projective_space(int n) {
  std::vector<LatticeVector> rays;
  for (int i = 0; i < n; ++i) {
    LatticeVector r(static_cast<std::size_t>(n), 0);
    r[static_cast<std::size_t>(i)] = 1;
    rays.push_back(r);
  }
  rays.emplace_back(static_cast<std::size_t>(n), -1);
  return Fan(n, rays);
}

/// All elementary roots of projective n-space: the sl_{n+1} configuration.
DerivationSet projective_sl(int n) {
  const Fan fan = projective_space(n);
  std::vector<RootDerivation> ds;
  for (const auto& root : enumerate_roots(fan, Box::cube(n, 1))) {
    if (is_elementary_root(fan, root.e)) {
      ds.push_back(RootDerivation{CoeffMonomial::one(), root.ray, root.e});
    }
  }
  return DerivationSet(fan, ds);
}

DerivationSet infinite_pair() {
  return DerivationSet(Fan(2, {{1, 0}, {0, 1}}),
                       {RootDerivation{CoeffMonomial::one(), 0, {-1, 2}},
                        RootDerivation{CoeffMonomial::one(), 1, {1, -1}}});
}

void BM_EnumerateRoots(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Fan fan = projective_space(n);
  const Box box = Box::cube(n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_roots(fan, box));
  }
}
BENCHMARK(BM_EnumerateRoots)->DenseRange(2, 4);

void BM_CertificateDecision(benchmark::State& state) {
  const auto s = projective_sl(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(certificate_decision(s, Mode::OverK));
  }
  state.counters["derivations"] = static_cast<double>(s.size());
}
BENCHMARK(BM_CertificateDecision)->DenseRange(2, 5);

void BM_DecideWithCrossCheck(benchmark::State& state) {
  const auto s = projective_sl(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide_finite(s, Mode::OverK0));
  }
}
BENCHMARK(BM_DecideWithCrossCheck)->DenseRange(2, 3);

void BM_Structure(benchmark::State& state) {
  const auto s = projective_sl(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(semidirect_structure(s, Mode::OverK0));
  }
}
BENCHMARK(BM_Structure)->DenseRange(2, 3);

void BM_ClosureFinite(benchmark::State& state) {
  const auto s = projective_sl(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bracket_closure(s, Mode::OverK0));
  }
}
BENCHMARK(BM_ClosureFinite)->DenseRange(2, 3);

void BM_ClosureInfinite(benchmark::State& state) {
  const auto s = infinite_pair();
  const ClosureCaps caps{static_cast<std::size_t>(state.range(0)), 200};
  for (auto _ : state) {
    benchmark::DoNotOptimize(bracket_closure(s, Mode::OverK0, caps));
  }
}
BENCHMARK(BM_ClosureInfinite)->Arg(50)->Arg(100);

void BM_RandomDecide(benchmark::State& state) {
  Rng rng(7);
  std::vector<DerivationSet> sets;
  for (int i = 0; i < 64; ++i) {
    sets.push_back(random_derivation_set(rng));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide_finite(sets[i++ % sets.size()], Mode::OverK));
  }
}
BENCHMARK(BM_RandomDecide);

}  // namespace

BENCHMARK_MAIN();
