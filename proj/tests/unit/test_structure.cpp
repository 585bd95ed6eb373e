#include "fixtures.hpp"

#include "rootlie/errors.hpp"
#include "rootlie/marking.hpp"
#include "rootlie/oracle.hpp"
#include "rootlie/rng.hpp"
#include "rootlie/structure.hpp"

#include <doctest.h>

using namespace rootlie;
using fixtures::c;
using fixtures::d;
using fixtures::sym;

namespace {

DerivationSet two_planes() {
  const Fan fan(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {-1, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                    {0, 0, -1, -1}});
  const auto sl3 = fixtures::sl3();
  std::vector<RootDerivation> ds;
  for (const auto& x : sl3.derivations()) {
    ds.push_back(d(c(1), x.rho, {x.e[0], x.e[1], 0, 0}));
    ds.push_back(d(c(2), x.rho + 3, {0, 0, x.e[0], x.e[1]}));
  }
  return DerivationSet(fan, ds);
}

DerivationSet two_cycle_plus_leftover() {
  return DerivationSet(fixtures::affine(3),
                       {d(c(1), 0, {-1, 1, 0}), d(c(1), 1, {1, -1, 0}), d(c(1), 2, {0, 0, -1})});
}

}  // namespace

TEST_CASE("maximal cyclic partition") {
  const auto p = maximal_cyclic_partition(fixtures::sl3());
  CHECK(p.blocks == std::vector<std::vector<std::size_t>>{{0, 1, 2, 3, 4, 5}});
  CHECK(p.leftover.empty());

  const Fan fan(3, {{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}});
  const auto sl3 = fixtures::sl3();
  std::vector<RootDerivation> ds;
  for (const auto& x : sl3.derivations()) {
    ds.push_back(d(x.phi, x.rho, {x.e[0], x.e[1], 0}));
  }
  ds.push_back(d(c(1), 3, {0, 0, -1}));
  const DerivationSet extended(fan, ds);
  const auto q = maximal_cyclic_partition(extended);
  CHECK(q.blocks.size() == 1);
  CHECK(q.leftover == std::vector<std::size_t>{6});
  const auto r = semidirect_structure(extended, Mode::OverK0);
  CHECK(r.summand_ranks == std::vector<std::size_t>{3});
  CHECK(r.nilpotent_dim == 1);
  CHECK(r.total_dim == 9);

  const DerivationSet edgeless(fixtures::affine(2), {d(c(1), 0, {-1, 0}), d(c(1), 1, {0, -1})});
  const auto e = maximal_cyclic_partition(edgeless);
  CHECK(e.blocks.empty());
  CHECK(e.leftover == std::vector<std::size_t>{0, 1});

  CHECK_THROWS_AS(maximal_cyclic_partition(fixtures::a2_pair()), PreconditionError);
}

TEST_CASE("ordering of acyclic families") {
  const DerivationSet single(fixtures::a2(), {d(c(1), 0, {-1, 0})});
  const auto one = compute_ordering(single.fan(), single.derivations());
  CHECK(one.kappa == std::vector<RayIndex>{0});
  CHECK(one.alpha == std::vector<std::size_t>{1});

  const DerivationSet pair(fixtures::a2(), {d(c(1), 0, {-1, 0}), d(c(1), 1, {1, -1})});
  const auto two = compute_ordering(pair.fan(), pair.derivations());
  CHECK(two.alpha[0] > two.alpha[1]);
  CHECK(two.kappa == std::vector<RayIndex>{1, 0});
  CHECK(two.profile(pair.fan(), {1, -1}) == std::vector<std::int64_t>{-1, 1});

  const DerivationSet edgeless(fixtures::affine(3), {d(c(1), 2, {0, 0, -1}), d(c(1), 0, {-1, 0, 0}),
                                                     d(c(1), 1, {0, -1, 0})});
  const auto three = compute_ordering(edgeless.fan(), edgeless.derivations());
  CHECK(three.kappa == std::vector<RayIndex>{0, 1, 2});
  CHECK(three.alpha == std::vector<std::size_t>{3, 1, 2});

  CHECK_THROWS_AS(compute_ordering(fixtures::p2(), fixtures::sl3().derivations()),
                  PreconditionError);
}

TEST_CASE("appropriate vectors") {
  CHECK(is_appropriate(std::vector<std::int64_t>{0, -1, 3}));
  CHECK_FALSE(is_appropriate(std::vector<std::int64_t>{-1, -1, 0}));
  CHECK(is_appropriate(std::vector<std::int64_t>{0, 0, -1}));
  CHECK_FALSE(is_appropriate(std::vector<std::int64_t>{0, 0, 0}));
  CHECK_FALSE(is_appropriate(std::vector<std::int64_t>{1, -1}));
}

TEST_CASE("nilpotent closure") {
  const auto a2 = fixtures::a2();
  const std::vector<RootDerivation> single{d(c(1), 0, {-1, 0})};
  CHECK(nilpotent_closure(a2, single, Mode::OverK0).dim == 1);

  const auto a3 = fixtures::affine(3);
  const std::vector<RootDerivation> commuting{d(c(1), 0, {-1, 0, 0}), d(c(1), 1, {0, -1, 0})};
  CHECK(nilpotent_closure(a3, commuting, Mode::OverK0).dim == 2);

  const std::vector<RootDerivation> pair{d(c(1), 0, {-1, 0}), d(c(1), 1, {1, -1})};
  const auto closure = nilpotent_closure(a2, pair, Mode::OverK0);
  CHECK(closure.dim == 3);
  CHECK(closure.basis.size() == 3);
  for (const auto& x : closure.basis) {
    for (const auto& h : x.components()) {
      CHECK(is_appropriate(closure.ordering.profile(a2, h.e)));
    }
  }
  CHECK_THROWS_AS(nilpotent_closure(a2, pair, Mode::OverK0, 2), DefectError);
}

TEST_CASE("semidirect structure on the standard examples") {
  const auto sl3 = semidirect_structure(fixtures::sl3(), Mode::OverK0);
  CHECK(sl3.summand_ranks == std::vector<std::size_t>{3});
  CHECK(sl3.nilpotent_dim == 0);
  CHECK(sl3.total_dim == 8);
  CHECK(sl3.basis.size() == 8);

  const auto planes = semidirect_structure(two_planes(), Mode::OverK);
  CHECK(planes.summand_ranks == std::vector<std::size_t>{3, 3});
  CHECK(planes.total_dim == 16);
  CHECK(planes.partition.blocks.size() == 2);

  const auto mixed = semidirect_structure(two_cycle_plus_leftover(), Mode::OverK0);
  CHECK(mixed.summand_ranks == std::vector<std::size_t>{2});
  CHECK(mixed.nilpotent_dim == 1);
  CHECK(mixed.total_dim == 4);

  CHECK_THROWS_AS(semidirect_structure(fixtures::a2_pair(), Mode::OverK0), PreconditionError);
  CHECK_THROWS_AS(semidirect_structure(fixtures::sl3({sym("f")}), Mode::OverK), PreconditionError);
  CHECK(semidirect_structure(fixtures::sl3({sym("f")}), Mode::OverK0).total_dim == 8);
}

TEST_CASE("generators_for_mode drops symbols over K0 only") {
  const auto s = fixtures::sl3({sym("f", 2, 3)});
  const auto k0 = generators_for_mode(s.derivations(), Mode::OverK0);
  CHECK(k0[0].phi == c(3));
  const auto k = generators_for_mode(s.derivations(), Mode::OverK);
  CHECK(k[0].phi == sym("f", 2, 3));
}

TEST_CASE("structure agrees with the oracle closure on random finite sets") {
  Rng rng(77);
  int compared = 0;
  for (int t = 0; t < 400 && compared < 120; ++t) {
    const auto s = random_derivation_set(rng, {4, 3, 2, 30});
    for (const auto mode : {Mode::OverK0, Mode::OverK}) {
      if (!decide_finite(s, mode).finite) {
        continue;
      }
      const auto report = semidirect_structure(s, mode);
      const auto closure = bracket_closure(s, mode, {400, 200});
      if (!closure.stabilized) {
        continue;
      }
      ++compared;
      CHECK(report.total_dim == closure.dim);
      std::size_t sl = 0;
      for (auto r : report.summand_ranks) {
        CHECK(r >= 2);
        sl += r * r - 1;
      }
      CHECK(report.total_dim == sl + report.nilpotent_dim);

      auto scaled = s.derivations();
      for (auto& x : scaled) {
        x.phi = x.phi * CoeffMonomial(make_rational(5, 2));
      }
      const auto again = semidirect_structure(DerivationSet(s.fan(), scaled), mode);
      CHECK(again.summand_ranks == report.summand_ranks);
      CHECK(again.total_dim == report.total_dim);
    }
  }
  CHECK(compared >= 60);
}

TEST_CASE("edge functions") {
  EdgeFunction f(3);
  CHECK_THROWS_AS(f.set(1, 1, c(1)), ValidationError);
  CHECK_THROWS_AS(f.set(0, 3, c(1)), ValidationError);
  f.set(0, 1, sym("x"));
  CHECK(f.get(0, 1) == sym("x"));
  CHECK_FALSE(f.get(1, 0));
  CHECK_FALSE(f.is_total());
  CHECK_THROWS_AS(is_marking(f), PreconditionError);
}

TEST_CASE("markings and potentials") {
  const Potential psi0{sym("x", 1, 2), sym("y", -1), CoeffMonomial(make_rational(1, 3), {{"x", 2}})};
  const auto f = marking_from_potential(psi0);
  CHECK(f.is_total());
  CHECK(is_marking(f));
  const auto psi = compute_potential(f);
  for (std::size_t k = 0; k < psi0.size(); ++k) {
    CHECK(psi[k] == psi0[k] * psi0[0].inverse());
  }

  EdgeFunction bad(2);
  bad.set(0, 1, sym("x"));
  bad.set(1, 0, sym("x"));
  CHECK_FALSE(is_marking(bad));
  CHECK_THROWS_AS(compute_potential(bad), PreconditionError);

  EdgeFunction ones(3);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (j != k) {
        ones.set(j, k, c(1));
      }
    }
  }
  CHECK(compute_potential(ones) == Potential(3, c(1)));

  EdgeFunction two(2);
  two.set(0, 1, sym("x"));
  two.set(1, 0, sym("x", -1));
  CHECK(compute_potential(two) == Potential{c(1), sym("x")});
}

TEST_CASE("extending partial markings") {
  EdgeFunction cycle(3);
  cycle.set(0, 1, sym("x"));
  cycle.set(1, 2, sym("y"));
  cycle.set(2, 0, CoeffMonomial(1, {{"x", -1}, {"y", -1}}));
  const auto full = extend_partial_marking(cycle);
  CHECK(full.is_total());
  CHECK(is_marking(full));
  CHECK(full.get(0, 2) == CoeffMonomial(1, {{"x", 1}, {"y", 1}}));
  CHECK(full.get(1, 0) == sym("x", -1));

  CHECK(extend_partial_marking(full) == full);

  EdgeFunction inconsistent(3);
  inconsistent.set(0, 1, sym("x"));
  inconsistent.set(1, 2, sym("y"));
  inconsistent.set(2, 0, c(1));
  CHECK_THROWS_AS(extend_partial_marking(inconsistent), ValidationError);

  EdgeFunction path(3);
  path.set(0, 1, c(1));
  path.set(1, 2, c(1));
  CHECK_THROWS_AS(extend_partial_marking(path), PreconditionError);

  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    const auto r = static_cast<std::size_t>(rng.uniform(2, 6));
    Potential psi;
    for (std::size_t k = 0; k < r; ++k) {
      const auto power = rng.uniform(-2, 2);
      const Rational constant = static_cast<long>(rng.uniform(1, 4));
      psi.push_back(power == 0 ? CoeffMonomial(constant) : CoeffMonomial(constant, {{"f", power}}));
    }
    const auto total = marking_from_potential(psi);
    EdgeFunction partial(r);
    for (std::size_t k = 0; k < r; ++k) {
      const auto next = (k + 1) % r;
      partial.set(k, next, *total.get(k, next));
    }
    CHECK(extend_partial_marking(partial) == total);
  }
}
