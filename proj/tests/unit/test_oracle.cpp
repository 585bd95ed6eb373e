#include "fixtures.hpp"

#include "rootlie/errors.hpp"
#include "rootlie/oracle.hpp"
#include "rootlie/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>

using namespace rootlie;
using fixtures::c;
using fixtures::d;
using fixtures::sym;

TEST_CASE("closure of the sl3 set") {
  for (const auto mode : {Mode::OverK0, Mode::OverK}) {
    const auto r = bracket_closure(fixtures::sl3(), mode, {100, 100});
    CHECK(r.stabilized);
    CHECK(r.dim == 8);
    CHECK(r.basis.size() == 8);
    CHECK(r.parent.size() == 8);
    CHECK(r.degree.size() == 8);
    CHECK(r.degrees_seen.size() == 7);
    CHECK(r.degrees_seen.contains(LatticeVector{0, 0}));
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK_FALSE(r.parent[i]);
    }
  }
}

TEST_CASE("closure separates the modes when a cycle product is a symbol") {
  const auto s = fixtures::sl3({sym("f")});
  const auto k0 = bracket_closure(s, Mode::OverK0, {100, 100});
  CHECK(k0.stabilized);
  CHECK(k0.dim == 8);
  const auto k = bracket_closure(s, Mode::OverK, {60, 100});
  CHECK_FALSE(k.stabilized);
}

TEST_CASE("closure of the infinite pair does not stabilize") {
  const auto s = fixtures::a2_pair();
  const auto r = bracket_closure(s, Mode::OverK0, {50, 50});
  CHECK_FALSE(r.stabilized);
  CHECK(r.dim >= 50);
  const auto chain = rho_bar_chain(s.fan(), r);
  CHECK(chain.size() >= 3);
  CHECK(std::adjacent_find(chain.begin(), chain.end(), std::greater_equal<>()) == chain.end());
  for (std::size_t i = 0; i < r.basis.size(); ++i) {
    REQUIRE(r.basis[i].size() == 1);
    CHECK(r.basis[i].components()[0].e == r.degree[i]);
    if (const auto p = r.parent[i]) {
      CHECK(p->first < i);
      CHECK(r.degree[i] == r.degree[p->first] + s[p->second].e);
    }
  }
}

TEST_CASE("closure of a single derivation") {
  const DerivationSet s(fixtures::a2(), {d(c(1), 0, {-1, 0})});
  const auto r = bracket_closure(s, Mode::OverK0);
  CHECK(r.stabilized);
  CHECK(r.dim == 1);
  CHECK(r.steps == 1);
}

TEST_CASE("compare verdicts") {
  const auto finite = decide_finite(fixtures::sl3(), Mode::OverK0);
  const auto stabilized = bracket_closure(fixtures::sl3(), Mode::OverK0, {100, 100});
  CHECK(compare(finite, stabilized, 8).verdict == Verdict::Pass);
  CHECK(compare(finite, stabilized).verdict == Verdict::Pass);
  CHECK(compare(finite, stabilized, 9).verdict == Verdict::Fail);

  auto infinite = finite;
  infinite.finite = false;
  CHECK(compare(infinite, stabilized).verdict == Verdict::Fail);

  const auto capped = bracket_closure(fixtures::sl3(), Mode::OverK0, {4, 100});
  CHECK_FALSE(capped.stabilized);
  const auto inconclusive = compare(finite, capped);
  CHECK(inconclusive.verdict == Verdict::Inconclusive);
  CHECK_FALSE(inconclusive.message.empty());
  CHECK(compare(infinite, capped).verdict == Verdict::Pass);

  const auto other = bracket_closure(fixtures::sl3(), Mode::OverK, {100, 100});
  CHECK_THROWS_AS(compare(finite, other), PreconditionError);
  CHECK(to_string(Verdict::Inconclusive) == "INCONCLUSIVE");
}

TEST_CASE("claim iteration on the infinite pair") {
  const auto s = fixtures::a2_pair();
  const auto steps = claim_chain(s.fan(), s[0], s[1], 3);
  REQUIRE(steps.size() == 3);
  CHECK(steps[0].a == 2);
  REQUIRE(steps[0].next);
  CHECK(steps[0].next->e == LatticeVector{2, -1});
  CHECK(steps[0].next->rho == 1);
  CHECK(steps[0].rho_bar_before == 0);
  CHECK(steps[0].rho_bar_after == 1);
  CHECK(steps[1].rho_bar_after == 4);
  for (const auto& st : steps) {
    CHECK(st.nonzero);
    CHECK(st.same_ray);
    CHECK(st.rho_bar_increases);
    CHECK(st.cyclic_not_almost_simple);
  }
}

TEST_CASE("random instances are valid and reproducible") {
  Rng a(99);
  Rng b(99);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_derivation_set(a);
    const auto y = random_derivation_set(b);
    CHECK(x == y);
    CHECK(x.size() >= 1);
    CHECK(x.size() <= 4);
    CHECK(x.fan().rank() <= 3);
    CHECK(x.fan().rays_span());
  }
}

TEST_CASE("oracle agrees with the decision on random sets") {
  Rng rng(1234);
  int pass = 0;
  for (int t = 0; t < 150; ++t) {
    const auto s = random_derivation_set(rng);
    for (const auto mode : {Mode::OverK0, Mode::OverK}) {
      const auto decision = decide_finite(s, mode);
      const auto closure = bracket_closure(s, mode, {300, 200});
      const auto verdict = compare(decision, closure).verdict;
      CHECK(verdict != Verdict::Fail);
      pass += verdict == Verdict::Pass ? 1 : 0;
    }
  }
  CHECK(pass >= 250);
}
