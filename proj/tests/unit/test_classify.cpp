#include "fixtures.hpp"

#include "rootlie/digraph.hpp"
#include "rootlie/errors.hpp"
#include "rootlie/oracle.hpp"
#include "rootlie/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace rootlie;
using fixtures::c;
using fixtures::sym;

using Cycle = std::vector<std::size_t>;

TEST_CASE("digraph basics") {
  Digraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(2, 3);
  g.add_edge(0, 1);
  CHECK(g.edge_count() == 4);
  CHECK(g.has_edge(2, 3));
  CHECK_FALSE(g.has_edge(3, 2));
  CHECK(strongly_connected_components(g) == std::vector<Cycle>{{0, 1, 2}, {3}});
  CHECK(shortest_path(g, 0, 3, std::vector<bool>(4, true)) == Cycle{0, 1, 2, 3});
  CHECK(shortest_path(g, 1, 1, std::vector<bool>(4, true)) == Cycle{1});
  CHECK_FALSE(shortest_path(g, 0, 3, {true, true, false, true}));
  const auto h = g.induced({2, 3});
  CHECK(h.size() == 2);
  CHECK(h.has_edge(0, 1));
  CHECK(split_closed_walk({0, 1, 0, 2}) == std::vector<Cycle>{{0, 1}, {0, 2}});
}

TEST_CASE("simple cycle enumeration matches brute force on small digraphs") {
  Rng rng(31);
  for (int t = 0; t < 120; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    Digraph g(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && rng.coin(35)) {
          g.add_edge(i, j);
        }
      }
    }
    std::vector<Cycle> johnson;
    for_each_simple_cycle(g, [&](const Cycle& c) {
      johnson.push_back(c);
      return true;
    });
    std::vector<Cycle> brute;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Cycle verts;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) {
          verts.push_back(i);
        }
      }
      if (verts.size() < 2) {
        continue;
      }
      do {
        bool ok = true;
        for (std::size_t k = 0; k < verts.size() && ok; ++k) {
          ok = g.has_edge(verts[k], verts[(k + 1) % verts.size()]);
        }
        if (ok) {
          brute.push_back(verts);
        }
      } while (std::next_permutation(verts.begin() + 1, verts.end()));
    }
    std::sort(johnson.begin(), johnson.end());
    std::sort(brute.begin(), brute.end());
    CHECK(johnson == brute);
  }
}

TEST_CASE("cycle graph of the sl3 set") {
  const auto s = fixtures::sl3();
  const auto g = build_cycle_graph(s);
  for (std::size_t i = 0; i < 6; ++i) {
    const auto el = is_elementary_root(s.fan(), s[i].e);
    REQUIRE(el);
    for (std::size_t j = 0; j < 6; ++j) {
      CHECK(g.has_edge(i, j) == (s[j].rho == el->partner));
    }
  }
  CHECK(build_cycle_graph(s.subset({0})).edge_count() == 0);
  const auto pair = build_cycle_graph(fixtures::a2_pair());
  CHECK(pair.has_edge(0, 1));
  CHECK(pair.has_edge(1, 0));
}

TEST_CASE("cyclic subsets") {
  const auto s = fixtures::sl3();
  const auto cycles = enumerate_cyclic_subsets(s);
  CHECK_FALSE(cycles.overflow);
  CHECK(std::is_sorted(cycles.cycles.begin(), cycles.cycles.end()));
  CHECK(std::find(cycles.cycles.begin(), cycles.cycles.end(), Cycle{0, 1, 2, 3, 4, 5}) !=
        cycles.cycles.end());
  CHECK(std::find(cycles.cycles.begin(), cycles.cycles.end(), Cycle{2, 3}) != cycles.cycles.end());
  for (const auto& cyc : cycles.cycles) {
    CHECK(cyc.front() == *std::min_element(cyc.begin(), cyc.end()));
    CHECK(is_cyclic_ordering(s, cyc));
    CHECK(is_almost_simple(s, cyc));
  }
  CHECK(enumerate_cyclic_subsets(s.subset({0})).cycles.empty());
  CHECK(enumerate_cyclic_subsets(fixtures::a2_pair()).cycles == std::vector<Cycle>{{0, 1}});
  const auto capped = enumerate_cyclic_subsets(s, 3);
  CHECK(capped.overflow);
  CHECK(capped.cycles.size() == 3);
}

TEST_CASE("almost simple and simple cycles") {
  const Cycle full{0, 1, 2, 3, 4, 5};
  CHECK(is_almost_simple(fixtures::sl3(), full));
  CHECK(is_simple(fixtures::sl3(), full));
  CHECK_FALSE(is_almost_simple(fixtures::a2_pair(), {0, 1}));
  CHECK_FALSE(is_simple(fixtures::sl3({sym("f")}), full));
  CHECK(is_simple(fixtures::sl3({sym("f"), sym("f", -1, 2)}), full));
  CHECK_FALSE(is_cyclic_ordering(fixtures::sl3(), {0, 2}));
  CHECK_FALSE(is_almost_simple(fixtures::sl3(), {0, 0}));
}

TEST_CASE("very simple sets") {
  CHECK(is_very_simple(fixtures::sl3()));
  CHECK_FALSE(is_very_simple(fixtures::sl3({sym("f")})));
  CHECK(is_very_simple(DerivationSet(fixtures::p2(), {})));
  CHECK_FALSE(is_very_simple(fixtures::sl3({sym("f"), sym("f", -1)})));
  CHECK(is_very_simple(fixtures::sl3({sym("f"), sym("f", -1), c(1), c(1), sym("f"), sym("f", -1)})));
}

TEST_CASE("decide_finite on the standard examples") {
  for (const auto mode : {Mode::OverK0, Mode::OverK}) {
    const auto d = decide_finite(fixtures::sl3(), mode);
    CHECK(d.finite);
    CHECK(d.cross_checked);
    CHECK_FALSE(d.witness);
  }
  const auto pair = decide_finite(fixtures::a2_pair(), Mode::OverK0);
  CHECK_FALSE(pair.finite);
  CHECK(pair.witness == Cycle{0, 1});
  CHECK(pair.failed_check == "non-elementary");

  const auto with_f = fixtures::sl3({sym("f")});
  CHECK(decide_finite(with_f, Mode::OverK0).finite);
  const auto over_k = decide_finite(with_f, Mode::OverK);
  CHECK_FALSE(over_k.finite);
  CHECK(over_k.failed_check == "coefficient-cycle-product");
  REQUIRE(over_k.witness);
  CHECK_FALSE(is_simple(with_f, *over_k.witness));
}

TEST_CASE("cyclic sets on fans whose rays do not span") {
  const Fan fan(3, {{1, 0, 0}, {0, 1, 0}});
  const DerivationSet s(fan, {fixtures::d(c(1), 0, {-1, 1, 1}), fixtures::d(c(1), 1, {1, -1, 0})});
  CHECK(is_almost_simple(s, {0, 1}));
  CHECK_THROWS_AS(decide_finite(s, Mode::OverK0), PreconditionError);
  CHECK_THROWS_AS(exhaustive_decision(s, Mode::OverK0), PreconditionError);
  const DerivationSet acyclic(fan, {fixtures::d(c(1), 0, {-1, 0, 5})});
  CHECK(decide_finite(acyclic, Mode::OverK0).finite);
}

TEST_CASE("decision invariants on random sets") {
  Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    const auto s = random_derivation_set(rng, {5, 3, 3, 40});
    const auto k0 = decide_finite(s, Mode::OverK0);
    const auto k = decide_finite(s, Mode::OverK);
    CHECK(k0.cross_checked);
    CHECK(exhaustive_decision(s, Mode::OverK0).finite == k0.finite);
    CHECK(exhaustive_decision(s, Mode::OverK).finite == k.finite);
    if (!k0.finite) {
      CHECK_FALSE(k.finite);
    }
    for (const auto& [decision, mode] : {std::pair{k0, Mode::OverK0}, std::pair{k, Mode::OverK}}) {
      if (decision.witness) {
        CHECK(is_cyclic_ordering(s, *decision.witness));
        const bool passes = mode == Mode::OverK0 ? is_almost_simple(s, *decision.witness)
                                                 : is_simple(s, *decision.witness);
        CHECK_FALSE(passes);
      }
    }

    std::vector<std::size_t> perm(s.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    CHECK(decide_finite(s.subset(perm), Mode::OverK).finite == k.finite);

    auto scaled = s.derivations();
    for (auto& d : scaled) {
      d.phi = d.phi * CoeffMonomial(make_rational(-7, 3));
    }
    CHECK(decide_finite(DerivationSet(s.fan(), scaled), Mode::OverK).finite == k.finite);
  }
}

TEST_CASE("modes parse and print") {
  CHECK(parse_mode("k0") == Mode::OverK0);
  CHECK(parse_mode("k") == Mode::OverK);
  CHECK(to_string(Mode::OverK) == "k");
  CHECK_THROWS_AS(parse_mode("K_0"), ValidationError);
}
