#include "fixtures.hpp"

#include "rootlie/errors.hpp"
#include "rootlie/rng.hpp"
#include "rootlie/verticality.hpp"

#include <doctest.h>

using namespace rootlie;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) {
  return make_rational(p, d);
}

DivisorialFanLite plane_over(BaseKind base,
                             std::map<std::string, std::vector<RationalVector>> slice) {
  DivisorialFanLite dfan{fixtures::a2(), base, {}, {}, {}};
  for (const auto& [z, vertices] : slice) {
    dfan.divisors.push_back(z);
  }
  dfan.slices["D0"] = std::move(slice);
  return dfan;
}

}  // namespace

TEST_CASE("toric root conditions") {
  CHECK(toric_root_check(fixtures::a2(), 0, {-1, 2}));
  CHECK_FALSE(toric_root_check(fixtures::a2(), 0, {-1, -1}));
  CHECK(toric_root_check(fixtures::p2(), 2, {1, 0}));
  CHECK_FALSE(toric_root_check(fixtures::p2(), 0, {1, 0}));
}

TEST_CASE("compute_De") {
  const auto origin = plane_over(BaseKind::Generic, {{"Z0", {{0, 0}}}, {"Z1", {{0, 0}}}});
  CHECK(compute_De(origin, {-1, 3}) == QDivisor{{"Z0", 0}, {"Z1", 0}});

  const auto half = plane_over(BaseKind::Generic, {{"Z", {{q(1, 2), 0}}}});
  CHECK(compute_De(half, {-1, 1}) == QDivisor{{"Z", q(-1, 2)}});

  const auto segment = plane_over(BaseKind::Generic, {{"Z", {{0, 0}, {1, 0}}}});
  CHECK(compute_De(segment, {-1, 0}) == QDivisor{{"Z", -1}});

  DivisorialFanLite empty{fixtures::a2(), BaseKind::Generic, {"Z"}, {}, {}};
  CHECK_THROWS_AS(compute_De(empty, {-1, 0}), ValidationError);

  DivisorialFanLite partial{fixtures::a2(), BaseKind::Generic, {"Z0", "Z1"}, {}, {}};
  partial.slices["D0"]["Z0"] = {{q(1, 3), 1}};
  partial.slices["D1"]["Z0"] = {{0, 0}};
  CHECK(compute_De(partial, {-3, 0}) == QDivisor{{"Z0", -1}});
}

TEST_CASE("vertical_check") {
  const auto origin = plane_over(BaseKind::Generic, {{"Z0", {{0, 0}}}});
  const auto ok = vertical_check(origin, {}, 0, {-1, 2});
  CHECK(ok.ok);
  CHECK(ok.toric_ok);
  CHECK(ok.verdict == "necessary conditions passed");

  const auto half = plane_over(BaseKind::Generic, {{"Z", {{q(1, 2), 0}}}});
  const auto fails = vertical_check(half, {{"Z", 0}}, 0, {-1, 1});
  CHECK_FALSE(fails.ok);
  CHECK(fails.toric_ok);
  REQUIRE(fails.divisors.size() == 1);
  CHECK(fails.divisors[0].coefficient == q(-1, 2));
  CHECK_FALSE(fails.divisors[0].ok);
  CHECK(fails.verdict == "not admissible");
  CHECK(fails.failures.size() == 1);
  CHECK(vertical_check(half, {{"Z", 1}}, 0, {-1, 1}).ok);

  const auto bad_root = vertical_check(origin, {}, 0, {-1, -1});
  CHECK_FALSE(bad_root.ok);
  CHECK_FALSE(bad_root.toric_ok);
  REQUIRE_FALSE(bad_root.failures.empty());
  CHECK(bad_root.failures[0] == "toric root conditions");
}

TEST_CASE("verdicts on the projective line") {
  auto line = plane_over(BaseKind::ProjectiveLine, {{"Z0", {{0, 0}}}, {"Z1", {{0, 0}}}});
  const auto principal = vertical_check(line, {{"Z0", 1}, {"Z1", -1}}, 0, {-1, 0});
  CHECK(principal.ok == false);
  const auto regular = vertical_check(line, {{"Z0", 0}, {"Z1", 0}}, 0, {-1, 0});
  CHECK(regular.ok);
  CHECK(regular.verdict == "regular");
  const auto not_principal = vertical_check(line, {{"Z0", 1}}, 0, {-1, 0});
  CHECK(not_principal.ok);
  CHECK(not_principal.verdict == "necessary conditions passed");
  line.degrees["Z1"] = 2;
  const auto weighted = vertical_check(line, {{"Z0", 2}, {"Z1", -1}}, 0, {-1, 0});
  CHECK_FALSE(weighted.ok);
  line.slices["D0"]["Z1"] = {{-1, 0}};
  const auto weighted_ok = vertical_check(line, {{"Z0", 2}, {"Z1", -1}}, 0, {-1, 0});
  CHECK(weighted_ok.ok);
  CHECK(weighted_ok.verdict == "regular");
}

TEST_CASE("exists_phi_p1") {
  const auto zero = plane_over(BaseKind::ProjectiveLine, {{"Z0", {{0, 0}}}, {"Z1", {{0, 0}}}});
  CHECK(exists_phi_p1(zero, {-1, 0}));
  const auto negative =
      plane_over(BaseKind::ProjectiveLine, {{"Z0", {{q(1, 2), 0}}}, {"Z1", {{0, 0}}}});
  CHECK_FALSE(exists_phi_p1(negative, {-1, 0}));
  const auto balanced =
      plane_over(BaseKind::ProjectiveLine, {{"Z0", {{q(1, 2), 0}}}, {"Z1", {{-1, 0}}}});
  CHECK(exists_phi_p1(balanced, {-1, 0}));
  const auto generic = plane_over(BaseKind::Generic, {{"Z0", {{0, 0}}}});
  CHECK_THROWS_AS(exists_phi_p1(generic, {-1, 0}), PreconditionError);
}

TEST_CASE("divisorial fan validation") {
  DivisorialFanLite d{fixtures::a2(), BaseKind::ProjectiveLine, {"Z0"}, {{"Z0", 0}}, {}};
  d.slices["D0"]["Z9"] = {{0, 0}};
  d.slices["D0"]["Z0"] = {};
  d.slices["D1"]["Z0"] = {{0, 0, 0}};
  try {
    d.validate();
    FAIL("expected a ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.details().size() == 4);
  }
  CHECK(to_string(BaseKind::ProjectiveLine) == "p1");
  CHECK(to_string(BaseKind::Generic) == "generic");
}

TEST_CASE("D_e properties on random slices") {
  Rng rng(2);
  auto random_q = [&] { return make_rational(rng.uniform(-6, 6), rng.uniform(1, 4)); };
  for (int t = 0; t < 200; ++t) {
    DivisorialFanLite d{fixtures::a2(), BaseKind::ProjectiveLine, {"Z0", "Z1", "Z2"}, {}, {}};
    for (const auto* z : {"Z0", "Z1", "Z2"}) {
      const auto k = rng.uniform(1, 3);
      for (std::int64_t i = 0; i < k; ++i) {
        d.slices["D0"][z].push_back({random_q(), random_q()});
      }
    }
    const LatticeVector e{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    const LatticeVector f{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    const auto de = compute_De(d, e);
    const auto df = compute_De(d, f);
    const auto k = rng.uniform(1, 4);
    const auto dk = compute_De(d, k * e);
    const auto dsum = compute_De(d, e + f);
    for (const auto& [z, value] : de) {
      CHECK(dk.at(z) == Rational(static_cast<long>(k)) * value);
      CHECK(dsum.at(z) >= value + df.at(z));
    }
    auto bigger = d;
    bigger.slices["D0"]["Z1"].push_back({random_q(), random_q()});
    const auto db = compute_De(bigger, e);
    for (const auto& [z, value] : de) {
      CHECK(db.at(z) <= value);
    }

    auto origin = d;
    for (auto& [z, vertices] : origin.slices["D0"]) {
      vertices = {{0, 0}};
    }
    OrdData ord;
    for (const auto* z : {"Z0", "Z1", "Z2"}) {
      ord[z] = rng.uniform(-1, 2);
    }
    const auto ray = rng.index(2);
    const auto report = vertical_check(origin, ord, ray, e);
    bool expected = toric_root_check(origin.tail_fan, ray, e);
    for (const auto& [z, value] : ord) {
      expected = expected && value >= 0;
    }
    CHECK(report.ok == expected);
  }
}
