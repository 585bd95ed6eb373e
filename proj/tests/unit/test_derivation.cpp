#include "fixtures.hpp"

#include "rootlie/errors.hpp"
#include "rootlie/graded_span.hpp"
#include "rootlie/oracle.hpp"
#include "rootlie/rng.hpp"

#include <doctest.h>

using namespace rootlie;
using fixtures::c;
using fixtures::sym;

TEST_CASE("coefficient monomials") {
  const auto f = CoeffMonomial::symbol("f");
  const auto g2 = CoeffMonomial::symbol("g", 2);
  CHECK(to_string(f) == "f");
  CHECK(to_string(CoeffMonomial(6, {{"y", 2}})) == "6*y^2");
  CHECK(to_string(CoeffMonomial(make_rational(1, 2))) == "1/2");
  CHECK(to_string(Exponents{}) == "1");
  CHECK(to_string(Exponents{{"f", 2}, {"g", -1}}) == "f^2*g^-1");
  CHECK((f * f.inverse()).is_constant());
  CHECK((f * f.inverse()) == CoeffMonomial::one());
  CHECK((f * g2).exponents() == Exponents{{"f", 1}, {"g", 2}});
  CHECK(sym("f", 1, 3).inverse() == CoeffMonomial(make_rational(1, 3), {{"f", -1}}));
  CHECK(f.with_constant(5) == sym("f", 1, 5));
  CHECK(add(Exponents{{"f", 1}}, Exponents{{"f", -1}}).empty());
  CHECK(scale(3, Exponents{{"g", -1}}) == Exponents{{"g", -3}});
  CHECK(negate(Exponents{{"g", -1}}) == Exponents{{"g", 1}});
  CHECK_THROWS_AS(CoeffMonomial(0), ValidationError);
}

TEST_CASE("root derivations are validated against the fan") {
  const auto p2 = fixtures::p2();
  CHECK_NOTHROW(RootDerivation::make(p2, c(1), 0, {-1, 1}));
  CHECK_THROWS_AS(RootDerivation::make(p2, c(1), 1, {-1, 1}), ValidationError);
  CHECK_THROWS_AS(RootDerivation::make(p2, c(1), 0, {-2, 1}), ValidationError);
  CHECK_THROWS_AS(RootDerivation::make(p2, c(1), 7, {-1, 1}), ValidationError);
  CHECK_THROWS_AS(RootDerivation::make(p2, c(1), 0, {-1, 1, 0}), ValidationError);
}

TEST_CASE("derivation sets reject proportional entries") {
  const auto p2 = fixtures::p2();
  CHECK_THROWS_AS(DerivationSet(p2, {fixtures::d(c(1), 0, {-1, 1}), fixtures::d(c(2), 0, {-1, 1})}),
                  ValidationError);
  CHECK_THROWS_AS(DerivationSet(p2, {fixtures::d(c(1), 1, {-1, 1})}), ValidationError);
  CHECK_NOTHROW(DerivationSet(p2, {}));
  const auto s = fixtures::sl3();
  CHECK(s.subset({4, 1}).derivations() ==
        std::vector<RootDerivation>{s[4], s[1]});
}

TEST_CASE("homogeneous form and evaluation") {
  const auto p2 = fixtures::p2();
  const auto h = HomogeneousDerivation::from_root(p2, fixtures::d(sym("f", 1, 3), 2, {1, 0}));
  CHECK(h.phi == Exponents{{"f", 1}});
  CHECK(h.v == RationalVector{-3, -3});
  CHECK(h.e == LatticeVector{1, 0});
  const auto t = evaluate(h, {2, 1});
  REQUIRE(t);
  CHECK(t->coefficient == sym("f", 1, -9));
  CHECK(t->exponent == LatticeVector{3, 1});
  CHECK_FALSE(evaluate(h, {1, -1}));
  const auto back = as_root_derivation(p2, h);
  REQUIRE(back);
  CHECK(*back == fixtures::d(sym("f", 1, 3), 2, {1, 0}));
  CHECK_FALSE(as_root_derivation(p2, HomogeneousDerivation{{}, {1, 0}, {1, 0}}));
}

TEST_CASE("bracket of the infinite pair on the plane") {
  const auto a2 = fixtures::a2();
  const auto d1 = HomogeneousDerivation::from_root(a2, fixtures::d(c(1), 0, {-1, 2}));
  const auto d2 = HomogeneousDerivation::from_root(a2, fixtures::d(c(1), 1, {1, -1}));
  const auto b = bracket(d1, d2);
  REQUIRE(b);
  CHECK(b->v == RationalVector{-2, 1});
  CHECK(b->e == LatticeVector{0, 1});
  const auto r = bracket(d2, d1);
  REQUIRE(r);
  CHECK(r->v == RationalVector{2, -1});
  CHECK_FALSE(bracket(d1, d1));
}

namespace {

/// Coefficient of chi^(u + a.e + b.e) in (a b - b a)(chi^u), as a rational
/// times the common symbol monomial.
Rational commutator_at(const HomogeneousDerivation& a, const HomogeneousDerivation& b,
                       const LatticeVector& u) {
  Rational total = 0;
  if (const auto t = evaluate(b, u)) {
    if (const auto s = evaluate(a, t->exponent)) {
      total += (t->coefficient * s->coefficient).constant();
    }
  }
  if (const auto t = evaluate(a, u)) {
    if (const auto s = evaluate(b, t->exponent)) {
      total -= (t->coefficient * s->coefficient).constant();
    }
  }
  return total;
}

}  // namespace

TEST_CASE("bracket agrees with the operator commutator") {
  Rng rng(5);
  const RandomInstanceOptions options{4, 3, 3, 30};
  for (int t = 0; t < 150; ++t) {
    const auto s = random_derivation_set(rng, options);
    const auto& fan = s.fan();
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        const auto a = HomogeneousDerivation::from_root(fan, s[i]);
        const auto b = HomogeneousDerivation::from_root(fan, s[j]);
        const auto br = bracket(a, b);
        LatticeVector u(static_cast<std::size_t>(fan.rank()));
        for (auto& x : u) {
          x = rng.uniform(-4, 4);
        }
        Rational expected = 0;
        if (br) {
          CHECK(br->phi == add(a.phi, b.phi));
          CHECK(br->e == a.e + b.e);
          if (const auto m = evaluate(*br, u)) {
            expected = m->coefficient.constant();
          }
        }
        CHECK(commutator_at(a, b, u) == expected);
      }
    }
  }
}

TEST_CASE("lie elements: antisymmetry, bilinearity and Jacobi") {
  Rng rng(9);
  for (int t = 0; t < 80; ++t) {
    const auto s = random_derivation_set(rng, {3, 3, 2, 30});
    std::vector<LieElement> gens;
    for (const auto& d : s.derivations()) {
      gens.push_back(LieElement::from_root(s.fan(), d));
    }
    const auto x = gens[rng.index(gens.size())];
    const auto y = gens[rng.index(gens.size())] + make_rational(1, 2) * x;
    const auto z = bracket_elements(x, gens[rng.index(gens.size())]) + y;
    CHECK(bracket_elements(x, y) + bracket_elements(y, x) == LieElement{});
    CHECK(bracket_elements(x, y + z) == bracket_elements(x, y) + bracket_elements(x, z));
    const auto jacobi = bracket_elements(x, bracket_elements(y, z)) +
                        bracket_elements(y, bracket_elements(z, x)) +
                        bracket_elements(z, bracket_elements(x, y));
    CHECK(jacobi.is_zero());
    CHECK((x - x).is_zero());
  }
}

TEST_CASE("lie element arithmetic drops zero components") {
  const auto p2 = fixtures::p2();
  const auto x = LieElement::from_root(p2, fixtures::d(c(2), 0, {-1, 1}));
  CHECK(x.size() == 1);
  CHECK((x + Rational(-1) * x).is_zero());
  LieElement y;
  y.add_term({{0, 0}, {}}, {1, 0}, 3);
  y.add_term({{0, 0}, {}}, {0, 1});
  CHECK(y.size() == 1);
  CHECK(y.components()[0].v == RationalVector{3, 1});
  y.add_term({{0, 0}, {}}, {-3, -1});
  CHECK(y.is_zero());
}

TEST_CASE("graded span keys depend on the mode") {
  const auto p2 = fixtures::p2();
  const auto plain = HomogeneousDerivation::from_root(p2, fixtures::d(c(1), 0, {-1, 1}));
  const auto with_f = HomogeneousDerivation::from_root(p2, fixtures::d(sym("f", 1, 2), 0, {-1, 1}));
  GradedSpan k0(Mode::OverK0);
  CHECK(k0.insert(plain));
  CHECK_FALSE(k0.insert(with_f));
  CHECK(k0.contains(with_f));
  CHECK(k0.dim() == 1);
  GradedSpan k(Mode::OverK);
  CHECK(k.insert(plain));
  CHECK(k.insert(with_f));
  CHECK(k.dim() == 2);
  CHECK_FALSE(k.insert(HomogeneousDerivation{{}, {0, 0}, {1, 1}}));

  GradedSpan zero_degree(Mode::OverK0);
  CHECK(zero_degree.insert({{}, {1, 0}, {0, 0}}));
  CHECK(zero_degree.insert({{}, {1, 1}, {0, 0}}));
  CHECK_FALSE(zero_degree.insert({{}, {5, -7}, {0, 0}}));
  CHECK(zero_degree.dim() == 2);
}
