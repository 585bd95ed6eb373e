#ifndef ROOTLIE_TEST_FIXTURES_HPP
#define ROOTLIE_TEST_FIXTURES_HPP

#include "rootlie/classify.hpp"
#include "rootlie/derivation.hpp"
#include "rootlie/fan.hpp"

#include <string>
#include <vector>

namespace fixtures {

inline rootlie::Fan p2() {
  return rootlie::Fan(2, {{1, 0}, {0, 1}, {-1, -1}}, std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}, {2, 0}});
}

inline rootlie::Fan a2() {
  return rootlie::Fan(2, {{1, 0}, {0, 1}}, std::vector<std::vector<std::size_t>>{{0, 1}});
}

inline rootlie::Fan affine(int n) {
  std::vector<rootlie::LatticeVector> rays;
  for (int i = 0; i < n; ++i) {
    rootlie::LatticeVector r(static_cast<std::size_t>(n), 0);
    r[static_cast<std::size_t>(i)] = 1;
    rays.push_back(r);
  }
  return rootlie::Fan(n, rays);
}

inline rootlie::CoeffMonomial c(long k) {
  return rootlie::CoeffMonomial(rootlie::Rational(k));
}

inline rootlie::CoeffMonomial sym(const std::string& name, std::int64_t power = 1, long k = 1) {
  return rootlie::CoeffMonomial(rootlie::Rational(k), {{name, power}});
}

inline rootlie::RootDerivation d(rootlie::CoeffMonomial phi, std::size_t rho,
                                 rootlie::LatticeVector e) {
  return rootlie::RootDerivation{std::move(phi), rho, std::move(e)};
}

/// The six derivations generating sl_3 on the projective plane, with
/// coefficients phi[0..5].
inline rootlie::DerivationSet sl3(std::vector<rootlie::CoeffMonomial> phi = {}) {
  phi.resize(6);
  return rootlie::DerivationSet(p2(), {d(phi[0], 0, {-1, 1}), d(phi[1], 1, {0, -1}),
                                       d(phi[2], 2, {1, 0}), d(phi[3], 0, {-1, 0}),
                                       d(phi[4], 2, {0, 1}), d(phi[5], 1, {1, -1})});
}

inline rootlie::DerivationSet a2_pair() {
  return rootlie::DerivationSet(a2(), {d(c(1), 0, {-1, 2}), d(c(1), 1, {1, -1})});
}

}  // namespace fixtures

#endif
