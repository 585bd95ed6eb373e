#ifndef ROOTLIE_DERIVATION_HPP
#define ROOTLIE_DERIVATION_HPP

#include "rootlie/coeff.hpp"
#include "rootlie/fan.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace rootlie {

/// D_{phi,rho,e}: chi^u -> phi * <rho,u> * chi^{u+e}, with e a Demazure root
/// whose associated ray is rho.
struct RootDerivation {
  CoeffMonomial phi;
  RayIndex rho = 0;
  LatticeVector e;

  /// Checks that e is a Demazure root of the fan with associated ray rho.
  static RootDerivation make(const Fan& fan, CoeffMonomial phi, RayIndex rho,
                             LatticeVector e);

  friend bool operator==(const RootDerivation&, const RootDerivation&) = default;
};

/// General homogeneous derivation chi^u -> x^phi * v(u) * chi^{u+e}.
/// The rational constant of the coefficient is folded into v, so phi carries
/// symbol exponents only. v == 0 encodes the zero derivation.
struct HomogeneousDerivation {
  Exponents phi;
  RationalVector v;
  LatticeVector e;

  static HomogeneousDerivation from_root(const Fan& fan, const RootDerivation& d);

  bool is_zero() const { return rootlie::is_zero(v); }

  friend bool operator==(const HomogeneousDerivation&, const HomogeneousDerivation&) = default;
};

/// Reads d as D_{phi,rho,e} when e is a Demazure root and v is a rational
/// multiple of its associated ray; the multiple becomes phi's constant.
std::optional<RootDerivation> as_root_derivation(const Fan& fan, const HomogeneousDerivation& d);

/// c * chi^u with c in K_0.
struct MonomialTerm {
  CoeffMonomial coefficient;
  LatticeVector exponent;
  friend bool operator==(const MonomialTerm&, const MonomialTerm&) = default;
};

/// D(chi^u); empty when v(u) == 0.
std::optional<MonomialTerm> evaluate(const HomogeneousDerivation& d, const LatticeVector& u);

/// [D, D'] = x^{phi+phi'} (<v,e'> v' - <v',e> v) chi^{.+e+e'}; empty when the
/// commutator vanishes.
std::optional<HomogeneousDerivation> bracket(const HomogeneousDerivation& a,
                                             const HomogeneousDerivation& b);

/// Key of a homogeneous component: degree and symbol exponents.
using TermKey = std::pair<LatticeVector, Exponents>;

/// Finite sum of homogeneous derivations with distinct keys. Zero components
/// are never stored; the zero element is the empty map.
class LieElement {
public:
  LieElement() = default;
  explicit LieElement(const HomogeneousDerivation& d);

  static LieElement from_root(const Fan& fan, const RootDerivation& d) {
    return LieElement(HomogeneousDerivation::from_root(fan, d));
  }

  const std::map<TermKey, RationalVector>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Components as homogeneous derivations in key order.
  std::vector<HomogeneousDerivation> components() const;

  /// Adds c * v at key.
  void add_term(const TermKey& key, const RationalVector& v, const Rational& c = 1);

  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& c, const LieElement& a);

  friend bool operator==(const LieElement&, const LieElement&) = default;

private:
  std::map<TermKey, RationalVector> terms_;
};

/// Bilinear extension of bracket().
LieElement bracket_elements(const LieElement& a, const LieElement& b);

}  // namespace rootlie

#endif
