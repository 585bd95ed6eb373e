#include "rootlie/derivation.hpp"

#include "rootlie/errors.hpp"

namespace rootlie {

RootDerivation RootDerivation::make(const Fan& fan, CoeffMonomial phi, RayIndex rho,
                                    LatticeVector e) {
  if (rho >= fan.ray_count()) {
    throw ValidationError("ray index " + std::to_string(rho) + " out of range");
  }
  const auto associated = is_demazure_root(fan, e);
  if (!associated) {
    throw ValidationError("degree is not a Demazure root of the fan");
  }
  if (*associated != rho) {
    throw ValidationError("Demazure root is associated with ray " +
                          std::to_string(*associated) + ", not ray " + std::to_string(rho));
  }
  return RootDerivation{std::move(phi), rho, std::move(e)};
}

HomogeneousDerivation HomogeneousDerivation::from_root(const Fan& fan, const RootDerivation& d) {
  RationalVector v = to_rational(fan.ray(d.rho));
  for (auto& x : v) {
    x *= d.phi.constant();
  }
  return HomogeneousDerivation{d.phi.exponents(), std::move(v), d.e};
}

std::optional<RootDerivation> as_root_derivation(const Fan& fan,
                                                const HomogeneousDerivation& d) {
  if (d.is_zero()) {
    return std::nullopt;
  }
  const auto ray = is_demazure_root(fan, d.e);
  if (!ray) {
    return std::nullopt;
  }
  const auto& r = fan.ray(*ray);
  if (r.size() != d.v.size()) {
    throw DimensionError("derivation rank differs from fan rank");
  }
  std::optional<Rational> scale;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] != 0) {
      scale = d.v[k] / static_cast<long>(r[k]);
      break;
    }
  }
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (d.v[k] != *scale * static_cast<long>(r[k])) {
      return std::nullopt;
    }
  }
  return RootDerivation{CoeffMonomial(*scale, d.phi), *ray, d.e};
}

std::optional<MonomialTerm> evaluate(const HomogeneousDerivation& d, const LatticeVector& u) {
  const Rational value = pairing(d.v, u);
  if (value == 0) {
    return std::nullopt;
  }
  return MonomialTerm{CoeffMonomial(value, d.phi), u + d.e};
}

std::optional<HomogeneousDerivation> bracket(const HomogeneousDerivation& a,
                                             const HomogeneousDerivation& b) {
  if (a.v.size() != b.v.size() || a.e.size() != b.e.size() || a.v.size() != a.e.size()) {
    throw DimensionError("bracket of derivations of different rank");
  }
  const Rational ab = pairing(a.v, b.e);
  const Rational ba = pairing(b.v, a.e);
  RationalVector v(a.v.size());
  bool nonzero = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = ab * b.v[i] - ba * a.v[i];
    nonzero = nonzero || v[i] != 0;
  }
  if (!nonzero) {
    return std::nullopt;
  }
  return HomogeneousDerivation{add(a.phi, b.phi), std::move(v), a.e + b.e};
}

LieElement::LieElement(const HomogeneousDerivation& d) {
  if (!d.is_zero()) {
    terms_.emplace(TermKey{d.e, d.phi}, d.v);
  }
}

std::vector<HomogeneousDerivation> LieElement::components() const {
  std::vector<HomogeneousDerivation> out;
  out.reserve(terms_.size());
  for (const auto& [key, v] : terms_) {
    out.push_back(HomogeneousDerivation{key.second, v, key.first});
  }
  return out;
}

void LieElement::add_term(const TermKey& key, const RationalVector& v, const Rational& c) {
  if (c == 0 || rootlie::is_zero(v)) {
    return;
  }
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    RationalVector scaled = v;
    for (auto& x : scaled) {
      x *= c;
    }
    terms_.emplace(key, std::move(scaled));
    return;
  }
  if (it->second.size() != v.size()) {
    throw DimensionError("adding Lie elements of different rank");
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    it->second[i] += c * v[i];
  }
  if (rootlie::is_zero(it->second)) {
    terms_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& other) {
  for (const auto& [key, v] : other.terms_) {
    add_term(key, v);
  }
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
  for (const auto& [key, v] : other.terms_) {
    add_term(key, v, -1);
  }
  return *this;
}

LieElement operator*(const Rational& c, const LieElement& a) {
  LieElement r;
  for (const auto& [key, v] : a.terms_) {
    r.add_term(key, v, c);
  }
  return r;
}

LieElement bracket_elements(const LieElement& a, const LieElement& b) {
  LieElement r;
  for (const auto& x : a.components()) {
    for (const auto& y : b.components()) {
      if (auto z = bracket(x, y)) {
        r.add_term(TermKey{z->e, z->phi}, z->v);
      }
    }
  }
  return r;
}

}  // namespace rootlie
