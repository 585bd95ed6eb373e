#ifndef ROOTLIE_REALIZE_HPP
#define ROOTLIE_REALIZE_HPP

#include "rootlie/classify.hpp"
#include "rootlie/marking.hpp"
#include "rootlie/vector_field.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace rootlie {

/// The distinct rays kappa_1..kappa_r of a single maximal cyclic block of
/// elementary derivations, in fan order, with the edge kappa_i -> kappa_j of
/// each derivation (rho = kappa_i, partner ray = kappa_j).
struct RayGraph {
  std::vector<RayIndex> kappa;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  ///< per derivation, 0-based vertices
};

/// PreconditionError unless s is one strongly connected block whose cyclic
/// subsets are all almost simple.
RayGraph ray_graph(const DerivationSet& s);

struct NormalizedSet {
  DerivationSet set;  ///< same rays and degrees, constant coefficients
  RayGraph graph;
  EdgeFunction marking;  ///< extension of the edge function of the set
  Potential psi;         ///< psi(0) = 1
};

/// Rescales phi_s by psi(source) / psi(target) so that every coefficient
/// becomes constant; equivalent to x_l -> psi(l)^-1 x_l on the realization.
/// Requires a single block whose cyclic subsets are all simple.
NormalizedSet normalize_simple_set(const DerivationSet& s);

struct Realization {
  bool dependent = false;  ///< kappa_1 + ... + kappa_r = 0
  RayGraph graph;
  std::vector<VectorField> fields;    ///< per derivation, over x-variables
  std::vector<VectorField> z_fields;  ///< per derivation over z_1..z_r (dependent case only)
  /// Coordinates c of v = sum c_a kappa_a are taken against these kappa
  /// (all r in the independent case, the first r-1 otherwise).
  std::vector<RayIndex> basis_rays;
};

/// phi_s x_j d/dx_i per derivation; in the dependent case, the restriction of
/// phi_s z_j d/dz_i under x_i = z_i / z_r (with x_r = 1).
Realization realize_almost_simple(const DerivationSet& s);

/// Image of an arbitrary homogeneous element of the generated algebra:
/// phi * x^(<kappa_a, e>)_a * sum_a c_a x_a d/dx_a with v = sum c_a kappa_a.
VectorField realize_homogeneous(const DerivationSet& s, const Realization& r,
                                const HomogeneousDerivation& h);

struct RealizationCheck {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

/// Compares [R(D_i), R(D_j)] with R([D_i, D_j]) on sampled pairs (all pairs
/// when samples >= m^2). Also checks that each R(D_s) agrees with the general
/// formula.
RealizationCheck verify_realization(const DerivationSet& s, const Realization& r,
                                    std::size_t samples, std::uint64_t seed = 0);

}  // namespace rootlie

#endif
