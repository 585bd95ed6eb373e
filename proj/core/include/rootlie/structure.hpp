#ifndef ROOTLIE_STRUCTURE_HPP
#define ROOTLIE_STRUCTURE_HPP

#include "rootlie/classify.hpp"
#include "rootlie/derivation.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rootlie {

/// D' split into maximal cyclic subsets plus the derivations on no cycle.
struct CyclicPartition {
  std::vector<std::vector<std::size_t>> blocks;  ///< ordered by smallest index
  std::vector<std::size_t> leftover;
};

/// Requires every cyclic subset to be almost simple (PreconditionError
/// otherwise). Blocks are the nontrivial strongly connected components of the
/// cycle graph; distinct blocks are checked to have disjoint rays and zero
/// mutual pairings.
CyclicPartition maximal_cyclic_partition(const DerivationSet& s);

/// Positions of the distinct rays of an acyclic family such that
/// <rho_i, e_j> > 0 implies alpha(i) > alpha(j).
struct Ordering {
  std::vector<RayIndex> kappa;     ///< kappa_1..kappa_r as fan ray indices
  std::vector<std::size_t> alpha;  ///< per derivation, 1-based position of its ray

  /// (<kappa_1,e>, ..., <kappa_r,e>).
  std::vector<std::int64_t> profile(const Fan& fan, const LatticeVector& e) const;
};

/// Kahn-style ordering, always taking the lowest fan ray index available.
/// Throws PreconditionError if the family contains a cyclic subset.
Ordering compute_ordering(const Fan& fan, std::span<const RootDerivation> ds);

/// Zeros, then a single -1, then nonnegative entries.
bool is_appropriate(std::span<const std::int64_t> v);

inline constexpr std::size_t kDefaultBasisCap = 10'000;

struct NilpotentClosure {
  std::vector<LieElement> basis;
  std::size_t dim = 0;
  Ordering ordering;
};

/// Basis of the Lie algebra generated by an acyclic family. Every inserted
/// multiple commutator is checked to have an appropriate degree profile.
/// Exceeding `cap` basis elements raises DefectError.
NilpotentClosure nilpotent_closure(const Fan& fan, std::span<const RootDerivation> gens, Mode mode,
                                   std::size_t cap = kDefaultBasisCap);

struct StructureOptions {
  std::size_t basis_cap = kDefaultBasisCap;
  std::size_t adjoin_cap = kDefaultBasisCap;
  std::size_t cycle_cap = kDefaultCycleCap;
};

struct StructureReport {
  Mode mode = Mode::OverK0;
  std::vector<std::size_t> summand_ranks;  ///< sorted descending, each >= 2
  std::size_t nilpotent_dim = 0;
  std::size_t total_dim = 0;
  std::vector<LieElement> basis;
  CyclicPartition partition;
  /// Leftover derivations plus the adjoined brackets with D'.
  std::vector<RootDerivation> nilpotent_generators;
};

/// sl summands and nilpotent ideal of a finite-dimensional algebra.
/// PreconditionError when the algebra is infinite-dimensional in this mode.
StructureReport semidirect_structure(const DerivationSet& s, Mode mode,
                                     const StructureOptions& options = {});

/// Generators as used by `mode`: over K_0 the symbol part of phi is dropped.
std::vector<RootDerivation> generators_for_mode(std::span<const RootDerivation> ds, Mode mode);

}  // namespace rootlie

#endif
