#ifndef ROOTLIE_CLASSIFY_HPP
#define ROOTLIE_CLASSIFY_HPP

#include "rootlie/derivation.hpp"
#include "rootlie/digraph.hpp"
#include "rootlie/fan.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rootlie {

/// Scalars of the generated Lie algebra: LIE(D) over K_0 or Lie(D) over K.
enum class Mode { OverK0, OverK };

std::string to_string(Mode m);
/// Accepts "k0" and "k".
Mode parse_mode(const std::string& s);

/// Ordered family of root derivations over one fan. No two entries share
/// both ray and degree (they would be proportional over K_0).
class DerivationSet {
public:
  DerivationSet(Fan fan, std::vector<RootDerivation> derivations);

  const Fan& fan() const noexcept { return fan_; }
  const std::vector<RootDerivation>& derivations() const noexcept { return derivations_; }
  const RootDerivation& operator[](std::size_t i) const { return derivations_.at(i); }
  std::size_t size() const noexcept { return derivations_.size(); }
  bool empty() const noexcept { return derivations_.empty(); }

  /// The derivations with the given indices, in that order.
  DerivationSet subset(const std::vector<std::size_t>& indices) const;

  friend bool operator==(const DerivationSet&, const DerivationSet&) = default;

private:
  Fan fan_;
  std::vector<RootDerivation> derivations_;
};

/// Edge i -> j iff <rho_j, e_i> > 0. Never has self-loops.
using CycleGraph = Digraph;

CycleGraph build_cycle_graph(const DerivationSet& s);
CycleGraph build_cycle_graph(const Fan& fan, const std::vector<RootDerivation>& ds);

struct CycleEnumeration {
  /// Each cycle starts at its smallest index; cycles sorted lexicographically.
  std::vector<std::vector<std::size_t>> cycles;
  bool overflow = false;
};

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

/// Cyclic subsets, i.e. elementary circuits of the cycle graph, up to `cap`.
CycleEnumeration enumerate_cyclic_subsets(const DerivationSet& s,
                                          std::size_t cap = kDefaultCycleCap);

/// Exact (-1, 1, 0) pairing pattern of every e_i against every ray, with the
/// +1 at the ray of the next element of the cyclic ordering.
bool is_almost_simple(const DerivationSet& s, const std::vector<std::size_t>& cycle);

/// Almost simple and the product of the phi_i lies in the ground field.
bool is_simple(const DerivationSet& s, const std::vector<std::size_t>& cycle);

/// Whether `cycle` is a cyclic ordering of distinct derivations.
bool is_cyclic_ordering(const DerivationSet& s, const std::vector<std::size_t>& cycle);

/// Every cyclic subset is simple. Decided by the polynomial certificate.
bool is_very_simple(const DerivationSet& s);

struct Decision {
  Mode mode = Mode::OverK0;
  bool finite = true;
  /// A cyclic subset that is not almost simple (OverK0) or not simple (OverK).
  std::optional<std::vector<std::size_t>> witness;
  /// Which certificate check failed: "non-elementary", "degree-cycle-sum",
  /// "coefficient-cycle-product"; empty when finite.
  std::string failed_check;
  std::size_t cycles_enumerated = 0;
  bool overflow = false;
  /// True when the exhaustive enumeration completed and agreed.
  bool cross_checked = false;
};

/// Certificate route: SCCs of the cycle graph, elementary roots on cyclic
/// vertices, and potentials for degree sums (and coefficient exponents over
/// K). Polynomial time. Both routes raise PreconditionError when the set has
/// a cyclic subset but the fan rays do not span N_Q.
Decision certificate_decision(const DerivationSet& s, Mode mode);

/// Exhaustive route: test every cyclic subset up to `cap`.
Decision exhaustive_decision(const DerivationSet& s, Mode mode,
                             std::size_t cap = kDefaultCycleCap);

/// Finite-dimensionality of the generated algebra. The certificate is
/// authoritative; the exhaustive enumeration runs as a cross-check and any
/// disagreement raises DefectError.
Decision decide_finite(const DerivationSet& s, Mode mode, std::size_t cap = kDefaultCycleCap);

}  // namespace rootlie

#endif
