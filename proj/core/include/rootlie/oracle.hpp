#ifndef ROOTLIE_ORACLE_HPP
#define ROOTLIE_ORACLE_HPP

#include "rootlie/classify.hpp"
#include "rootlie/derivation.hpp"
#include "rootlie/rng.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rootlie {

struct ClosureCaps {
  std::size_t max_basis = 500;
  std::size_t max_steps = 200;
};

/// Brute-force bracket closure, kept independent of the structure module.
struct ClosureResult {
  Mode mode = Mode::OverK0;
  bool stabilized = false;
  std::size_t dim = 0;  ///< basis size; the algebra dimension when stabilized
  std::vector<LieElement> basis;
  std::set<LatticeVector> degrees_seen;
  std::size_t steps = 0;  ///< number of full bracketing passes
  /// Per basis element: (basis index, generator index) it was obtained from
  /// as [generator, basis element]; empty for the generators themselves.
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> parent;
  /// Degree of each basis element (all basis elements are homogeneous).
  std::vector<LatticeVector> degree;
};

/// Starts from the generators (phi reduced to its constant over K_0), then
/// repeatedly brackets every generator with every element added in the
/// previous pass, in generator-then-basis order, keeping the results that are
/// independent under the mode's keys. Stops when a pass adds nothing or a
/// cap is reached.
ClosureResult bracket_closure(const DerivationSet& s, Mode mode, const ClosureCaps& caps = {});

/// <rho_bar, deg> along the ancestry of the basis element of largest
/// <rho_bar, deg> (latest such element), keeping only the strict records when
/// walking from the generator towards that element.
std::vector<std::int64_t> rho_bar_chain(const Fan& fan, const ClosureResult& closure);

enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);

struct Comparison {
  Verdict verdict = Verdict::Pass;
  std::string message;
};

/// PASS: finite and stabilized with matching dimension, or infinite and not
/// stabilized. INCONCLUSIVE: finite but the caps were reached. FAIL
/// otherwise. PreconditionError when the modes differ.
Comparison compare(const Decision& decision, const ClosureResult& closure,
                   std::optional<std::size_t> report_dim = std::nullopt);

/// One iteration of the divergence argument on a cyclic pair (D_1, D_2) that
/// is not almost simple: D_2' = [...[[D_1, D_2], D_2], ..., D_2] with
/// a + 1 copies of D_2, a = <rho_2, e_1>.
struct ClaimStep {
  std::int64_t a = 0;
  std::optional<RootDerivation> next;  ///< D_2' when it is a root derivation
  bool nonzero = false;
  bool same_ray = false;              ///< D_2' has ray rho_2
  bool rho_bar_increases = false;     ///< <rho_bar, e_2'> > <rho_bar, e_2>
  bool cyclic_not_almost_simple = false;  ///< (D_1, D_2') again cyclic, not almost simple
  std::int64_t rho_bar_before = 0;
  std::int64_t rho_bar_after = 0;
};

/// Iterates the step `iterations` times starting from (d1, d2), each time
/// replacing D_2 by D_2'. Stops early when a step fails.
std::vector<ClaimStep> claim_chain(const Fan& fan, const RootDerivation& d1,
                                   const RootDerivation& d2, std::size_t iterations);

struct RandomInstanceOptions {
  std::size_t max_m = 4;
  int max_rank = 3;
  std::int64_t box = 3;
  int symbol_percent = 30;  ///< chance that phi carries a symbol f or g
};

/// A fan drawn from standard families (affine spaces, projective spaces,
/// products, Hirzebruch surfaces) or random primitive rays spanning N_Q, and
/// 1..max_m distinct root derivations drawn from the Demazure roots in the box.
DerivationSet random_derivation_set(Rng& rng, const RandomInstanceOptions& options = {});

}  // namespace rootlie

#endif
