#ifndef ROOTLIE_VERTICALITY_HPP
#define ROOTLIE_VERTICALITY_HPP

#include "rootlie/fan.hpp"
#include "rootlie/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace rootlie {

enum class BaseKind { Generic, ProjectiveLine };

std::string to_string(BaseKind k);

/// Slices D_Z(0) of a divisorial fan over a base Y, given by their vertices,
/// together with the tail fan. Validity of the p-divisors is not checked.
struct DivisorialFanLite {
  Fan tail_fan;
  BaseKind base = BaseKind::Generic;
  std::vector<std::string> divisors;
  /// Degree of each prime divisor; used on the projective line only
  /// (missing entries count as 1).
  std::map<std::string, std::int64_t> degrees;
  /// p-divisor label -> prime divisor -> vertices.
  std::map<std::string, std::map<std::string, std::vector<RationalVector>>> slices;

  /// Throws ValidationError listing every problem: unknown divisors, empty
  /// vertex lists, vertices of the wrong length, nonpositive degrees.
  void validate() const;
};

/// Order of vanishing of phi per prime divisor; absent divisors have order 0.
using OrdData = std::map<std::string, Rational>;

/// Rational divisor on the base.
using QDivisor = std::map<std::string, Rational>;

/// Demazure-root conditions <rho, e> = -1, <rho', e> >= 0 for rho' != rho.
bool toric_root_check(const Fan& fan, RayIndex rho, const LatticeVector& e);

/// Coefficient at Z: the minimum of <v, e> over all slice vertices at Z.
/// Divisors with no vertex are outside the locus and omitted. ValidationError
/// when no slice has any vertex.
QDivisor compute_De(const DivisorialFanLite& dfan, const LatticeVector& e);

struct DivisorCondition {
  std::string divisor;
  Rational ord;
  Rational coefficient;  ///< of D_e
  bool ok = true;        ///< ord + coefficient >= 0
};

struct VerticalReport {
  bool toric_ok = false;
  std::vector<DivisorCondition> divisors;
  bool ok = false;
  /// "regular", "necessary conditions passed" or "not admissible".
  std::string verdict;
  /// Failed conditions, e.g. "toric root conditions" or "ord_Z0 + D_e(Z0) < 0".
  std::vector<std::string> failures;
};

/// Toric conditions on the tail fan plus ord_Z(phi) + D_e(Z) >= 0 for every
/// Z in the locus. On the projective line a passing check is reported as
/// "regular" when phi is a principal datum (sum of ord * degree is 0); for a
/// generic base only the necessary conditions are certified.
VerticalReport vertical_check(const DivisorialFanLite& dfan, const OrdData& phi_ord, RayIndex rho,
                              const LatticeVector& e);

/// On the projective line: sum over Z of floor(D_e(Z)) * deg Z >= 0.
/// PreconditionError for other bases.
bool exists_phi_p1(const DivisorialFanLite& dfan, const LatticeVector& e);

}  // namespace rootlie

#endif
