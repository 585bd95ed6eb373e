#ifndef ROOTLIE_FAN_HPP
#define ROOTLIE_FAN_HPP

#include "rootlie/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace rootlie {

/// Integer coordinates of an element of M or N.
using LatticeVector = std::vector<std::int64_t>;

using RayIndex = std::size_t;

/// Rank, primitive ray generators and (optional) cones of a fan in N_Q.
///
/// Only the rays enter any computation. Cones are kept as metadata; the
/// usual standing hypotheses on the fan (every cone inside a full-dimensional
/// one, convex support) are not checked.
class Fan {
public:
  /// Validates: positive rank, rays of that length, each ray nonzero and
  /// primitive, rays pairwise distinct, and every ray used by some cone when
  /// cones are given. Throws ValidationError listing every violation.
  Fan(int rank, std::vector<LatticeVector> rays,
      std::optional<std::vector<std::vector<RayIndex>>> cones = std::nullopt);

  int rank() const noexcept { return rank_; }
  std::size_t ray_count() const noexcept { return rays_.size(); }
  const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
  const LatticeVector& ray(RayIndex i) const { return rays_.at(i); }
  const std::optional<std::vector<std::vector<RayIndex>>>& cones() const noexcept {
    return cones_;
  }

  /// Sum of all rays.
  LatticeVector ray_sum() const;

  /// Whether the rays span N_Q.
  bool rays_span() const;

  friend bool operator==(const Fan&, const Fan&) = default;

private:
  int rank_;
  std::vector<LatticeVector> rays_;
  std::optional<std::vector<std::vector<RayIndex>>> cones_;
};

/// <v, u>. Throws DimensionError on a length mismatch.
std::int64_t pairing(const LatticeVector& v, const LatticeVector& u);
Rational pairing(const RationalVector& v, const LatticeVector& u);

RationalVector to_rational(const LatticeVector& v);

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator*(std::int64_t k, const LatticeVector& a);

/// Splits v = g * p with p primitive and g > 0. Throws ValidationError when v
/// is zero.
std::pair<LatticeVector, std::int64_t> primitive_normalize(const LatticeVector& v);

/// Ray associated with e if e is a Demazure root: exactly one ray pairs to -1
/// with e and every other ray pairs nonnegatively.
std::optional<RayIndex> is_demazure_root(const Fan& fan, const LatticeVector& e);

struct ElementaryRoot {
  RayIndex ray;      ///< pairs to -1
  RayIndex partner;  ///< pairs to +1; every other ray pairs to 0
  friend bool operator==(const ElementaryRoot&, const ElementaryRoot&) = default;
};

std::optional<ElementaryRoot> is_elementary_root(const Fan& fan, const LatticeVector& e);

/// Inclusive per-coordinate bounds in M.
struct Box {
  LatticeVector lo;
  LatticeVector hi;

  static Box cube(int rank, std::int64_t bound);
};

struct RootEntry {
  LatticeVector e;
  RayIndex ray;
  friend bool operator==(const RootEntry&, const RootEntry&) = default;
};

/// All Demazure roots inside the box, in lexicographic order of e.
std::vector<RootEntry> enumerate_roots(const Fan& fan, const Box& box);

}  // namespace rootlie

#endif
