#ifndef ROOTLIE_MARKING_HPP
#define ROOTLIE_MARKING_HPP

#include "rootlie/coeff.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace rootlie {

/// Function on (a subset of) the edges of the complete oriented graph on
/// vertices 0..r-1, with values in the units of K_0.
class EdgeFunction {
public:
  explicit EdgeFunction(std::size_t vertex_count) : r_(vertex_count) {}

  std::size_t vertex_count() const noexcept { return r_; }

  /// Throws ValidationError on a self-edge or an out-of-range vertex.
  void set(std::size_t from, std::size_t to, CoeffMonomial value);
  std::optional<CoeffMonomial> get(std::size_t from, std::size_t to) const;

  /// Defined on all r(r-1) edges.
  bool is_total() const noexcept { return values_.size() == r_ * (r_ - (r_ > 0 ? 1 : 0)); }

  const std::map<std::pair<std::size_t, std::size_t>, CoeffMonomial>& values() const noexcept {
    return values_;
  }

  friend bool operator==(const EdgeFunction&, const EdgeFunction&) = default;

private:
  std::size_t r_;
  std::map<std::pair<std::size_t, std::size_t>, CoeffMonomial> values_;
};

/// psi(k) per vertex, with f([jk]) = psi(k) / psi(j).
using Potential = std::vector<CoeffMonomial>;

/// Every oriented cycle has product 1. Decided with the star tree at vertex 0
/// and a check of every remaining edge. PreconditionError if f is not total.
bool is_marking(const EdgeFunction& f);

/// Extends a partial marking whose edges connect every vertex to every other
/// (strongly connected) by path products. Each new value is computed along a
/// shortest path and compared against the potential obtained from vertex 0.
/// PreconditionError when E' is not strongly connected, ValidationError when
/// some E'-cycle has product other than 1.
EdgeFunction extend_partial_marking(const EdgeFunction& partial);

/// psi(0) = 1, psi(k) = f([0k]). PreconditionError if f is not a marking.
Potential compute_potential(const EdgeFunction& marking);

/// f([jk]) = psi(k) / psi(j) on every edge.
EdgeFunction marking_from_potential(const Potential& psi);

}  // namespace rootlie

#endif
