#ifndef ROOTLIE_GRADED_SPAN_HPP
#define ROOTLIE_GRADED_SPAN_HPP

#include "rootlie/classify.hpp"
#include "rootlie/derivation.hpp"

#include <map>
#include <vector>

namespace rootlie {

/// Span of homogeneous derivations under the scalars of a mode.
///
/// Over K_0 the component of degree e is K_0 * span_Q{v}; phi is a unit of
/// K_0 and does not matter. Over K the symbol exponents are part of the key,
/// since distinct monomials in independent symbols are K-linearly
/// independent. Each component keeps a reduced row echelon basis.
class GradedSpan {
public:
  explicit GradedSpan(Mode mode) : mode_(mode) {}

  /// Inserts d if it is independent of the current span. Returns true when
  /// the dimension grew.
  bool insert(const HomogeneousDerivation& d);
  bool contains(const HomogeneousDerivation& d) const;

  std::size_t dim() const noexcept { return dim_; }
  Mode mode() const noexcept { return mode_; }

  TermKey key_of(const HomogeneousDerivation& d) const;

private:
  struct Row {
    std::size_t pivot;
    RationalVector v;
  };
  RationalVector reduce(const std::vector<Row>& rows, RationalVector v) const;

  Mode mode_;
  std::map<TermKey, std::vector<Row>> rows_;
  std::size_t dim_ = 0;
};

}  // namespace rootlie

#endif
