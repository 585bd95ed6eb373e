#include "rootlie/graded_span.hpp"

namespace rootlie {

TermKey GradedSpan::key_of(const HomogeneousDerivation& d) const {
  return mode_ == Mode::OverK0 ? TermKey{d.e, {}} : TermKey{d.e, d.phi};
}

RationalVector GradedSpan::reduce(const std::vector<Row>& rows, RationalVector v) const {
  for (const auto& row : rows) {
    const Rational c = v[row.pivot];
    if (c == 0) {
      continue;
    }
    for (std::size_t k = 0; k < v.size(); ++k) {
      v[k] -= c * row.v[k];
    }
  }
  return v;
}

bool GradedSpan::contains(const HomogeneousDerivation& d) const {
  if (d.is_zero()) {
    return true;
  }
  auto it = rows_.find(key_of(d));
  if (it == rows_.end()) {
    return false;
  }
  return is_zero(reduce(it->second, d.v));
}

bool GradedSpan::insert(const HomogeneousDerivation& d) {
  if (d.is_zero()) {
    return false;
  }
  auto& rows = rows_[key_of(d)];
  RationalVector v = reduce(rows, d.v);
  std::size_t pivot = 0;
  while (pivot < v.size() && v[pivot] == 0) {
    ++pivot;
  }
  if (pivot == v.size()) {
    return false;
  }
  const Rational lead = v[pivot];
  for (auto& x : v) {
    x /= lead;
  }
  for (auto& row : rows) {
    const Rational c = row.v[pivot];
    if (c != 0) {
      for (std::size_t k = 0; k < v.size(); ++k) {
        row.v[k] -= c * v[k];
      }
    }
  }
  rows.push_back(Row{pivot, std::move(v)});
  ++dim_;
  return true;
}

}  // namespace rootlie
