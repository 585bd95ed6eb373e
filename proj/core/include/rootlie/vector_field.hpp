#ifndef ROOTLIE_VECTOR_FIELD_HPP
#define ROOTLIE_VECTOR_FIELD_HPP

#include "rootlie/coeff.hpp"
#include "rootlie/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rootlie {

/// Monomial in the field variables (integer exponents) times a monomial in
/// the K_0 symbols, which behave as constants under differentiation.
struct Monomial {
  std::vector<std::int64_t> powers;
  Exponents symbols;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Laurent polynomial over Q in the variables and the symbols.
using Polynomial = std::map<Monomial, Rational>;

/// sum_k P_k * d/dvar_k over named variables, exact coefficients.
class VectorField {
public:
  explicit VectorField(std::vector<std::string> variables);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const Polynomial& component(std::size_t k) const { return components_.at(k); }

  /// Adds c * phi * x^powers * d/dx_index.
  void add_term(std::size_t index, const CoeffMonomial& c, std::vector<std::int64_t> powers);

  bool is_zero() const;

  /// X(p) for a polynomial p.
  Polynomial apply(const Polynomial& p) const;

  friend VectorField commutator(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend bool operator==(const VectorField&, const VectorField&) = default;

  /// Canonical human-readable form, e.g. "-x1^2*d/dx1 - x1*x2*d/dx2".
  /// Terms are ordered by derivative index, then by descending exponent
  /// vector, then by symbols.
  std::string to_string() const;

  struct Term {
    std::size_t index;
    Monomial monomial;
    Rational coefficient;
  };
  /// Terms in the canonical order used by to_string().
  std::vector<Term> terms() const;

private:
  std::vector<std::string> variables_;
  std::vector<Polynomial> components_;
};

Polynomial derivative(const Polynomial& p, std::size_t variable);

}  // namespace rootlie

#endif
