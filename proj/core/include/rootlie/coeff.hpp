#ifndef ROOTLIE_COEFF_HPP
#define ROOTLIE_COEFF_HPP

#include "rootlie/rational.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace rootlie {

/// Laurent exponents over named, algebraically independent symbols of K_0.
/// Canonical: zero exponents are never stored.
using Exponents = std::map<std::string, std::int64_t>;

Exponents add(const Exponents& a, const Exponents& b);
Exponents negate(const Exponents& a);
Exponents scale(std::int64_t k, const Exponents& a);

/// "f^2*g^-1", or "1" for the empty map.
std::string to_string(const Exponents& x);

/// Nonzero rational constant times a Laurent monomial in the symbols; the
/// model for the coefficient functions phi in K_0.
class CoeffMonomial {
public:
  CoeffMonomial() : constant_(1) {}
  explicit CoeffMonomial(Rational constant, Exponents exponents = {});

  static CoeffMonomial one() { return CoeffMonomial(); }
  static CoeffMonomial symbol(const std::string& name, std::int64_t power = 1);

  const Rational& constant() const noexcept { return constant_; }
  const Exponents& exponents() const noexcept { return exponents_; }

  /// True iff the monomial lies in the ground field (no symbol exponents).
  bool is_constant() const noexcept { return exponents_.empty(); }

  CoeffMonomial inverse() const;
  CoeffMonomial with_constant(Rational c) const;

  friend CoeffMonomial operator*(const CoeffMonomial& a, const CoeffMonomial& b);
  friend bool operator==(const CoeffMonomial& a, const CoeffMonomial& b) {
    return a.constant_ == b.constant_ && a.exponents_ == b.exponents_;
  }

private:
  Rational constant_;
  Exponents exponents_;
};

inline CoeffMonomial coeff_multiply(const CoeffMonomial& a, const CoeffMonomial& b) {
  return a * b;
}

/// "6*y^2", "1/2", "f".
std::string to_string(const CoeffMonomial& c);

}  // namespace rootlie

#endif
