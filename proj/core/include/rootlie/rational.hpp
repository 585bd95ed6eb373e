#ifndef ROOTLIE_RATIONAL_HPP
#define ROOTLIE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rootlie {

/// Exact rational; always kept in canonical (reduced, positive denominator)
/// form by the helpers below.
using Rational = mpq_class;

/// Vector in N_Q.
using RationalVector = std::vector<Rational>;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p", "p/q" or "-p/q". Throws ValidationError on anything else or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

bool is_zero(const RationalVector& v);

/// floor(q) as a 64-bit integer; throws DefectError if it does not fit.
std::int64_t floor_to_int(const Rational& q);

}  // namespace rootlie

#endif
