#include "rootlie/rational.hpp"

#include "rootlie/errors.hpp"

#include <cctype>

namespace rootlie {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw ValidationError("rational with zero denominator");
  }
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    s.remove_prefix(1);
  }
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw ValidationError("malformed rational \"" + std::string(text) + "\"");
  }
  std::string n(num);
  if (n.front() == '+') {
    n.erase(0, 1);
  }
  mpz_class zn(n, 10);
  mpz_class zd(std::string(den), 10);
  if (zd == 0) {
    throw ValidationError("rational with zero denominator: \"" + std::string(text) + "\"");
  }
  Rational q(zn, zd);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_zero(const RationalVector& v) {
  for (const auto& x : v) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

std::int64_t floor_to_int(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!f.fits_slong_p()) {
    throw DefectError("integer overflow in floor of " + to_string(q));
  }
  return f.get_si();
}

}  // namespace rootlie
