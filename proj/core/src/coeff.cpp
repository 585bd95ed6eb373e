#include "rootlie/coeff.hpp"

#include "rootlie/errors.hpp"

namespace rootlie {

namespace {

void drop_zeros(Exponents& x) {
  std::erase_if(x, [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents r = a;
  for (const auto& [name, k] : b) {
    std::int64_t s;
    if (__builtin_add_overflow(r[name], k, &s)) {
      throw DefectError("exponent overflow for symbol " + name);
    }
    r[name] = s;
  }
  drop_zeros(r);
  return r;
}

Exponents negate(const Exponents& a) { return scale(-1, a); }

Exponents scale(std::int64_t k, const Exponents& a) {
  Exponents r;
  if (k == 0) {
    return r;
  }
  for (const auto& [name, e] : a) {
    std::int64_t s;
    if (__builtin_mul_overflow(k, e, &s)) {
      throw DefectError("exponent overflow for symbol " + name);
    }
    r.emplace(name, s);
  }
  return r;
}

std::string to_string(const Exponents& x) {
  if (x.empty()) {
    return "1";
  }
  std::string s;
  for (const auto& [name, k] : x) {
    if (!s.empty()) {
      s += '*';
    }
    s += name;
    if (k != 1) {
      s += '^' + std::to_string(k);
    }
  }
  return s;
}

CoeffMonomial::CoeffMonomial(Rational constant, Exponents exponents)
    : constant_(std::move(constant)), exponents_(std::move(exponents)) {
  constant_.canonicalize();
  if (constant_ == 0) {
    throw ValidationError("coefficient constant must be nonzero");
  }
  for (const auto& [name, k] : exponents_) {
    if (name.empty()) {
      throw ValidationError("empty symbol name in coefficient");
    }
  }
  drop_zeros(exponents_);
}

CoeffMonomial CoeffMonomial::symbol(const std::string& name, std::int64_t power) {
  return CoeffMonomial(1, Exponents{{name, power}});
}

CoeffMonomial CoeffMonomial::inverse() const {
  return CoeffMonomial(Rational(1) / constant_, negate(exponents_));
}

CoeffMonomial CoeffMonomial::with_constant(Rational c) const {
  return CoeffMonomial(std::move(c), exponents_);
}

CoeffMonomial operator*(const CoeffMonomial& a, const CoeffMonomial& b) {
  return CoeffMonomial(a.constant_ * b.constant_, add(a.exponents_, b.exponents_));
}

std::string to_string(const CoeffMonomial& c) {
  if (c.is_constant()) {
    return to_string(c.constant());
  }
  if (c.constant() == 1) {
    return to_string(c.exponents());
  }
  if (c.constant() == -1) {
    return "-" + to_string(c.exponents());
  }
  return to_string(c.constant()) + "*" + to_string(c.exponents());
}

}  // namespace rootlie
