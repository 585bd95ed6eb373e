#include "rootlie/vector_field.hpp"

#include "rootlie/errors.hpp"

#include <algorithm>

namespace rootlie {

namespace {

void accumulate(Polynomial& p, const Monomial& m, const Rational& c) {
  if (c == 0) {
    return;
  }
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      p.erase(it);
    }
  }
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m{ma.powers, add(ma.symbols, mb.symbols)};
      for (std::size_t k = 0; k < m.powers.size(); ++k) {
        m.powers[k] += mb.powers[k];
      }
      accumulate(r, m, ca * cb);
    }
  }
  return r;
}

}  // namespace

Polynomial derivative(const Polynomial& p, std::size_t variable) {
  Polynomial r;
  for (const auto& [m, c] : p) {
    const auto k = m.powers.at(variable);
    if (k == 0) {
      continue;
    }
    Monomial d = m;
    d.powers[variable] -= 1;
    accumulate(r, d, c * static_cast<long>(k));
  }
  return r;
}

VectorField::VectorField(std::vector<std::string> variables)
    : variables_(std::move(variables)), components_(variables_.size()) {}

void VectorField::add_term(std::size_t index, const CoeffMonomial& c,
                           std::vector<std::int64_t> powers) {
  if (powers.size() != variables_.size()) {
    throw DimensionError("monomial has wrong number of variables");
  }
  accumulate(components_.at(index), Monomial{std::move(powers), c.exponents()}, c.constant());
}

bool VectorField::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Polynomial& p) { return p.empty(); });
}

Polynomial VectorField::apply(const Polynomial& p) const {
  Polynomial r;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    for (const auto& [m, c] : multiply(components_[k], derivative(p, k))) {
      accumulate(r, m, c);
    }
  }
  return r;
}

VectorField commutator(const VectorField& a, const VectorField& b) {
  if (a.variables_ != b.variables_) {
    throw DimensionError("commutator of vector fields over different variables");
  }
  VectorField r(a.variables_);
  for (std::size_t k = 0; k < r.components_.size(); ++k) {
    r.components_[k] = a.apply(b.components_[k]);
    for (const auto& [m, c] : b.apply(a.components_[k])) {
      accumulate(r.components_[k], m, -c);
    }
  }
  return r;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  if (a.variables_ != b.variables_) {
    throw DimensionError("difference of vector fields over different variables");
  }
  VectorField r = a;
  for (std::size_t k = 0; k < r.components_.size(); ++k) {
    for (const auto& [m, c] : b.components_[k]) {
      accumulate(r.components_[k], m, -c);
    }
  }
  return r;
}

std::vector<VectorField::Term> VectorField::terms() const {
  std::vector<Term> out;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    for (const auto& [m, c] : components_[k]) {
      out.push_back(Term{k, m, c});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Term& x, const Term& y) {
    if (x.index != y.index) {
      return x.index < y.index;
    }
    if (x.monomial.powers != y.monomial.powers) {
      return x.monomial.powers > y.monomial.powers;
    }
    return x.monomial.symbols < y.monomial.symbols;
  });
  return out;
}

std::string VectorField::to_string() const {
  const auto ts = terms();
  if (ts.empty()) {
    return "0";
  }
  std::string s;
  for (std::size_t t = 0; t < ts.size(); ++t) {
    const auto& term = ts[t];
    const bool negative = term.coefficient < 0;
    const Rational magnitude = negative ? Rational(-term.coefficient) : term.coefficient;
    if (t == 0) {
      s += negative ? "-" : "";
    } else {
      s += negative ? " - " : " + ";
    }
    std::vector<std::string> factors;
    if (magnitude != 1) {
      factors.push_back(rootlie::to_string(magnitude));
    }
    if (!term.monomial.symbols.empty()) {
      factors.push_back(rootlie::to_string(term.monomial.symbols));
    }
    for (std::size_t k = 0; k < term.monomial.powers.size(); ++k) {
      const auto p = term.monomial.powers[k];
      if (p == 0) {
        continue;
      }
      factors.push_back(variables_[k] + (p == 1 ? "" : "^" + std::to_string(p)));
    }
    factors.push_back("d/d" + variables_[term.index]);
    for (std::size_t f = 0; f < factors.size(); ++f) {
      s += (f ? "*" : "") + factors[f];
    }
  }
  return s;
}

}  // namespace rootlie
