#include "rootlie/verticality.hpp"

#include "rootlie/errors.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace rootlie {

std::string to_string(BaseKind k) {
  return k == BaseKind::ProjectiveLine ? "p1" : "generic";
}

void DivisorialFanLite::validate() const {
  std::vector<std::string> problems;
  const std::set<std::string> known(divisors.begin(), divisors.end());
  if (known.size() != divisors.size()) {
    problems.push_back("base.divisors: duplicate names");
  }
  const auto n = static_cast<std::size_t>(tail_fan.rank());
  for (const auto& [label, per_divisor] : slices) {
    for (const auto& [z, vertices] : per_divisor) {
      const std::string where = "slices." + label + "." + z;
      if (!known.contains(z)) {
        problems.push_back(where + ": unknown prime divisor");
      }
      if (vertices.empty()) {
        problems.push_back(where + ": empty vertex list");
      }
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i].size() != n) {
          problems.push_back(where + "[" + std::to_string(i) + "]: expected " + std::to_string(n) +
                             " coordinates");
        }
      }
    }
  }
  for (const auto& [z, d] : degrees) {
    if (!known.contains(z)) {
      problems.push_back("base.degrees." + z + ": unknown prime divisor");
    }
    if (d <= 0) {
      problems.push_back("base.degrees." + z + ": degree must be positive");
    }
  }
  if (!problems.empty()) {
    throw ValidationError("invalid divisorial fan", std::move(problems));
  }
}

bool toric_root_check(const Fan& fan, RayIndex rho, const LatticeVector& e) {
  if (rho >= fan.ray_count() || e.size() != static_cast<std::size_t>(fan.rank())) {
    return false;
  }
  for (RayIndex i = 0; i < fan.ray_count(); ++i) {
    const auto p = pairing(fan.ray(i), e);
    if (i == rho ? p != -1 : p < 0) {
      return false;
    }
  }
  return true;
}

QDivisor compute_De(const DivisorialFanLite& dfan, const LatticeVector& e) {
  QDivisor out;
  for (const auto& [label, per_divisor] : dfan.slices) {
    for (const auto& [z, vertices] : per_divisor) {
      for (const auto& v : vertices) {
        const Rational value = pairing(v, e);
        auto [it, inserted] = out.try_emplace(z, value);
        if (!inserted && value < it->second) {
          it->second = value;
        }
      }
    }
  }
  if (out.empty()) {
    throw ValidationError("divisorial fan has no slice vertices");
  }
  return out;
}

VerticalReport vertical_check(const DivisorialFanLite& dfan, const OrdData& phi_ord, RayIndex rho,
                              const LatticeVector& e) {
  VerticalReport report;
  report.toric_ok = toric_root_check(dfan.tail_fan, rho, e);
  if (!report.toric_ok) {
    report.failures.push_back("toric root conditions");
  }
  const auto de = compute_De(dfan, e);
  bool divisors_ok = true;
  for (const auto& [z, coefficient] : de) {
    DivisorCondition c;
    c.divisor = z;
    const auto it = phi_ord.find(z);
    c.ord = it == phi_ord.end() ? Rational(0) : it->second;
    c.coefficient = coefficient;
    c.ok = c.ord + c.coefficient >= 0;
    if (!c.ok) {
      divisors_ok = false;
      report.failures.push_back("ord_" + z + " + D_e(" + z + ") < 0");
    }
    report.divisors.push_back(std::move(c));
  }
  report.ok = report.toric_ok && divisors_ok;
  if (!report.ok) {
    report.verdict = "not admissible";
  } else if (dfan.base == BaseKind::ProjectiveLine) {
    Rational degree_sum = 0;
    for (const auto& [z, ord] : phi_ord) {
      const auto d = dfan.degrees.find(z);
      degree_sum += ord * static_cast<long>(d == dfan.degrees.end() ? 1 : d->second);
    }
    report.verdict = degree_sum == 0 ? "regular" : "necessary conditions passed";
  } else {
    report.verdict = "necessary conditions passed";
  }
  return report;
}

bool exists_phi_p1(const DivisorialFanLite& dfan, const LatticeVector& e) {
  if (dfan.base != BaseKind::ProjectiveLine) {
    throw PreconditionError("global sections are decided on the projective line only");
  }
  std::int64_t total = 0;
  for (const auto& [z, coefficient] : compute_De(dfan, e)) {
    const auto d = dfan.degrees.find(z);
    total += floor_to_int(coefficient) * (d == dfan.degrees.end() ? 1 : d->second);
  }
  return total >= 0;
}

}  // namespace rootlie
