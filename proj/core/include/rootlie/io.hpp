#ifndef ROOTLIE_IO_HPP
#define ROOTLIE_IO_HPP

#include "rootlie/classify.hpp"
#include "rootlie/oracle.hpp"
#include "rootlie/realize.hpp"
#include "rootlie/structure.hpp"
#include "rootlie/verticality.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace rootlie {

using Json = nlohmann::ordered_json;

/// Version string embedded in every report.
std::string tool_version();

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

/// Raw file contents. ValidationError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

/// Parses JSON text. ValidationError naming the source, line and column on a
/// syntax error.
Json parse_json(const std::string& text, const std::string& source = "<input>");

/// Collects every schema violation as "path: message" before throwing.
class SchemaErrors {
public:
  void add(const std::string& path, const std::string& message) {
    errors_.push_back(path + ": " + message);
  }
  bool empty() const noexcept { return errors_.empty(); }
  const std::vector<std::string>& errors() const noexcept { return errors_; }
  /// Throws ValidationError(what, errors) when any violation was recorded.
  void throw_if_any(const std::string& what) const;

private:
  std::vector<std::string> errors_;
};

/// Rationals are strings "p" or "p/q"; JSON integers are also accepted.
Json rational_to_json(const Rational& q);

Json fan_to_json(const Fan& fan);
Json coeff_to_json(const CoeffMonomial& c);
Json derivation_to_json(const RootDerivation& d);
Json derivation_set_to_json(const DerivationSet& s);
Json homogeneous_to_json(const HomogeneousDerivation& h);
Json lie_element_to_json(const LieElement& x);
Json dfan_to_json(const DivisorialFanLite& d);
Json ord_to_json(const OrdData& ord);

/// Fan object: {"rank": n, "rays": [[...]], "cones": [[...]]?}.
Fan fan_from_json(const Json& j, const std::string& path = "$");

/// {"fan": <fan object or path relative to base_dir>, "derivations": [...]}.
DerivationSet derivation_set_from_json(const Json& j, const std::filesystem::path& base_dir = {});

/// {"tail_fan": ..., "base": {"kind": "p1"|"generic", "divisors": [...],
/// "degrees": {...}?}, "slices": {...}}.
DivisorialFanLite dfan_from_json(const Json& j, const std::filesystem::path& base_dir = {});

OrdData ord_from_json(const Json& j, const std::string& path = "$");

Json roots_to_json(const std::vector<RootEntry>& roots);
Json decision_to_json(const Decision& d);
Json structure_to_json(const StructureReport& r);
Json normalized_to_json(const NormalizedSet& n);
Json realization_to_json(const Realization& r, const RealizationCheck& check);
Json vertical_to_json(const VerticalReport& r, const QDivisor& de);
Json closure_to_json(const ClosureResult& c, bool include_basis = true);

}  // namespace rootlie

#endif
