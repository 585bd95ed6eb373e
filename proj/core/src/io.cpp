#include "rootlie/io.hpp"

#include "rootlie/errors.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace rootlie {

namespace {

void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& path,
                SchemaErrors& errs) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) {
      errs.add(path + "." + key, "unknown key");
    }
  }
}

bool require_object(const Json& j, const std::string& path, SchemaErrors& errs) {
  if (!j.is_object()) {
    errs.add(path, "expected an object");
    return false;
  }
  return true;
}

std::optional<std::int64_t> read_int(const Json& j, const std::string& path, SchemaErrors& errs) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
      errs.add(path, "integer out of range");
      return std::nullopt;
    }
    return j.get<std::int64_t>();
  }
  errs.add(path, "expected an integer");
  return std::nullopt;
}

std::optional<std::size_t> read_index(const Json& j, const std::string& path, SchemaErrors& errs) {
  const auto v = read_int(j, path, errs);
  if (v && *v < 0) {
    errs.add(path, "expected a nonnegative index");
    return std::nullopt;
  }
  return v ? std::optional<std::size_t>(static_cast<std::size_t>(*v)) : std::nullopt;
}

std::optional<LatticeVector> read_lattice(const Json& j, const std::string& path,
                                          SchemaErrors& errs) {
  if (!j.is_array()) {
    errs.add(path, "expected an array of integers");
    return std::nullopt;
  }
  LatticeVector v;
  bool ok = true;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto x = read_int(j[i], path + "[" + std::to_string(i) + "]", errs);
    ok = ok && x.has_value();
    v.push_back(x.value_or(0));
  }
  return ok ? std::optional(v) : std::nullopt;
}

std::optional<Rational> read_rational(const Json& j, const std::string& path, SchemaErrors& errs) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      return Rational(j.get<std::uint64_t>());
    }
    return make_rational(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ValidationError& e) {
      errs.add(path, e.what());
      return std::nullopt;
    }
  }
  errs.add(path, "expected a rational as a string \"p/q\" or an integer");
  return std::nullopt;
}

std::optional<Exponents> read_exponents(const Json& j, const std::string& path,
                                        SchemaErrors& errs) {
  if (!require_object(j, path, errs)) {
    return std::nullopt;
  }
  Exponents x;
  bool ok = true;
  for (const auto& [name, value] : j.items()) {
    if (name.empty()) {
      errs.add(path, "empty symbol name");
      ok = false;
    }
    const auto k = read_int(value, path + "." + name, errs);
    ok = ok && k.has_value();
    if (k && *k != 0) {
      x[name] = *k;
    }
  }
  return ok ? std::optional(x) : std::nullopt;
}

std::optional<CoeffMonomial> read_coeff(const Json& j, const std::string& path,
                                        SchemaErrors& errs) {
  if (!require_object(j, path, errs)) {
    return std::nullopt;
  }
  check_keys(j, {"constant", "exponents"}, path, errs);
  std::optional<Rational> c = Rational(1);
  if (j.contains("constant")) {
    c = read_rational(j["constant"], path + ".constant", errs);
    if (c && *c == 0) {
      errs.add(path + ".constant", "coefficient must be nonzero");
      c.reset();
    }
  }
  std::optional<Exponents> x = Exponents{};
  if (j.contains("exponents")) {
    x = read_exponents(j["exponents"], path + ".exponents", errs);
  }
  if (!c || !x) {
    return std::nullopt;
  }
  return CoeffMonomial(*c, *x);
}

Json load_ref(const Json& j, const std::filesystem::path& base_dir) {
  if (!j.is_string()) {
    return j;
  }
  const auto path = base_dir / j.get<std::string>();
  return parse_json(read_file(path), path.string());
}

void prefix_and_rethrow(const ValidationError& e, const std::string& path) {
  std::vector<std::string> details;
  for (const auto& d : e.details()) {
    details.push_back(path + ": " + d);
  }
  if (details.empty()) {
    details.push_back(path + ": " + e.what());
  }
  throw ValidationError(e.what(), std::move(details));
}

Json vector_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) {
    a.push_back(rational_to_json(x));
  }
  return a;
}

Json exponents_json(const Exponents& x) {
  Json o = Json::object();
  for (const auto& [name, k] : x) {
    o[name] = k;
  }
  return o;
}

}  // namespace

std::string tool_version() {
  return ROOTLIE_VERSION_STRING;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw DefectError("SHA-256 computation failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) {
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ValidationError(source + ": malformed JSON at line " + std::to_string(line) +
                              ", column " + std::to_string(column),
                          {e.what()});
  }
}

void SchemaErrors::throw_if_any(const std::string& what) const {
  if (!errors_.empty()) {
    throw ValidationError(what, errors_);
  }
}

Json rational_to_json(const Rational& q) {
  return to_string(q);
}

Json fan_to_json(const Fan& fan) {
  Json j;
  j["rank"] = fan.rank();
  j["rays"] = fan.rays();
  if (fan.cones()) {
    j["cones"] = *fan.cones();
  }
  return j;
}

Json coeff_to_json(const CoeffMonomial& c) {
  Json j;
  j["constant"] = rational_to_json(c.constant());
  j["exponents"] = exponents_json(c.exponents());
  return j;
}

Json derivation_to_json(const RootDerivation& d) {
  Json j;
  j["phi"] = coeff_to_json(d.phi);
  j["rho"] = d.rho;
  j["e"] = d.e;
  return j;
}

Json derivation_set_to_json(const DerivationSet& s) {
  Json j;
  j["fan"] = fan_to_json(s.fan());
  j["derivations"] = Json::array();
  for (const auto& d : s.derivations()) {
    j["derivations"].push_back(derivation_to_json(d));
  }
  return j;
}

Json homogeneous_to_json(const HomogeneousDerivation& h) {
  Json j;
  j["phi"] = exponents_json(h.phi);
  j["v"] = vector_json(h.v);
  j["e"] = h.e;
  return j;
}

Json lie_element_to_json(const LieElement& x) {
  Json a = Json::array();
  for (const auto& h : x.components()) {
    a.push_back(homogeneous_to_json(h));
  }
  return a;
}

Json dfan_to_json(const DivisorialFanLite& d) {
  Json j;
  j["tail_fan"] = fan_to_json(d.tail_fan);
  j["base"]["kind"] = to_string(d.base);
  j["base"]["divisors"] = d.divisors;
  if (!d.degrees.empty()) {
    j["base"]["degrees"] = Json::object();
    for (const auto& [z, k] : d.degrees) {
      j["base"]["degrees"][z] = k;
    }
  }
  j["slices"] = Json::object();
  for (const auto& [label, per_divisor] : d.slices) {
    Json s = Json::object();
    for (const auto& [z, vertices] : per_divisor) {
      Json vs = Json::array();
      for (const auto& v : vertices) {
        vs.push_back(vector_json(v));
      }
      s[z] = std::move(vs);
    }
    j["slices"][label] = std::move(s);
  }
  return j;
}

Json ord_to_json(const OrdData& ord) {
  Json j = Json::object();
  for (const auto& [z, q] : ord) {
    j[z] = rational_to_json(q);
  }
  return j;
}

Fan fan_from_json(const Json& j, const std::string& path) {
  SchemaErrors errs;
  if (!require_object(j, path, errs)) {
    errs.throw_if_any("invalid fan");
  }
  check_keys(j, {"rank", "rays", "cones"}, path, errs);
  std::optional<std::int64_t> rank;
  if (!j.contains("rank")) {
    errs.add(path + ".rank", "missing");
  } else {
    rank = read_int(j["rank"], path + ".rank", errs);
    if (rank && (*rank <= 0 || *rank > 64)) {
      errs.add(path + ".rank", "rank must be between 1 and 64");
      rank.reset();
    }
  }
  std::vector<LatticeVector> rays;
  if (!j.contains("rays")) {
    errs.add(path + ".rays", "missing");
  } else if (!j["rays"].is_array()) {
    errs.add(path + ".rays", "expected an array of rays");
  } else {
    for (std::size_t i = 0; i < j["rays"].size(); ++i) {
      const auto p = path + ".rays[" + std::to_string(i) + "]";
      if (auto r = read_lattice(j["rays"][i], p, errs)) {
        if (rank && r->size() != static_cast<std::size_t>(*rank)) {
          errs.add(p, "expected " + std::to_string(*rank) + " coordinates");
        }
        rays.push_back(std::move(*r));
      }
    }
  }
  std::optional<std::vector<std::vector<RayIndex>>> cones;
  if (j.contains("cones")) {
    if (!j["cones"].is_array()) {
      errs.add(path + ".cones", "expected an array of ray-index lists");
    } else {
      cones.emplace();
      for (std::size_t c = 0; c < j["cones"].size(); ++c) {
        const auto p = path + ".cones[" + std::to_string(c) + "]";
        const auto& cj = j["cones"][c];
        if (!cj.is_array()) {
          errs.add(p, "expected an array of ray indices");
          continue;
        }
        std::vector<RayIndex> cone;
        for (std::size_t k = 0; k < cj.size(); ++k) {
          if (auto idx = read_index(cj[k], p + "[" + std::to_string(k) + "]", errs)) {
            cone.push_back(*idx);
          }
        }
        cones->push_back(std::move(cone));
      }
    }
  }
  errs.throw_if_any("invalid fan");
  try {
    return Fan(static_cast<int>(*rank), std::move(rays), std::move(cones));
  } catch (const ValidationError& e) {
    prefix_and_rethrow(e, path);
  }
  throw DefectError("unreachable");
}

DerivationSet derivation_set_from_json(const Json& j, const std::filesystem::path& base_dir) {
  SchemaErrors errs;
  if (!require_object(j, "$", errs)) {
    errs.throw_if_any("invalid derivation set");
  }
  check_keys(j, {"fan", "derivations", "description"}, "$", errs);
  if (!j.contains("fan")) {
    errs.add("$.fan", "missing");
  }
  if (!j.contains("derivations")) {
    errs.add("$.derivations", "missing");
  } else if (!j["derivations"].is_array()) {
    errs.add("$.derivations", "expected an array");
  }
  if (!j.contains("fan") || !j.contains("derivations") || !j["derivations"].is_array()) {
    errs.throw_if_any("invalid derivation set");
  }
  const Fan fan = fan_from_json(load_ref(j["fan"], base_dir), "$.fan");

  std::vector<RootDerivation> ds;
  const auto& arr = j["derivations"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto p = "$.derivations[" + std::to_string(i) + "]";
    const auto& dj = arr[i];
    if (!require_object(dj, p, errs)) {
      continue;
    }
    check_keys(dj, {"phi", "rho", "e"}, p, errs);
    std::optional<CoeffMonomial> phi = CoeffMonomial::one();
    if (dj.contains("phi")) {
      phi = read_coeff(dj["phi"], p + ".phi", errs);
    }
    std::size_t rho = 0;
    bool rho_ok = false;
    if (!dj.contains("rho")) {
      errs.add(p + ".rho", "missing");
    } else if (const auto idx = read_index(dj["rho"], p + ".rho", errs)) {
      rho = *idx;
      rho_ok = rho < fan.ray_count();
      if (!rho_ok) {
        errs.add(p + ".rho", "ray index out of range");
      }
    }
    std::optional<LatticeVector> e;
    if (!dj.contains("e")) {
      errs.add(p + ".e", "missing");
    } else {
      e = read_lattice(dj["e"], p + ".e", errs);
      if (e && e->size() != static_cast<std::size_t>(fan.rank())) {
        errs.add(p + ".e", "expected " + std::to_string(fan.rank()) + " coordinates");
        e.reset();
      }
    }
    if (phi && rho_ok && e) {
      try {
        ds.push_back(RootDerivation::make(fan, *phi, rho, *e));
      } catch (const ValidationError& err) {
        errs.add(p, err.what());
      }
    }
  }
  errs.throw_if_any("invalid derivation set");
  try {
    return DerivationSet(fan, std::move(ds));
  } catch (const ValidationError& e) {
    prefix_and_rethrow(e, "$.derivations");
  }
  throw DefectError("unreachable");
}

DivisorialFanLite dfan_from_json(const Json& j, const std::filesystem::path& base_dir) {
  SchemaErrors errs;
  if (!require_object(j, "$", errs)) {
    errs.throw_if_any("invalid divisorial fan");
  }
  check_keys(j, {"tail_fan", "base", "slices", "description"}, "$", errs);
  bool complete = true;
  for (const char* key : {"tail_fan", "base", "slices"}) {
    if (!j.contains(key)) {
      errs.add(std::string("$.") + key, "missing");
      complete = false;
    }
  }
  if (!complete) {
    errs.throw_if_any("invalid divisorial fan");
  }
  DivisorialFanLite d{fan_from_json(load_ref(j["tail_fan"], base_dir), "$.tail_fan"), {}, {}, {}, {}};
  const auto n = static_cast<std::size_t>(d.tail_fan.rank());

  const auto& base = j["base"];
  if (require_object(base, "$.base", errs)) {
    check_keys(base, {"kind", "divisors", "degrees"}, "$.base", errs);
    if (!base.contains("kind") || !base["kind"].is_string()) {
      errs.add("$.base.kind", "expected \"p1\" or \"generic\"");
    } else if (base["kind"] == "p1") {
      d.base = BaseKind::ProjectiveLine;
    } else if (base["kind"] != "generic") {
      errs.add("$.base.kind", "expected \"p1\" or \"generic\"");
    }
    if (!base.contains("divisors") || !base["divisors"].is_array()) {
      errs.add("$.base.divisors", "expected an array of names");
    } else {
      for (std::size_t i = 0; i < base["divisors"].size(); ++i) {
        const auto& z = base["divisors"][i];
        if (!z.is_string() || z.get<std::string>().empty()) {
          errs.add("$.base.divisors[" + std::to_string(i) + "]", "expected a nonempty name");
        } else {
          d.divisors.push_back(z.get<std::string>());
        }
      }
    }
    if (base.contains("degrees") && require_object(base["degrees"], "$.base.degrees", errs)) {
      for (const auto& [z, k] : base["degrees"].items()) {
        if (auto v = read_int(k, "$.base.degrees." + z, errs)) {
          d.degrees[z] = *v;
        }
      }
    }
  }

  if (require_object(j["slices"], "$.slices", errs)) {
    for (const auto& [label, per_divisor] : j["slices"].items()) {
      const auto lp = "$.slices." + label;
      if (!require_object(per_divisor, lp, errs)) {
        continue;
      }
      auto& slot = d.slices[label];
      for (const auto& [z, vertices] : per_divisor.items()) {
        const auto zp = lp + "." + z;
        if (!vertices.is_array()) {
          errs.add(zp, "expected an array of vertices");
          continue;
        }
        auto& out = slot[z];
        for (std::size_t i = 0; i < vertices.size(); ++i) {
          const auto vp = zp + "[" + std::to_string(i) + "]";
          if (!vertices[i].is_array() || vertices[i].size() != n) {
            errs.add(vp, "expected " + std::to_string(n) + " rational coordinates");
            continue;
          }
          RationalVector v;
          bool ok = true;
          for (std::size_t c = 0; c < n; ++c) {
            auto q = read_rational(vertices[i][c], vp + "[" + std::to_string(c) + "]", errs);
            ok = ok && q.has_value();
            v.push_back(q.value_or(Rational(0)));
          }
          if (ok) {
            out.push_back(std::move(v));
          }
        }
      }
    }
  }
  errs.throw_if_any("invalid divisorial fan");
  d.validate();
  return d;
}

OrdData ord_from_json(const Json& j, const std::string& path) {
  SchemaErrors errs;
  OrdData ord;
  if (require_object(j, path, errs)) {
    for (const auto& [z, q] : j.items()) {
      if (auto v = read_rational(q, path + "." + z, errs)) {
        ord[z] = *v;
      }
    }
  }
  errs.throw_if_any("invalid ord data");
  return ord;
}

Json roots_to_json(const std::vector<RootEntry>& roots) {
  Json a = Json::array();
  for (const auto& r : roots) {
    Json o;
    o["e"] = r.e;
    o["ray"] = r.ray;
    a.push_back(std::move(o));
  }
  return a;
}

Json decision_to_json(const Decision& d) {
  Json j;
  j["mode"] = to_string(d.mode);
  j["finite"] = d.finite;
  j["witness"] = d.witness ? Json(*d.witness) : Json(nullptr);
  j["failed_check"] = d.failed_check.empty() ? Json(nullptr) : Json(d.failed_check);
  j["cycles_enumerated"] = d.cycles_enumerated;
  j["overflow"] = d.overflow;
  j["cross_checked"] = d.cross_checked;
  return j;
}

Json structure_to_json(const StructureReport& r) {
  Json j;
  j["mode"] = to_string(r.mode);
  j["finite"] = true;
  j["summands"] = r.summand_ranks;
  j["nilpotent_dim"] = r.nilpotent_dim;
  j["total_dim"] = r.total_dim;
  j["blocks"] = r.partition.blocks;
  j["leftover"] = r.partition.leftover;
  j["nilpotent_generators"] = Json::array();
  for (const auto& d : r.nilpotent_generators) {
    j["nilpotent_generators"].push_back(derivation_to_json(d));
  }
  j["basis"] = Json::array();
  for (const auto& x : r.basis) {
    j["basis"].push_back(lie_element_to_json(x));
  }
  return j;
}

Json normalized_to_json(const NormalizedSet& n) {
  Json j;
  j["set"] = derivation_set_to_json(n.set);
  j["kappa"] = n.graph.kappa;
  j["edges"] = n.graph.edges;
  j["psi"] = Json::array();
  for (const auto& p : n.psi) {
    j["psi"].push_back(to_string(p));
  }
  j["marking"] = Json::array();
  for (const auto& [edge, value] : n.marking.values()) {
    Json m;
    m["from"] = edge.first;
    m["to"] = edge.second;
    m["value"] = to_string(value);
    j["marking"].push_back(std::move(m));
  }
  return j;
}

Json realization_to_json(const Realization& r, const RealizationCheck& check) {
  Json j;
  j["dependent"] = r.dependent;
  j["kappa"] = r.graph.kappa;
  j["edges"] = r.graph.edges;
  j["variables"] = r.fields.empty() ? Json::array() : Json(r.fields.front().variables());
  j["fields"] = Json::array();
  for (const auto& f : r.fields) {
    j["fields"].push_back(f.to_string());
  }
  j["z_fields"] = Json::array();
  for (const auto& f : r.z_fields) {
    j["z_fields"].push_back(f.to_string());
  }
  j["check"]["ok"] = check.ok;
  j["check"]["pairs_checked"] = check.pairs_checked;
  j["check"]["failing_pair"] = check.failing_pair ? Json(*check.failing_pair) : Json(nullptr);
  return j;
}

Json vertical_to_json(const VerticalReport& r, const QDivisor& de) {
  Json j;
  j["ok"] = r.ok;
  j["verdict"] = r.verdict;
  j["toric_ok"] = r.toric_ok;
  j["D_e"] = Json::object();
  for (const auto& [z, q] : de) {
    j["D_e"][z] = rational_to_json(q);
  }
  j["divisors"] = Json::array();
  for (const auto& c : r.divisors) {
    Json o;
    o["divisor"] = c.divisor;
    o["ord"] = rational_to_json(c.ord);
    o["coefficient"] = rational_to_json(c.coefficient);
    o["ok"] = c.ok;
    j["divisors"].push_back(std::move(o));
  }
  j["failures"] = r.failures;
  return j;
}

Json closure_to_json(const ClosureResult& c, bool include_basis) {
  Json j;
  j["mode"] = to_string(c.mode);
  j["stabilized"] = c.stabilized;
  j["dim"] = c.dim;
  j["steps"] = c.steps;
  j["degrees_seen"] = Json::array();
  for (const auto& e : c.degrees_seen) {
    j["degrees_seen"].push_back(e);
  }
  if (include_basis) {
    j["basis"] = Json::array();
    for (std::size_t i = 0; i < c.basis.size(); ++i) {
      Json b;
      b["element"] = lie_element_to_json(c.basis[i]);
      b["parent"] = c.parent[i] ? Json(*c.parent[i]) : Json(nullptr);
      j["basis"].push_back(std::move(b));
    }
  }
  return j;
}

}  // namespace rootlie
