#include "acceptance.hpp"

#include "rootlie/classify.hpp"
#include "rootlie/errors.hpp"
#include "rootlie/io.hpp"
#include "rootlie/oracle.hpp"
#include "rootlie/realize.hpp"
#include "rootlie/structure.hpp"
#include "rootlie/verticality.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using rootlie::Json;

struct RunConfig {
  std::string command;
  std::string input;
  std::string mode = "k0";
  std::int64_t box = 3;
  std::size_t cap_basis = 500;
  std::size_t cap_steps = 200;
  std::size_t cap_cycles = rootlie::kDefaultCycleCap;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out;
  // command specific
  std::vector<std::size_t> pair;
  std::string degree;
  std::size_t rho = 0;
  std::string ord;
  std::size_t samples = 0;
  bool random = false;
  int criterion = 0;
  std::string data_dir;
};

struct Report {
  Json result;
  std::string text;
  int status = 0;
};

struct Input {
  std::string bytes;
  Json json;
  std::filesystem::path dir;
};

Input load(const std::string& path) {
  Input in;
  in.bytes = rootlie::read_file(path);
  in.json = rootlie::parse_json(in.bytes, path);
  in.dir = std::filesystem::path(path).parent_path();
  return in;
}

rootlie::LatticeVector parse_degree(const std::string& text) {
  rootlie::LatticeVector e;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      e.push_back(std::stoll(part, &used));
      if (used != part.size()) {
        throw std::invalid_argument(part);
      }
    } catch (const std::logic_error&) {
      throw rootlie::ValidationError("--degree: expected comma-separated integers, got \"" +
                                     text + "\"");
    }
  }
  if (e.empty()) {
    throw rootlie::ValidationError("--degree is required");
  }
  return e;
}

rootlie::Fan fan_of(const Input& in) {
  if (in.json.is_object() && in.json.contains("derivations")) {
    return rootlie::derivation_set_from_json(in.json, in.dir).fan();
  }
  return rootlie::fan_from_json(in.json);
}

std::string vec(const rootlie::LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? "," : "") + std::to_string(v[i]);
  }
  return s + ")";
}

std::string indices(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? "," : "") + std::to_string(v[i]);
  }
  return s + "]";
}

std::string element_text(const rootlie::LieElement& x) {
  if (x.is_zero()) {
    return "0";
  }
  std::string s;
  for (const auto& h : x.components()) {
    if (!s.empty()) {
      s += " + ";
    }
    s += "[phi=" + rootlie::to_string(h.phi) + " v=(";
    for (std::size_t i = 0; i < h.v.size(); ++i) {
      s += (i ? "," : "") + rootlie::to_string(h.v[i]);
    }
    s += ") e=" + vec(h.e) + "]";
  }
  return s;
}

Report cmd_roots(const RunConfig& c, const Input& in) {
  const auto fan = fan_of(in);
  const auto roots = rootlie::enumerate_roots(fan, rootlie::Box::cube(fan.rank(), c.box));
  Report r;
  r.result["box"] = c.box;
  r.result["count"] = roots.size();
  r.result["roots"] = Json::array();
  std::ostringstream t;
  t << roots.size() << " Demazure roots in [-" << c.box << "," << c.box << "]^" << fan.rank()
    << "\n";
  for (const auto& root : roots) {
    Json o;
    o["e"] = root.e;
    o["ray"] = root.ray;
    const auto el = rootlie::is_elementary_root(fan, root.e);
    o["elementary"] = el.has_value();
    o["partner"] = el ? Json(el->partner) : Json(nullptr);
    r.result["roots"].push_back(std::move(o));
    t << "  e=" << vec(root.e) << " ray=" << root.ray;
    if (el) {
      t << " elementary, partner ray " << el->partner;
    }
    t << "\n";
  }
  r.text = t.str();
  return r;
}

Report cmd_check_root(const RunConfig& c, const Input& in) {
  const auto fan = fan_of(in);
  const auto e = parse_degree(c.degree);
  if (e.size() != static_cast<std::size_t>(fan.rank())) {
    throw rootlie::DimensionError("--degree has " + std::to_string(e.size()) +
                                  " coordinates, fan rank is " + std::to_string(fan.rank()));
  }
  const auto ray = rootlie::is_demazure_root(fan, e);
  const auto el = rootlie::is_elementary_root(fan, e);
  Report r;
  r.result["e"] = e;
  r.result["demazure_root"] = ray.has_value();
  r.result["ray"] = ray ? Json(*ray) : Json(nullptr);
  r.result["elementary"] = el.has_value();
  r.result["partner"] = el ? Json(el->partner) : Json(nullptr);
  r.result["pairings"] = Json::array();
  for (const auto& rho : fan.rays()) {
    r.result["pairings"].push_back(rootlie::pairing(rho, e));
  }
  std::ostringstream t;
  t << "e=" << vec(e) << ": ";
  if (!ray) {
    t << "not a Demazure root\n";
  } else {
    t << "Demazure root of ray " << *ray;
    if (el) {
      t << ", elementary with partner ray " << el->partner;
    }
    t << "\n";
  }
  r.text = t.str();
  return r;
}

Report cmd_bracket(const RunConfig& c, const Input& in) {
  const auto s = rootlie::derivation_set_from_json(in.json, in.dir);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (!c.pair.empty()) {
    if (c.pair.size() != 2 || c.pair[0] >= s.size() || c.pair[1] >= s.size()) {
      throw rootlie::ValidationError("--pair needs two derivation indices below " +
                                     std::to_string(s.size()));
    }
    pairs.emplace_back(c.pair[0], c.pair[1]);
  } else {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        pairs.emplace_back(i, j);
      }
    }
  }
  Report r;
  r.result["brackets"] = Json::array();
  std::ostringstream t;
  for (const auto& [i, j] : pairs) {
    const auto x = rootlie::bracket_elements(rootlie::LieElement::from_root(s.fan(), s[i]),
                                             rootlie::LieElement::from_root(s.fan(), s[j]));
    Json o;
    o["pair"] = {i, j};
    o["value"] = rootlie::lie_element_to_json(x);
    std::optional<rootlie::RootDerivation> as_root;
    if (x.size() == 1) {
      as_root = rootlie::as_root_derivation(s.fan(), x.components().front());
    }
    o["root_derivation"] = as_root ? rootlie::derivation_to_json(*as_root) : Json(nullptr);
    r.result["brackets"].push_back(std::move(o));
    t << "[D" << i << ",D" << j << "] = " << element_text(x);
    if (as_root) {
      t << "  (root derivation: phi=" << rootlie::to_string(as_root->phi)
        << " ray=" << as_root->rho << ")";
    }
    t << "\n";
  }
  r.text = t.str();
  return r;
}

Report cmd_classify(const RunConfig& c, const Input& in) {
  const auto s = rootlie::derivation_set_from_json(in.json, in.dir);
  const auto en = rootlie::enumerate_cyclic_subsets(s, c.cap_cycles);
  Report r;
  r.result["cyclic_subsets"] = Json::array();
  std::ostringstream t;
  t << en.cycles.size() << " cyclic subsets" << (en.overflow ? " (cap reached)" : "") << "\n";
  for (const auto& cycle : en.cycles) {
    const bool as = rootlie::is_almost_simple(s, cycle);
    const bool simple = rootlie::is_simple(s, cycle);
    Json o;
    o["cycle"] = cycle;
    o["almost_simple"] = as;
    o["simple"] = simple;
    r.result["cyclic_subsets"].push_back(std::move(o));
    t << "  " << indices(cycle) << ": "
      << (simple ? "simple" : as ? "almost simple, not simple" : "not almost simple") << "\n";
  }
  r.result["overflow"] = en.overflow;
  const bool very = rootlie::is_very_simple(s);
  r.result["very_simple"] = very;
  t << "very simple: " << (very ? "yes" : "no") << "\n";
  r.text = t.str();
  return r;
}

Report cmd_decide(const RunConfig& c, const Input& in) {
  const auto s = rootlie::derivation_set_from_json(in.json, in.dir);
  const auto mode = rootlie::parse_mode(c.mode);
  const auto d = rootlie::decide_finite(s, mode, c.cap_cycles);
  Report r;
  r.result = rootlie::decision_to_json(d);
  std::ostringstream t;
  t << "mode " << c.mode << ": " << (d.finite ? "finite" : "infinite");
  if (d.witness) {
    t << ", witness " << indices(*d.witness) << " (" << d.failed_check << ")";
  }
  t << "; " << d.cycles_enumerated << " cyclic subsets enumerated"
    << (d.overflow ? " (cap reached)" : "") << "\n";
  if (d.finite) {
    const auto rep = rootlie::semidirect_structure(
        s, mode, {c.cap_basis, c.cap_basis, c.cap_cycles});
    r.result["summands"] = rep.summand_ranks;
    r.result["nilpotent_dim"] = rep.nilpotent_dim;
    r.result["total_dim"] = rep.total_dim;
    for (auto rank : rep.summand_ranks) {
      t << "  sl_" << rank << "\n";
    }
    t << "  nilpotent ideal dim " << rep.nilpotent_dim << ", total dim " << rep.total_dim << "\n";
  }
  r.text = t.str();
  return r;
}

Report cmd_structure(const RunConfig& c, const Input& in) {
  const auto s = rootlie::derivation_set_from_json(in.json, in.dir);
  const auto mode = rootlie::parse_mode(c.mode);
  const auto rep = rootlie::semidirect_structure(s, mode, {c.cap_basis, c.cap_basis, c.cap_cycles});
  Report r;
  r.result = rootlie::structure_to_json(rep);
  std::ostringstream t;
  t << "mode " << c.mode << ": ";
  for (std::size_t i = 0; i < rep.summand_ranks.size(); ++i) {
    t << (i ? " + " : "") << "sl_" << rep.summand_ranks[i];
  }
  if (rep.summand_ranks.empty()) {
    t << "no semisimple part";
  }
  t << "; nilpotent ideal dim " << rep.nilpotent_dim << "; total dim " << rep.total_dim << "\n";
  for (std::size_t b = 0; b < rep.partition.blocks.size(); ++b) {
    t << "  block " << b << ": " << indices(rep.partition.blocks[b]) << "\n";
  }
  t << "  leftover: " << indices(rep.partition.leftover) << "\n";
  r.text = t.str();
  return r;
}

Report cmd_normalize(const RunConfig&, const Input& in) {
  const auto s = rootlie::derivation_set_from_json(in.json, in.dir);
  const auto n = rootlie::normalize_simple_set(s);
  Report r;
  r.result = rootlie::normalized_to_json(n);
  std::ostringstream t;
  for (std::size_t k = 0; k < n.psi.size(); ++k) {
    t << "psi(" << k + 1 << ") = " << rootlie::to_string(n.psi[k]) << "\n";
  }
  for (std::size_t i = 0; i < n.set.size(); ++i) {
    t << "D" << i << ": phi " << rootlie::to_string(s[i].phi) << " -> "
      << rootlie::to_string(n.set[i].phi) << "\n";
  }
  r.text = t.str();
  return r;
}

Report cmd_realize(const RunConfig& c, const Input& in) {
  const auto s = rootlie::derivation_set_from_json(in.json, in.dir);
  const auto real = rootlie::realize_almost_simple(s);
  const std::size_t samples = c.samples == 0 ? s.size() * s.size() : c.samples;
  const auto check = rootlie::verify_realization(s, real, samples, c.seed);
  Report r;
  r.result = rootlie::realization_to_json(real, check);
  std::ostringstream t;
  for (std::size_t i = 0; i < real.fields.size(); ++i) {
    t << "D" << i << " -> " << real.fields[i].to_string();
    if (real.dependent) {
      t << "   (restriction of " << real.z_fields[i].to_string() << ")";
    }
    t << "\n";
  }
  t << "commutator check: " << (check.ok ? "ok" : "FAILED") << " on " << check.pairs_checked
    << " pairs\n";
  r.text = t.str();
  if (!check.ok) {
    throw rootlie::DefectError("realization does not preserve brackets");
  }
  return r;
}

Report cmd_vertical(const RunConfig& c, const Input& in) {
  const auto dfan = rootlie::dfan_from_json(in.json, in.dir);
  const auto e = parse_degree(c.degree);
  if (e.size() != static_cast<std::size_t>(dfan.tail_fan.rank())) {
    throw rootlie::DimensionError("--degree does not match the tail fan rank");
  }
  rootlie::OrdData ord;
  if (!c.ord.empty()) {
    ord = rootlie::ord_from_json(rootlie::parse_json(rootlie::read_file(c.ord), c.ord));
  }
  const auto de = rootlie::compute_De(dfan, e);
  const auto rep = rootlie::vertical_check(dfan, ord, c.rho, e);
  Report r;
  r.result = rootlie::vertical_to_json(rep, de);
  std::ostringstream t;
  t << "verdict: " << rep.verdict << "\n";
  t << "toric root conditions: " << (rep.toric_ok ? "ok" : "fail") << "\n";
  for (const auto& d : rep.divisors) {
    t << "  " << d.divisor << ": ord " << rootlie::to_string(d.ord) << " + D_e "
      << rootlie::to_string(d.coefficient) << (d.ok ? " >= 0" : " < 0") << "\n";
  }
  if (dfan.base == rootlie::BaseKind::ProjectiveLine) {
    const bool exists = rootlie::exists_phi_p1(dfan, e);
    r.result["exists_phi"] = exists;
    t << "nonzero phi with div(phi) + D_e >= 0 exists: " << (exists ? "yes" : "no") << "\n";
  }
  r.text = t.str();
  return r;
}

Report cmd_oracle(const RunConfig& c, const std::optional<Input>& in) {
  const auto mode = rootlie::parse_mode(c.mode);
  std::optional<rootlie::DerivationSet> s;
  if (c.random) {
    rootlie::Rng rng(c.seed);
    s = rootlie::random_derivation_set(rng);
  } else {
    s = rootlie::derivation_set_from_json(in->json, in->dir);
  }
  const auto closure = rootlie::bracket_closure(*s, mode, {c.cap_basis, c.cap_steps});
  const auto d = rootlie::decide_finite(*s, mode, c.cap_cycles);
  std::optional<std::size_t> dim;
  if (d.finite) {
    dim = rootlie::semidirect_structure(*s, mode, {c.cap_basis, c.cap_basis, c.cap_cycles})
              .total_dim;
  }
  const auto cmp = rootlie::compare(d, closure, dim);
  const auto chain = rootlie::rho_bar_chain(s->fan(), closure);
  Report r;
  if (c.random) {
    r.result["instance"] = rootlie::derivation_set_to_json(*s);
  }
  r.result["verdict"] = rootlie::to_string(cmp.verdict);
  r.result["message"] = cmp.message;
  r.result["decision"] = rootlie::decision_to_json(d);
  r.result["structure_dim"] = dim ? Json(*dim) : Json(nullptr);
  r.result["rho_bar_chain"] = chain;
  r.result["closure"] = rootlie::closure_to_json(closure);
  std::ostringstream t;
  t << rootlie::to_string(cmp.verdict) << ": " << cmp.message << "\n";
  t << "rho_bar chain:";
  for (auto v : chain) {
    t << " " << v;
  }
  t << "\n";
  r.text = t.str();
  r.status = cmp.verdict == rootlie::Verdict::Fail ? 2 : 0;
  return r;
}

Report cmd_selftest(const RunConfig& c) {
  rootlie::acceptance::Options opts;
  opts.data_dir = c.data_dir.empty() ? rootlie::acceptance::default_data_dir()
                                     : std::filesystem::path(c.data_dir);
  std::vector<rootlie::acceptance::CriterionResult> results;
  if (c.criterion != 0) {
    results.push_back(rootlie::acceptance::run_criterion(c.criterion, opts));
  } else {
    results = rootlie::acceptance::run_all(opts);
  }
  Report r;
  r.result["criteria"] = Json::array();
  std::ostringstream t;
  bool all = true;
  for (const auto& res : results) {
    Json o;
    o["id"] = res.id;
    o["name"] = res.name;
    o["pass"] = res.pass;
    o["seconds"] = res.seconds;
    o["limit_seconds"] = res.limit_seconds;
    o["detail"] = res.detail;
    r.result["criteria"].push_back(std::move(o));
    t << rootlie::acceptance::format_line(res) << "\n";
    all = all && res.pass;
  }
  r.result["all_pass"] = all;
  r.text = t.str();
  r.status = all ? 0 : 2;
  return r;
}

int run(const RunConfig& c) {
  std::optional<Input> in;
  if (!c.input.empty()) {
    in = load(c.input);
  } else if (c.command != "selftest" && !(c.command == "oracle" && c.random)) {
    throw rootlie::ValidationError("an input file is required");
  }
  Report r;
  if (c.command == "roots") {
    r = cmd_roots(c, *in);
  } else if (c.command == "check-root") {
    r = cmd_check_root(c, *in);
  } else if (c.command == "bracket") {
    r = cmd_bracket(c, *in);
  } else if (c.command == "classify") {
    r = cmd_classify(c, *in);
  } else if (c.command == "decide") {
    r = cmd_decide(c, *in);
  } else if (c.command == "structure") {
    r = cmd_structure(c, *in);
  } else if (c.command == "normalize") {
    r = cmd_normalize(c, *in);
  } else if (c.command == "realize") {
    r = cmd_realize(c, *in);
  } else if (c.command == "vertical") {
    r = cmd_vertical(c, *in);
  } else if (c.command == "oracle") {
    r = cmd_oracle(c, in);
  } else {
    r = cmd_selftest(c);
  }

  std::string body;
  if (c.format == "json") {
    Json report;
    report["tool"] = "rootlie";
    report["version"] = rootlie::tool_version();
    report["command"] = c.command;
    report["input"] = c.input.empty() ? Json(nullptr) : Json(c.input);
    report["input_sha256"] = in ? Json(rootlie::sha256_hex(in->bytes)) : Json(nullptr);
    report["config"]["mode"] = c.mode;
    report["config"]["box"] = c.box;
    report["config"]["cap_basis"] = c.cap_basis;
    report["config"]["cap_steps"] = c.cap_steps;
    report["config"]["cap_cycles"] = c.cap_cycles;
    report["config"]["seed"] = c.seed;
    report["result"] = std::move(r.result);
    body = report.dump(2) + "\n";
  } else {
    body = r.text;
  }
  if (c.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
      throw rootlie::ValidationError("cannot write " + c.out);
    }
    f << body;
  }
  return r.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root derivations on toric varieties: roots, brackets, finiteness, structure"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;

  app.add_option("--mode", c.mode, "Scalars: k0 or k")
      ->check(CLI::IsMember({"k0", "k"}))
      ->capture_default_str();
  app.add_option("--box", c.box, "Root search box [-N, N]^n")
      ->check(CLI::Range(std::int64_t{0}, std::int64_t{1000}))
      ->capture_default_str();
  app.add_option("--cap-basis", c.cap_basis, "Basis cap for closures")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--cap-steps", c.cap_steps, "Pass cap for the oracle closure")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--cap-cycles", c.cap_cycles, "Cap on enumerated cyclic subsets")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", c.seed, "Seed for sampling and random instances")->capture_default_str();
  app.add_option("--format", c.format, "Report format: json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", c.out, "Write the report here instead of stdout");

  auto with_input = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("input", c.input, "Input JSON file");
    if (required) {
      opt->required();
    }
    return sub;
  };
  with_input(app.add_subcommand("roots", "Enumerate Demazure roots in a box"));
  auto* check = with_input(app.add_subcommand("check-root", "Test a degree for being a root"));
  check->add_option("--degree", c.degree, "Lattice vector, e.g. --degree=-1,2")->required();
  auto* br = with_input(app.add_subcommand("bracket", "Brackets of pairs of derivations"));
  br->add_option("--pair", c.pair, "Two derivation indices")->expected(2);
  with_input(app.add_subcommand("classify", "Label every cyclic subset"));
  with_input(app.add_subcommand("decide", "Decide finite-dimensionality"));
  with_input(app.add_subcommand("structure", "sl summands and nilpotent ideal"));
  with_input(app.add_subcommand("normalize", "Rescale a very simple block to constants"));
  auto* real = with_input(app.add_subcommand("realize", "Vector-field realization"));
  real->add_option("--samples", c.samples, "Bracket pairs to verify (default: all)");
  auto* vert = with_input(app.add_subcommand("vertical", "Verticality conditions for (rho, e)"));
  vert->add_option("--rho", c.rho, "Ray index in the tail fan")->required();
  vert->add_option("--degree", c.degree, "Degree e, e.g. --degree=-1,1")->required();
  vert->add_option("--ord", c.ord, "OrdData JSON file (default: all orders 0)");
  auto* orc = with_input(app.add_subcommand("oracle", "Brute-force closure and comparison"), false);
  orc->add_flag("--random", c.random, "Use a random instance drawn with --seed");
  auto* self = app.add_subcommand("selftest", "Run the acceptance suite");
  self->add_option("--criterion", c.criterion, "Run a single criterion")
      ->check(CLI::Range(1, rootlie::acceptance::kCriterionCount));
  self->add_option("--data", c.data_dir, "Corpus directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    return run(c);
  } catch (const rootlie::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& d : e.details()) {
      std::cerr << "  " << d << "\n";
    }
    return 1;
  } catch (const rootlie::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const rootlie::DefectError& e) {
    std::cerr << "internal defect: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal defect: " << e.what() << "\n";
    return 2;
  }
}
