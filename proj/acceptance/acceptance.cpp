#include "acceptance.hpp"

#include "rootlie/classify.hpp"
#include "rootlie/errors.hpp"
#include "rootlie/io.hpp"
#include "rootlie/marking.hpp"
#include "rootlie/oracle.hpp"
#include "rootlie/realize.hpp"
#include "rootlie/rng.hpp"
#include "rootlie/structure.hpp"
#include "rootlie/verticality.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>

namespace rootlie::acceptance {

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

DerivationSet load_set(const Options& o, const std::string& name) {
  const auto path = o.data_dir / name;
  return derivation_set_from_json(parse_json(read_file(path), path.string()), path.parent_path());
}

DivisorialFanLite load_dfan(const Options& o, const std::string& name) {
  const auto path = o.data_dir / name;
  return dfan_from_json(parse_json(read_file(path), path.string()), path.parent_path());
}

OrdData load_ord(const Options& o, const std::string& name) {
  const auto path = o.data_dir / name;
  return ord_from_json(parse_json(read_file(path), path.string()));
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? "," : "") + std::to_string(v[i]);
  }
  return s + "]";
}

Outcome sl3_example(const Options& o) {
  Outcome out;
  const auto s = load_set(o, "p2_sl3.json");
  out.require(s.size() == 6, "expected six derivations");
  for (auto mode : {Mode::OverK0, Mode::OverK}) {
    const auto tag = "mode " + to_string(mode) + ": ";
    const auto d = decide_finite(s, mode);
    out.require(d.finite, tag + "decided infinite");
    out.require(d.cross_checked, tag + "exhaustive cross-check did not complete");
    const auto r = semidirect_structure(s, mode);
    out.require(r.summand_ranks == std::vector<std::size_t>{3},
                tag + "summand ranks " + join(r.summand_ranks));
    out.require(r.nilpotent_dim == 0, tag + "nilpotent dim " + std::to_string(r.nilpotent_dim));
    out.require(r.total_dim == 8, tag + "total dim " + std::to_string(r.total_dim));
  }
  if (out.pass) {
    out.detail = "finite in k0 and k; single sl summand r=3, nilpotent 0, total 8";
  }
  return out;
}

Outcome realization_example(const Options& o) {
  Outcome out;
  const auto s = load_set(o, "p2_sl3.json");
  const std::vector<std::string> fields = {
      "x2*d/dx1", "d/dx2", "-x1^2*d/dx1 - x1*x2*d/dx2",
      "d/dx1",    "-x1*x2*d/dx1 - x2^2*d/dx2", "x1*d/dx2"};
  const std::vector<std::string> z_fields = {"z2*d/dz1", "z3*d/dz2", "z1*d/dz3",
                                             "z3*d/dz1", "z2*d/dz3", "z1*d/dz2"};
  const auto r = realize_almost_simple(s);
  out.require(r.dependent, "rays should satisfy kappa_1 + kappa_2 + kappa_3 = 0");
  out.require(r.fields.size() == 6 && r.z_fields.size() == 6, "expected six fields");
  for (std::size_t i = 0; out.pass && i < fields.size(); ++i) {
    out.require(r.fields[i].to_string() == fields[i],
                "field " + std::to_string(i) + ": got " + r.fields[i].to_string());
    out.require(r.z_fields[i].to_string() == z_fields[i],
                "z-field " + std::to_string(i) + ": got " + r.z_fields[i].to_string());
  }
  const auto check = verify_realization(s, r, 36);
  out.require(check.ok && check.pairs_checked == 36, "commutators do not match brackets");
  if (out.pass) {
    out.detail = "six x-fields and six z-fields match; 36 commutators verified";
  }
  return out;
}

Outcome root_enumeration(const Options& o) {
  Outcome out;
  const auto s = load_set(o, "p2_sl3.json");
  const auto roots = enumerate_roots(s.fan(), Box::cube(2, 3));
  std::set<std::pair<LatticeVector, RayIndex>> got;
  for (const auto& r : roots) {
    got.insert({r.e, r.ray});
  }
  const std::set<std::pair<LatticeVector, RayIndex>> expected = {
      {{-1, 1}, 0}, {{0, -1}, 1}, {{1, 0}, 2}, {{-1, 0}, 0}, {{0, 1}, 2}, {{1, -1}, 1}};
  out.require(roots.size() == 6, "found " + std::to_string(roots.size()) + " roots");
  out.require(got == expected, "root set differs from e_1..e_6");
  if (out.pass) {
    out.detail = "exactly the six roots e_1..e_6 with their rays";
  }
  return out;
}

Outcome infinite_detection(const Options& o) {
  Outcome out;
  const auto s = load_set(o, "a2_infinite_pair.json");
  const auto d = decide_finite(s, Mode::OverK0);
  out.require(!d.finite, "decided finite");
  out.require(d.witness == std::vector<std::size_t>{0, 1},
              "witness " + (d.witness ? join(*d.witness) : std::string("none")));
  const auto closure = bracket_closure(s, Mode::OverK0, {50, 50});
  out.require(!closure.stabilized, "closure stabilized under caps (50, 50)");
  out.require(closure.dim >= 50, "closure stopped with " + std::to_string(closure.dim) +
                                     " basis elements");
  const auto chain = rho_bar_chain(s.fan(), closure);
  out.require(chain.size() >= 3, "rho_bar chain too short");
  out.require(std::adjacent_find(chain.begin(), chain.end(), std::greater_equal<>()) ==
                  chain.end(),
              "rho_bar chain not strictly increasing");
  const auto steps = claim_chain(s.fan(), s[0], s[1], 2);
  out.require(steps.size() == 2, "claim iteration stopped early");
  for (const auto& st : steps) {
    out.require(st.nonzero && st.next && st.same_ray && st.rho_bar_increases &&
                    st.cyclic_not_almost_simple,
                "claim step failed");
  }
  if (out.pass) {
    out.require(closure.degrees_seen.contains(steps[0].next->e),
                "first claim degree not reached by the closure");
  }
  if (out.pass) {
    std::ostringstream msg;
    msg << "witness [0,1]; closure dim " << closure.dim << " after " << closure.steps
        << " passes; rho_bar chain";
    for (auto v : chain) {
      msg << ' ' << v;
    }
    msg << "; claim rho_bar " << steps[0].rho_bar_before << " -> " << steps[0].rho_bar_after
        << " -> " << steps[1].rho_bar_after;
    out.detail = msg.str();
  }
  return out;
}

Outcome mode_separation(const Options& o) {
  Outcome out;
  const auto s = load_set(o, "p2_sl3_f.json");
  const auto k0 = decide_finite(s, Mode::OverK0);
  const auto k = decide_finite(s, Mode::OverK);
  out.require(k0.finite, "k0: decided infinite");
  out.require(!k.finite, "k: decided finite");
  out.require(k.witness && std::find(k.witness->begin(), k.witness->end(), 0) != k.witness->end(),
              "k: witness does not pass through D_1");
  out.require(k.failed_check == "coefficient-cycle-product", "k: failed check " + k.failed_check);
  if (out.pass) {
    const auto closure = bracket_closure(s, Mode::OverK, {200, 200});
    out.require(!closure.stabilized, "k: closure stabilized");
    out.require(compare(k, closure).verdict == Verdict::Pass, "k: oracle comparison failed");
  }
  if (out.pass) {
    out.detail = "k0 finite; k infinite with witness " + join(*k.witness);
  }
  return out;
}

Outcome criterion_oracle(const Options& o) {
  Outcome out;
  Rng rng(o.seed);
  const ClosureCaps caps{400, 200};
  std::size_t finite = 0;
  std::size_t infinite = 0;
  for (int i = 0; out.pass && i < 500; ++i) {
    const auto s = random_derivation_set(rng);
    for (auto mode : {Mode::OverK0, Mode::OverK}) {
      const auto d = decide_finite(s, mode);
      const auto closure = bracket_closure(s, mode, caps);
      std::optional<std::size_t> dim;
      if (d.finite) {
        dim = semidirect_structure(s, mode).total_dim;
        ++finite;
      } else {
        ++infinite;
      }
      const auto c = compare(d, closure, dim);
      const auto where = "instance " + std::to_string(i) + " mode " + to_string(mode) + ": ";
      out.require(c.verdict != Verdict::Fail, where + c.message + " input " +
                                                  derivation_set_to_json(s).dump());
      out.require(!d.finite || c.verdict == Verdict::Pass,
                  where + "finite decision but " + c.message);
    }
  }
  if (out.pass) {
    out.detail = "500 instances, " + std::to_string(finite) + " finite and " +
                 std::to_string(infinite) + " infinite verdicts over both modes, no FAIL";
  }
  return out;
}

HomogeneousDerivation random_homogeneous(Rng& rng, int n) {
  HomogeneousDerivation h;
  for (int k = 0; k < n; ++k) {
    h.v.push_back(make_rational(rng.uniform(-4, 4), rng.uniform(1, 3)));
    h.e.push_back(rng.uniform(-3, 3));
  }
  if (rng.coin(50)) {
    h.phi["f"] = rng.uniform(-2, 2);
    if (h.phi["f"] == 0) {
      h.phi.clear();
    }
  }
  return h;
}

LieElement lie(const std::optional<HomogeneousDerivation>& h) {
  return h ? LieElement(*h) : LieElement();
}

/// D applied to c * chi^w, as (constant, symbols, exponent).
std::optional<MonomialTerm> apply(const HomogeneousDerivation& d, const MonomialTerm& t) {
  const auto r = evaluate(d, t.exponent);
  if (!r) {
    return std::nullopt;
  }
  return MonomialTerm{r->coefficient * t.coefficient, r->exponent};
}

Outcome algebraic_properties(const Options& o) {
  Outcome out;
  Rng rng(o.seed + 7);
  for (int i = 0; out.pass && i < 1000; ++i) {
    const int n = static_cast<int>(rng.uniform(1, 3));
    const auto a = random_homogeneous(rng, n);
    const auto b = random_homogeneous(rng, n);
    const auto c = random_homogeneous(rng, n);
    const LieElement ab = lie(bracket(a, b));
    const LieElement ba = lie(bracket(b, a));
    out.require((ab + ba).is_zero(), "antisymmetry fails on triple " + std::to_string(i));
    const LieElement x(a), y(b), z(c);
    const auto jacobi = bracket_elements(x, bracket_elements(y, z)) +
                        bracket_elements(y, bracket_elements(z, x)) +
                        bracket_elements(z, bracket_elements(x, y));
    out.require(jacobi.is_zero(), "Jacobi fails on triple " + std::to_string(i));
  }
  for (int i = 0; out.pass && i < 1000; ++i) {
    const int n = static_cast<int>(rng.uniform(1, 3));
    const auto d = random_homogeneous(rng, n);
    const auto dp = random_homogeneous(rng, n);
    LatticeVector u;
    for (int k = 0; k < n; ++k) {
      u.push_back(rng.uniform(-4, 4));
    }
    const MonomialTerm start{CoeffMonomial::one(), u};
    Rational lhs = 0;
    if (const auto t = evaluate(dp, u)) {
      if (const auto s = apply(d, *t)) {
        lhs += s->coefficient.constant();
      }
    }
    if (const auto t = evaluate(d, u)) {
      if (const auto s = apply(dp, *t)) {
        lhs -= s->coefficient.constant();
      }
    }
    Rational rhs = 0;
    if (const auto br = bracket(d, dp)) {
      if (const auto t = evaluate(*br, u)) {
        rhs = t->coefficient.constant();
        out.require(t->exponent == u + d.e + dp.e && t->coefficient.exponents() == add(d.phi, dp.phi),
                    "commutator lands in the wrong degree");
      }
    }
    out.require(lhs == rhs, "operational commutator differs on sample " + std::to_string(i));
  }
  if (out.pass) {
    out.detail = "1000 triples antisymmetric and Jacobi; 1000 operational commutators exact";
  }
  return out;
}

Outcome almost_simple_equivalence(const Options& o) {
  Outcome out;
  Rng rng(o.seed + 11);
  std::size_t tested = 0;
  std::size_t almost_simple = 0;
  const RandomInstanceOptions gen{6, 3, 3, 0};
  while (out.pass && tested < 500) {
    const auto s = random_derivation_set(rng, gen);
    const auto cycles = enumerate_cyclic_subsets(s, 10'000).cycles;
    if (cycles.empty()) {
      continue;
    }
    const auto& cycle = cycles[rng.index(cycles.size())];
    LatticeVector sum(static_cast<std::size_t>(s.fan().rank()), 0);
    for (auto i : cycle) {
      sum = sum + s[i].e;
    }
    const bool zero = std::all_of(sum.begin(), sum.end(), [](auto x) { return x == 0; });
    const bool as = is_almost_simple(s, cycle);
    almost_simple += as ? 1 : 0;
    out.require(as == zero, "cycle " + join(cycle) + " in " + derivation_set_to_json(s).dump());
    ++tested;
  }
  out.require(almost_simple > 0 && almost_simple < tested,
              "random cycles did not exercise both outcomes");
  if (out.pass) {
    out.detail = "500 cyclic subsets (" + std::to_string(almost_simple) +
                 " almost simple), equivalence holds";
  }
  return out;
}

CoeffMonomial random_unit(Rng& rng) {
  Rational c = make_rational(rng.uniform(1, 5), rng.uniform(1, 5));
  if (rng.coin(50)) {
    c = -c;
  }
  Exponents x;
  for (const char* name : {"f", "g", "h"}) {
    if (const auto k = rng.uniform(-2, 2); k != 0) {
      x[name] = k;
    }
  }
  return CoeffMonomial(c, x);
}

Outcome marking_suite(const Options& o) {
  Outcome out;
  Rng rng(o.seed + 13);
  std::size_t cases = 0;
  for (std::size_t r = 2; r <= 7; ++r) {
    for (int t = 0; out.pass && t < 40; ++t) {
      Potential psi;
      for (std::size_t k = 0; k < r; ++k) {
        psi.push_back(random_unit(rng));
      }
      const auto f = marking_from_potential(psi);
      out.require(is_marking(f), "marking from a potential not recognized");
      const auto back = compute_potential(f);
      const auto scale = psi[0].inverse();
      for (std::size_t k = 0; k < r; ++k) {
        out.require(back[k] == psi[k] * scale, "potential not recovered at vertex " +
                                                   std::to_string(k));
      }
      auto broken = f;
      const std::size_t j = rng.index(r);
      const std::size_t k = (j + 1 + rng.index(r - 1)) % r;
      broken.set(j, k, f.get(j, k)->with_constant(f.get(j, k)->constant() * 2));
      out.require(!is_marking(broken), "perturbed marking accepted");

      std::vector<std::size_t> order(r);
      for (std::size_t i = 0; i < r; ++i) {
        order[i] = i;
      }
      for (std::size_t i = r - 1; i > 0; --i) {
        std::swap(order[i], order[rng.index(i + 1)]);
      }
      EdgeFunction partial(r);
      for (std::size_t i = 0; i < r; ++i) {
        const auto a = order[i];
        const auto b = order[(i + 1) % r];
        partial.set(a, b, *f.get(a, b));
      }
      for (int extra = 0; extra < static_cast<int>(r); ++extra) {
        const auto a = rng.index(r);
        const auto b = rng.index(r);
        if (a != b) {
          partial.set(a, b, *f.get(a, b));
        }
      }
      const auto extended = extend_partial_marking(partial);
      out.require(is_marking(extended), "extension is not a marking");
      out.require(extended == f, "extension differs from the generating marking");
      ++cases;
    }
  }
  if (out.pass) {
    out.detail = std::to_string(cases) + " potentials for r = 2..7 recovered, perturbations "
                 "rejected, partial markings extended";
  }
  return out;
}

Rational direct_min(const DivisorialFanLite& d, const std::string& z, const LatticeVector& e) {
  std::optional<Rational> best;
  for (const auto& [label, per] : d.slices) {
    const auto it = per.find(z);
    if (it == per.end()) {
      continue;
    }
    for (const auto& v : it->second) {
      Rational value = 0;
      for (std::size_t k = 0; k < v.size(); ++k) {
        value += v[k] * static_cast<long>(e[k]);
      }
      if (!best || value < *best) {
        best = value;
      }
    }
  }
  return *best;
}

Outcome verticality_suite(const Options& o) {
  Outcome out;
  Rng rng(o.seed + 17);
  for (int t = 0; out.pass && t < 200; ++t) {
    const int n = static_cast<int>(rng.uniform(1, 3));
    std::vector<LatticeVector> rays;
    for (int i = 0; i < n; ++i) {
      LatticeVector r(static_cast<std::size_t>(n), 0);
      r[static_cast<std::size_t>(i)] = 1;
      rays.push_back(r);
    }
    DivisorialFanLite d{Fan(n, rays), BaseKind::Generic, {}, {}, {}};
    const auto zs = rng.uniform(1, 3);
    for (std::int64_t z = 0; z < zs; ++z) {
      d.divisors.push_back("Z" + std::to_string(z));
    }
    for (const char* label : {"D0", "D1"}) {
      for (const auto& z : d.divisors) {
        if (!rng.coin(70)) {
          continue;
        }
        auto& verts = d.slices[label][z];
        const auto count = rng.uniform(1, 4);
        for (std::int64_t k = 0; k < count; ++k) {
          RationalVector v;
          for (int c = 0; c < n; ++c) {
            v.push_back(make_rational(rng.uniform(-6, 6), rng.uniform(1, 4)));
          }
          verts.push_back(std::move(v));
        }
      }
    }
    if (d.slices.empty()) {
      d.slices["D0"][d.divisors.front()] = {RationalVector(static_cast<std::size_t>(n), 0)};
    }
    LatticeVector e, f;
    for (int c = 0; c < n; ++c) {
      e.push_back(rng.uniform(-4, 4));
      f.push_back(rng.uniform(-4, 4));
    }
    const auto de = compute_De(d, e);
    const auto df = compute_De(d, f);
    const auto k = rng.uniform(1, 5);
    const auto dk = compute_De(d, k * e);
    const auto dsum = compute_De(d, e + f);
    for (const auto& [z, q] : de) {
      out.require(q == direct_min(d, z, e), "D_e differs from direct evaluation");
      out.require(dk.at(z) == q * static_cast<long>(k), "positive homogeneity fails");
      out.require(dsum.at(z) >= q + df.at(z), "superadditivity fails");
    }
    auto bigger = d;
    const auto& z0 = de.begin()->first;
    bigger.slices.begin()->second[z0].push_back(RationalVector(static_cast<std::size_t>(n), 1));
    for (const auto& [z, q] : compute_De(bigger, e)) {
      out.require(q <= de.at(z), "adding a vertex increased a coefficient");
    }
  }

  const auto p1 = load_dfan(o, "divisorial/p1_sample.json");
  const auto generic = load_dfan(o, "divisorial/generic_sample.json");
  const auto principal = load_ord(o, "divisorial/ord_principal.json");
  const auto zero = load_ord(o, "divisorial/ord_zero.json");
  struct Expected {
    RayIndex rho;
    LatticeVector e;
    const OrdData* ord;
    std::map<std::string, Rational> de;
    bool toric;
    bool ok;
    std::string verdict_p1;
    bool exists;
  };
  const std::vector<Expected> table = {
      {0, {-1, 1}, &principal, {{"Z0", make_rational(-1, 2)}, {"Z1", -1}, {"Z2", 2}}, true, true,
       "regular", true},
      {0, {-1, 1}, &zero, {{"Z0", make_rational(-1, 2)}, {"Z1", -1}, {"Z2", 2}}, true, false,
       "not admissible", true},
      {1, {1, -1}, &principal, {{"Z0", make_rational(-1, 3)}, {"Z1", 0}, {"Z2", -2}}, true, false,
       "not admissible", false},
      {0, {-1, -1}, &principal, {{"Z0", make_rational(-1, 2)}, {"Z1", -1}, {"Z2", 2}}, false,
       false, "not admissible", true},
      {1, {0, -1}, &zero, {{"Z0", make_rational(-1, 3)}, {"Z1", 0}, {"Z2", 0}}, true, false,
       "not admissible", false},
      {0, {-1, 0}, &principal, {{"Z0", make_rational(-1, 2)}, {"Z1", -1}, {"Z2", 2}}, true, true,
       "regular", true},
  };
  for (const auto& row : table) {
    const auto tag = "sample rho=" + std::to_string(row.rho) + ": ";
    const auto de = compute_De(p1, row.e);
    out.require(de == row.de, tag + "D_e differs from the hand computation");
    std::int64_t floor_sum = 0;
    bool divisors_ok = true;
    for (const auto& z : p1.divisors) {
      const auto direct = direct_min(p1, z, row.e);
      out.require(de.at(z) == direct, tag + "D_e differs from direct min");
      const auto it = row.ord->find(z);
      const Rational ord = it == row.ord->end() ? Rational(0) : it->second;
      divisors_ok = divisors_ok && ord + direct >= 0;
      floor_sum += floor_to_int(direct);
    }
    const auto rep = vertical_check(p1, *row.ord, row.rho, row.e);
    out.require(rep.toric_ok == row.toric, tag + "toric flag");
    out.require(rep.ok == row.ok && rep.ok == (row.toric && divisors_ok), tag + "verdict");
    out.require(rep.verdict == row.verdict_p1, tag + "label " + rep.verdict);
    out.require(exists_phi_p1(p1, row.e) == row.exists && row.exists == (floor_sum >= 0),
                tag + "global section existence");
    const auto gen = vertical_check(generic, *row.ord, row.rho, row.e);
    out.require(gen.ok == rep.ok, tag + "generic base disagrees");
    out.require(gen.verdict == (gen.ok ? "necessary conditions passed" : "not admissible"),
                tag + "generic label " + gen.verdict);
  }
  if (out.pass) {
    out.detail = "200 random slice configurations; " + std::to_string(table.size()) +
                 " bundled-sample queries match hand and direct arithmetic";
  }
  return out;
}

struct Spec {
  const char* name;
  double limit;
  Outcome (*run)(const Options&);
};

const Spec kSpecs[kCriterionCount] = {
    {"sl3 example reproduction", 1, sl3_example},
    {"realization reproduction", 1, realization_example},
    {"root enumeration", 1, root_enumeration},
    {"infinite-dimension detection", 5, infinite_detection},
    {"mode separation", 1, mode_separation},
    {"criterion-oracle equivalence", 120, criterion_oracle},
    {"algebraic property suite", 30, algebraic_properties},
    {"almost simple iff zero degree sum", 30, almost_simple_equivalence},
    {"marking and potential suite", 30, marking_suite},
    {"verticality", 10, verticality_suite},
};

}  // namespace

std::filesystem::path default_data_dir() {
  return ROOTLIE_DATA_DIR;
}

CriterionResult run_criterion(int id, const Options& options) {
  if (id < 1 || id > kCriterionCount) {
    throw ValidationError("acceptance criterion must be between 1 and " +
                          std::to_string(kCriterionCount));
  }
  const auto& spec = kSpecs[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = spec.name;
  r.limit_seconds = spec.limit;
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto outcome = spec.run(options);
    r.pass = outcome.pass;
    r.detail = outcome.detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.pass && r.seconds > r.limit_seconds) {
    r.pass = false;
    r.detail = "runtime limit exceeded; " + r.detail;
  }
  return r;
}

std::vector<CriterionResult> run_all(const Options& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, options));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << ' ' << std::setw(2) << r.id << ' ' << r.name << " ("
    << std::fixed << std::setprecision(3) << r.seconds << " s / " << std::setprecision(0)
    << r.limit_seconds << " s): " << r.detail;
  return s.str();
}

}  // namespace rootlie::acceptance
