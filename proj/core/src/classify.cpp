#include "rootlie/classify.hpp"

#include "rootlie/errors.hpp"

#include <algorithm>
#include <set>

namespace rootlie {

std::string to_string(Mode m) { return m == Mode::OverK0 ? "k0" : "k"; }

Mode parse_mode(const std::string& s) {
  if (s == "k0" || s == "K0") {
    return Mode::OverK0;
  }
  if (s == "k" || s == "K") {
    return Mode::OverK;
  }
  throw ValidationError("unknown mode \"" + s + "\" (expected k0 or k)");
}

DerivationSet::DerivationSet(Fan fan, std::vector<RootDerivation> derivations)
    : fan_(std::move(fan)), derivations_(std::move(derivations)) {
  std::vector<std::string> problems;
  std::set<std::pair<RayIndex, LatticeVector>> seen;
  for (std::size_t i = 0; i < derivations_.size(); ++i) {
    const auto& d = derivations_[i];
    const std::string where = "derivation " + std::to_string(i);
    if (d.e.size() != static_cast<std::size_t>(fan_.rank())) {
      problems.push_back(where + ": degree has wrong length");
      continue;
    }
    if (d.rho >= fan_.ray_count()) {
      problems.push_back(where + ": ray index out of range");
      continue;
    }
    const auto associated = is_demazure_root(fan_, d.e);
    if (!associated) {
      problems.push_back(where + ": degree is not a Demazure root");
    } else if (*associated != d.rho) {
      problems.push_back(where + ": root is associated with ray " + std::to_string(*associated) +
                         ", not " + std::to_string(d.rho));
    }
    if (!seen.emplace(d.rho, d.e).second) {
      problems.push_back(where + ": proportional to an earlier derivation (same ray and degree)");
    }
  }
  if (!problems.empty()) {
    throw ValidationError("invalid derivation set", std::move(problems));
  }
}

DerivationSet DerivationSet::subset(const std::vector<std::size_t>& indices) const {
  std::vector<RootDerivation> picked;
  picked.reserve(indices.size());
  for (auto i : indices) {
    picked.push_back(derivations_.at(i));
  }
  return DerivationSet(fan_, std::move(picked));
}

CycleGraph build_cycle_graph(const Fan& fan, const std::vector<RootDerivation>& ds) {
  CycleGraph g(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = 0; j < ds.size(); ++j) {
      if (i != j && pairing(fan.ray(ds[j].rho), ds[i].e) > 0) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

CycleGraph build_cycle_graph(const DerivationSet& s) {
  return build_cycle_graph(s.fan(), s.derivations());
}

CycleEnumeration enumerate_cyclic_subsets(const DerivationSet& s, std::size_t cap) {
  if (cap == 0) {
    throw ValidationError("cycle cap must be positive");
  }
  CycleEnumeration out;
  const auto g = build_cycle_graph(s);
  for_each_simple_cycle(g, [&](const std::vector<std::size_t>& c) {
    out.cycles.push_back(c);
    if (out.cycles.size() >= cap) {
      out.overflow = true;
      return false;
    }
    return true;
  });
  std::sort(out.cycles.begin(), out.cycles.end());
  return out;
}

bool is_cyclic_ordering(const DerivationSet& s, const std::vector<std::size_t>& cycle) {
  if (cycle.size() < 2) {
    return false;
  }
  std::set<std::size_t> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != cycle.size()) {
    return false;
  }
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    const auto& cur = s[cycle[t]];
    const auto& next = s[cycle[(t + 1) % cycle.size()]];
    if (pairing(s.fan().ray(next.rho), cur.e) <= 0) {
      return false;
    }
  }
  return true;
}

bool is_almost_simple(const DerivationSet& s, const std::vector<std::size_t>& cycle) {
  if (!is_cyclic_ordering(s, cycle)) {
    return false;
  }
  const auto& fan = s.fan();
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    const auto& cur = s[cycle[t]];
    const auto next_ray = s[cycle[(t + 1) % cycle.size()]].rho;
    for (RayIndex r = 0; r < fan.ray_count(); ++r) {
      const std::int64_t expected = r == cur.rho ? -1 : (r == next_ray ? 1 : 0);
      if (pairing(fan.ray(r), cur.e) != expected) {
        return false;
      }
    }
  }
  return true;
}

bool is_simple(const DerivationSet& s, const std::vector<std::size_t>& cycle) {
  if (!is_almost_simple(s, cycle)) {
    return false;
  }
  CoeffMonomial product;
  for (auto i : cycle) {
    product = product * s[i].phi;
  }
  return product.is_constant();
}

namespace {

bool passes(const DerivationSet& s, const std::vector<std::size_t>& cycle, Mode mode) {
  return mode == Mode::OverK0 ? is_almost_simple(s, cycle) : is_simple(s, cycle);
}

/// Some elementary circuit through v inside the component.
std::vector<std::size_t> cycle_through(const CycleGraph& g, std::size_t v,
                                       const std::vector<bool>& in_comp) {
  for (auto w : g.successors(v)) {
    if (!in_comp[w]) {
      continue;
    }
    if (auto path = shortest_path(g, w, v, in_comp)) {
      std::vector<std::size_t> cycle{v};
      cycle.insert(cycle.end(), path->begin(), path->end() - 1);
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      return cycle;
    }
  }
  throw DefectError("vertex of a nontrivial strongly connected component lies on no cycle");
}

/// Looks for a circuit with nonzero total node weight inside one strongly
/// connected component. Node weights act as weights of outgoing edges; all
/// circuit sums vanish iff a potential p with p(j) = p(i) + w(i) on every edge
/// exists. The potential is grown along a BFS tree; a violated edge yields two
/// closed walks whose sums differ, and one of their elementary circuits has a
/// nonzero sum.
template <class Weight, class AddFn>
std::optional<std::vector<std::size_t>> nonzero_weight_cycle(
    const CycleGraph& g, const std::vector<std::size_t>& comp,
    const std::vector<Weight>& weight, const Weight& zero, AddFn plus) {
  std::vector<bool> in_comp(g.size(), false);
  for (auto v : comp) {
    in_comp[v] = true;
  }
  const auto root = comp.front();
  std::vector<std::optional<Weight>> potential(g.size());
  std::vector<std::size_t> parent(g.size(), g.size());
  potential[root] = zero;
  parent[root] = root;
  std::vector<std::size_t> queue{root};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto v = queue[head];
    for (auto w : g.successors(v)) {
      if (in_comp[w] && !potential[w]) {
        potential[w] = plus(*potential[v], weight[v]);
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  auto tree_path = [&](std::size_t v) {
    std::vector<std::size_t> path{v};
    while (v != root) {
      v = parent[v];
      path.push_back(v);
    }
    std::reverse(path.begin(), path.end());
    return path;
  };
  auto cycle_sum = [&](const std::vector<std::size_t>& c) {
    Weight s = zero;
    for (auto v : c) {
      s = plus(s, weight[v]);
    }
    return s;
  };
  for (auto i : comp) {
    for (auto j : g.successors(i)) {
      if (!in_comp[j] || plus(*potential[i], weight[i]) == *potential[j]) {
        continue;
      }
      const auto back = shortest_path(g, j, root, in_comp);
      if (!back) {
        throw DefectError("strongly connected component without a return path");
      }
      std::vector<std::vector<std::size_t>> walks;
      auto walk1 = tree_path(i);
      walk1.insert(walk1.end(), back->begin(), back->end() - 1);
      walks.push_back(std::move(walk1));
      auto walk2 = tree_path(j);
      if (back->size() > 1) {
        walk2.insert(walk2.end(), back->begin() + 1, back->end() - 1);
        walks.push_back(std::move(walk2));
      }
      for (const auto& walk : walks) {
        for (const auto& c : split_closed_walk(walk)) {
          if (!(cycle_sum(c) == zero)) {
            return c;
          }
        }
      }
      throw DefectError("potential violation without a nonzero circuit");
    }
  }
  return std::nullopt;
}

void require_spanning_rays(const DerivationSet& s, const CycleGraph& g) {
  if (g.edge_count() == 0 || s.fan().rays_span()) {
    return;
  }
  for (const auto& comp : strongly_connected_components(g)) {
    if (comp.size() > 1) {
      throw PreconditionError(
          "the fan rays do not span N_Q and the set has a cyclic subset; the finiteness "
          "criterion is only available when the rays span");
    }
  }
}

}  // namespace

Decision certificate_decision(const DerivationSet& s, Mode mode) {
  Decision d;
  d.mode = mode;
  const auto g = build_cycle_graph(s);
  require_spanning_rays(s, g);
  const auto comps = strongly_connected_components(g);
  const auto& fan = s.fan();

  auto fail = [&](std::vector<std::size_t> witness, const char* check) {
    if (passes(s, witness, mode)) {
      throw DefectError(std::string("certificate witness passes the criterion (") + check + ")");
    }
    d.finite = false;
    d.witness = std::move(witness);
    d.failed_check = check;
    return d;
  };

  // (i) every derivation on a cycle has an elementary root
  for (const auto& comp : comps) {
    if (comp.size() < 2) {
      continue;
    }
    std::vector<bool> in_comp(g.size(), false);
    for (auto v : comp) {
      in_comp[v] = true;
    }
    for (auto v : comp) {
      if (!is_elementary_root(fan, s[v].e)) {
        return fail(cycle_through(g, v, in_comp), "non-elementary");
      }
    }
  }

  // (ii) degree sums vanish on every cycle
  std::vector<LatticeVector> degrees;
  for (const auto& x : s.derivations()) {
    degrees.push_back(x.e);
  }
  const LatticeVector zero_degree(static_cast<std::size_t>(fan.rank()), 0);
  for (const auto& comp : comps) {
    if (comp.size() < 2) {
      continue;
    }
    if (auto c = nonzero_weight_cycle(g, comp, degrees, zero_degree,
                                      [](const LatticeVector& a, const LatticeVector& b) {
                                        return a + b;
                                      })) {
      return fail(*c, "degree-cycle-sum");
    }
  }

  // (iii) coefficient products are constant on every cycle
  if (mode == Mode::OverK) {
    std::vector<Exponents> exps;
    for (const auto& x : s.derivations()) {
      exps.push_back(x.phi.exponents());
    }
    for (const auto& comp : comps) {
      if (comp.size() < 2) {
        continue;
      }
      if (auto c = nonzero_weight_cycle(
              g, comp, exps, Exponents{},
              [](const Exponents& a, const Exponents& b) { return add(a, b); })) {
        return fail(*c, "coefficient-cycle-product");
      }
    }
  }
  return d;
}

Decision exhaustive_decision(const DerivationSet& s, Mode mode, std::size_t cap) {
  if (cap == 0) {
    throw ValidationError("cycle cap must be positive");
  }
  Decision d;
  d.mode = mode;
  const auto g = build_cycle_graph(s);
  require_spanning_rays(s, g);
  std::optional<std::vector<std::size_t>> first_failure;
  std::size_t seen = 0;
  d.cycles_enumerated = for_each_simple_cycle(g, [&](const std::vector<std::size_t>& c) {
    if (!first_failure && !passes(s, c, mode)) {
      first_failure = c;
    }
    return ++seen < cap;
  });
  d.overflow = seen >= cap;
  if (first_failure) {
    d.finite = false;
    d.witness = std::move(first_failure);
    d.failed_check = "exhaustive";
  }
  return d;
}

Decision decide_finite(const DerivationSet& s, Mode mode, std::size_t cap) {
  Decision cert = certificate_decision(s, mode);
  const Decision exhaustive = exhaustive_decision(s, mode, cap);
  cert.cycles_enumerated = exhaustive.cycles_enumerated;
  cert.overflow = exhaustive.overflow;
  if (!exhaustive.overflow) {
    if (exhaustive.finite != cert.finite) {
      throw DefectError("certificate and exhaustive enumeration disagree on finiteness");
    }
    cert.cross_checked = true;
  } else if (!exhaustive.finite && cert.finite) {
    throw DefectError("enumeration found a failing cycle the certificate missed");
  }
  return cert;
}

bool is_very_simple(const DerivationSet& s) {
  return certificate_decision(s, Mode::OverK).finite;
}

}  // namespace rootlie
