#include "rootlie/structure.hpp"

#include "rootlie/errors.hpp"
#include "rootlie/graded_span.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace rootlie {

std::vector<RootDerivation> generators_for_mode(std::span<const RootDerivation> ds, Mode mode) {
  std::vector<RootDerivation> out(ds.begin(), ds.end());
  if (mode == Mode::OverK0) {
    for (auto& d : out) {
      d.phi = CoeffMonomial(d.phi.constant());
    }
  }
  return out;
}

CyclicPartition maximal_cyclic_partition(const DerivationSet& s) {
  if (!certificate_decision(s, Mode::OverK0).finite) {
    throw PreconditionError("maximal cyclic partition needs every cyclic subset almost simple");
  }
  CyclicPartition part;
  const auto g = build_cycle_graph(s);
  for (auto& comp : strongly_connected_components(g)) {
    if (comp.size() >= 2) {
      part.blocks.push_back(std::move(comp));
    } else {
      part.leftover.push_back(comp.front());
    }
  }
  std::sort(part.leftover.begin(), part.leftover.end());

  const auto& fan = s.fan();
  for (std::size_t a = 0; a < part.blocks.size(); ++a) {
    for (std::size_t b = a + 1; b < part.blocks.size(); ++b) {
      for (auto i : part.blocks[a]) {
        for (auto j : part.blocks[b]) {
          if (s[i].rho == s[j].rho || pairing(fan.ray(s[i].rho), s[j].e) != 0 ||
              pairing(fan.ray(s[j].rho), s[i].e) != 0) {
            throw DefectError("maximal cyclic subsets " + std::to_string(a) + " and " +
                              std::to_string(b) + " interact");
          }
        }
      }
    }
  }
  return part;
}

std::vector<std::int64_t> Ordering::profile(const Fan& fan, const LatticeVector& e) const {
  std::vector<std::int64_t> p;
  p.reserve(kappa.size());
  for (auto r : kappa) {
    p.push_back(pairing(fan.ray(r), e));
  }
  return p;
}

Ordering compute_ordering(const Fan& fan, std::span<const RootDerivation> ds) {
  std::set<RayIndex> remaining;
  for (const auto& d : ds) {
    remaining.insert(d.rho);
  }
  Ordering ord;
  std::set<RayIndex> placed;
  while (!remaining.empty()) {
    std::optional<RayIndex> pick;
    for (auto r : remaining) {
      const bool available = std::all_of(ds.begin(), ds.end(), [&](const RootDerivation& d) {
        return d.rho == r || pairing(fan.ray(r), d.e) <= 0 || placed.contains(d.rho);
      });
      if (available) {
        pick = r;
        break;
      }
    }
    if (!pick) {
      throw PreconditionError("family contains a cyclic subset; no ordering exists");
    }
    ord.kappa.push_back(*pick);
    placed.insert(*pick);
    remaining.erase(*pick);
  }
  for (const auto& d : ds) {
    const auto it = std::find(ord.kappa.begin(), ord.kappa.end(), d.rho);
    ord.alpha.push_back(static_cast<std::size_t>(it - ord.kappa.begin()) + 1);
  }
  return ord;
}

bool is_appropriate(std::span<const std::int64_t> v) {
  std::size_t i = 0;
  while (i < v.size() && v[i] == 0) {
    ++i;
  }
  if (i == v.size() || v[i] != -1) {
    return false;
  }
  return std::all_of(v.begin() + static_cast<std::ptrdiff_t>(i) + 1, v.end(),
                     [](std::int64_t x) { return x >= 0; });
}

namespace {

/// Breadth-first closure under ad(generators) with a graded span.
std::vector<HomogeneousDerivation> close_under_brackets(
    const std::vector<HomogeneousDerivation>& gens, Mode mode, std::size_t cap,
    const std::function<void(const HomogeneousDerivation&)>& on_insert) {
  GradedSpan span(mode);
  std::vector<HomogeneousDerivation> basis;
  std::vector<HomogeneousDerivation> frontier;
  auto take = [&](const HomogeneousDerivation& d, std::vector<HomogeneousDerivation>& into) {
    if (!span.insert(d)) {
      return;
    }
    on_insert(d);
    basis.push_back(d);
    into.push_back(d);
    if (basis.size() > cap) {
      throw DefectError("closure exceeded the basis cap of " + std::to_string(cap) +
                        " although termination is guaranteed");
    }
  };
  for (const auto& g : gens) {
    take(g, frontier);
  }
  while (!frontier.empty()) {
    std::vector<HomogeneousDerivation> next;
    for (const auto& g : gens) {
      for (const auto& b : frontier) {
        if (auto z = bracket(b, g)) {
          take(*z, next);
        }
      }
    }
    frontier = std::move(next);
  }
  return basis;
}

std::vector<HomogeneousDerivation> homogeneous(const Fan& fan,
                                               std::span<const RootDerivation> ds) {
  std::vector<HomogeneousDerivation> out;
  for (const auto& d : ds) {
    out.push_back(HomogeneousDerivation::from_root(fan, d));
  }
  return out;
}

std::vector<LieElement> as_elements(const std::vector<HomogeneousDerivation>& hs) {
  std::vector<LieElement> out;
  out.reserve(hs.size());
  for (const auto& h : hs) {
    out.emplace_back(h);
  }
  return out;
}

}  // namespace

NilpotentClosure nilpotent_closure(const Fan& fan, std::span<const RootDerivation> gens,
                                   Mode mode, std::size_t cap) {
  const auto adjusted = generators_for_mode(gens, mode);
  NilpotentClosure result;
  result.ordering = compute_ordering(fan, adjusted);
  const auto basis = close_under_brackets(
      homogeneous(fan, adjusted), mode, cap, [&](const HomogeneousDerivation& d) {
        if (!is_appropriate(result.ordering.profile(fan, d.e))) {
          throw DefectError("multiple commutator with a non-appropriate degree profile");
        }
      });
  result.dim = basis.size();
  result.basis = as_elements(basis);
  return result;
}

StructureReport semidirect_structure(const DerivationSet& s, Mode mode,
                                     const StructureOptions& options) {
  const Decision decision = decide_finite(s, mode, options.cycle_cap);
  if (!decision.finite) {
    throw PreconditionError("the generated Lie algebra is infinite-dimensional in mode " +
                            to_string(mode));
  }
  const auto& fan = s.fan();
  const auto gens = generators_for_mode(s.derivations(), mode);

  StructureReport report;
  report.mode = mode;
  report.partition = maximal_cyclic_partition(s);

  std::vector<std::size_t> cyclic;
  for (const auto& block : report.partition.blocks) {
    std::set<RayIndex> rays;
    std::vector<RootDerivation> block_gens;
    for (auto i : block) {
      rays.insert(gens[i].rho);
      block_gens.push_back(gens[i]);
      cyclic.push_back(i);
    }
    const std::size_t r = rays.size();
    if (r < 2) {
      throw DefectError("maximal cyclic subset with fewer than two rays");
    }
    const auto block_basis =
        close_under_brackets(homogeneous(fan, block_gens), mode, options.basis_cap,
                             [](const HomogeneousDerivation&) {});
    if (block_basis.size() != r * r - 1) {
      throw DefectError("maximal cyclic subset generates a Lie algebra of dimension " +
                        std::to_string(block_basis.size()) + ", expected sl_" +
                        std::to_string(r));
    }
    for (auto& e : as_elements(block_basis)) {
      report.basis.push_back(std::move(e));
    }
    report.summand_ranks.push_back(r);
  }
  std::sort(report.summand_ranks.rbegin(), report.summand_ranks.rend());

  // Adjoin [D_i, X] for D_i in D' and X outside D' until nothing new appears.
  std::vector<RootDerivation> outside;
  GradedSpan seen(mode);
  for (auto i : report.partition.leftover) {
    outside.push_back(gens[i]);
    seen.insert(HomogeneousDerivation::from_root(fan, gens[i]));
  }
  for (std::size_t q = 0; q < outside.size(); ++q) {
    for (auto i : cyclic) {
      const auto x = outside[q];
      const auto h = bracket(HomogeneousDerivation::from_root(fan, gens[i]),
                             HomogeneousDerivation::from_root(fan, x));
      if (!h || seen.contains(*h)) {
        continue;
      }
      auto root = as_root_derivation(fan, *h);
      if (!root) {
        throw DefectError("bracket of a cyclic and an acyclic derivation is not a root derivation");
      }
      std::vector<RootDerivation> all = gens;
      all.insert(all.end(), outside.begin(), outside.end());
      all.push_back(*root);
      const auto g = build_cycle_graph(fan, all);
      for (const auto& comp : strongly_connected_components(g)) {
        if (comp.size() >= 2 && std::binary_search(comp.begin(), comp.end(), all.size() - 1)) {
          throw DefectError("adjoined bracket lies on a cyclic subset");
        }
      }
      seen.insert(*h);
      outside.push_back(std::move(*root));
      if (outside.size() > options.adjoin_cap) {
        throw DefectError("adjunction of brackets did not stabilize within " +
                          std::to_string(options.adjoin_cap) + " derivations");
      }
    }
  }

  const auto nil = nilpotent_closure(fan, outside, mode, options.basis_cap);
  report.nilpotent_dim = nil.dim;
  report.nilpotent_generators = std::move(outside);
  for (const auto& e : nil.basis) {
    report.basis.push_back(e);
  }
  report.total_dim = report.nilpotent_dim;
  for (auto r : report.summand_ranks) {
    report.total_dim += r * r - 1;
  }
  return report;
}

}  // namespace rootlie
