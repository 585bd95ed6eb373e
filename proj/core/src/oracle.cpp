#include "rootlie/oracle.hpp"

#include "rootlie/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rootlie {

namespace {

/// Rank of a small family of rational vectors by plain elimination on a copy.
std::size_t rank_of(std::vector<RationalVector> rows) {
  std::size_t rank = 0;
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                           [col](const RationalVector& r) { return r[col] != 0; });
    if (it == rows.end()) {
      continue;
    }
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), it);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) {
        continue;
      }
      const Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t c = col; c < n; ++c) {
        rows[i][c] -= f * rows[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

class ClosureSpan {
public:
  explicit ClosureSpan(Mode mode) : mode_(mode) {}

  bool add(const HomogeneousDerivation& d) {
    if (d.is_zero()) {
      return false;
    }
    auto& rows = rows_[key(d)];
    rows.push_back(d.v);
    if (rank_of(rows) == rows.size()) {
      return true;
    }
    rows.pop_back();
    return false;
  }

private:
  TermKey key(const HomogeneousDerivation& d) const {
    return {d.e, mode_ == Mode::OverK ? d.phi : Exponents{}};
  }

  Mode mode_;
  std::map<TermKey, std::vector<RationalVector>> rows_;
};

HomogeneousDerivation generator(const Fan& fan, const RootDerivation& d, Mode mode) {
  auto h = HomogeneousDerivation::from_root(fan, d);
  if (mode == Mode::OverK0) {
    h.phi.clear();
  }
  return h;
}

std::int64_t rho_bar(const Fan& fan, const LatticeVector& e) {
  return pairing(fan.ray_sum(), e);
}

}  // namespace

ClosureResult bracket_closure(const DerivationSet& s, Mode mode, const ClosureCaps& caps) {
  if (caps.max_basis == 0 || caps.max_steps == 0) {
    throw ValidationError("closure caps must be positive");
  }
  const auto& fan = s.fan();
  ClosureResult out;
  out.mode = mode;
  ClosureSpan span(mode);
  std::vector<HomogeneousDerivation> elements;
  std::vector<HomogeneousDerivation> gens;

  auto insert = [&](const HomogeneousDerivation& h,
                    std::optional<std::pair<std::size_t, std::size_t>> parent) {
    if (!span.add(h)) {
      return false;
    }
    elements.push_back(h);
    out.parent.push_back(parent);
    out.degree.push_back(h.e);
    out.degrees_seen.insert(h.e);
    return true;
  };

  for (const auto& d : s.derivations()) {
    gens.push_back(generator(fan, d, mode));
    if (elements.size() < caps.max_basis) {
      insert(gens.back(), std::nullopt);
    }
  }
  bool capped = elements.size() >= caps.max_basis && gens.size() > elements.size();
  std::size_t frontier_begin = 0;
  while (!capped) {
    if (out.steps >= caps.max_steps) {
      capped = true;
      break;
    }
    const std::size_t frontier_end = elements.size();
    ++out.steps;
    for (std::size_t g = 0; g < gens.size() && !capped; ++g) {
      for (std::size_t b = frontier_begin; b < frontier_end; ++b) {
        const auto c = bracket(gens[g], elements[b]);
        if (c && insert(*c, std::make_pair(b, g)) && elements.size() >= caps.max_basis) {
          capped = true;
          break;
        }
      }
    }
    if (!capped && elements.size() == frontier_end) {
      out.stabilized = true;
      break;
    }
    frontier_begin = frontier_end;
  }
  out.dim = elements.size();
  for (const auto& h : elements) {
    out.basis.emplace_back(h);
  }
  return out;
}

std::vector<std::int64_t> rho_bar_chain(const Fan& fan, const ClosureResult& closure) {
  if (closure.degree.empty()) {
    return {};
  }
  std::size_t tip = 0;
  for (std::size_t i = 1; i < closure.degree.size(); ++i) {
    if (rho_bar(fan, closure.degree[i]) >= rho_bar(fan, closure.degree[tip])) {
      tip = i;
    }
  }
  std::vector<std::size_t> ancestry{tip};
  while (closure.parent[ancestry.back()]) {
    ancestry.push_back(closure.parent[ancestry.back()]->first);
  }
  std::reverse(ancestry.begin(), ancestry.end());
  std::vector<std::int64_t> chain;
  for (auto i : ancestry) {
    const auto value = rho_bar(fan, closure.degree[i]);
    if (chain.empty() || value > chain.back()) {
      chain.push_back(value);
    }
  }
  return chain;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "FAIL";
}

Comparison compare(const Decision& decision, const ClosureResult& closure,
                   std::optional<std::size_t> report_dim) {
  if (decision.mode != closure.mode) {
    throw PreconditionError("decision and closure were computed in different modes");
  }
  const std::string state = "decision=" + std::string(decision.finite ? "finite" : "infinite") +
                            " mode=" + to_string(decision.mode) +
                            " stabilized=" + (closure.stabilized ? "true" : "false") +
                            " closure_dim=" + std::to_string(closure.dim) +
                            " steps=" + std::to_string(closure.steps) + " report_dim=" +
                            (report_dim ? std::to_string(*report_dim) : std::string("none"));
  if (decision.finite) {
    if (!closure.stabilized) {
      return {Verdict::Inconclusive, "closure hit its caps on a finite decision; raise "
                                     "--cap-basis or the step cap (" + state + ")"};
    }
    if (report_dim && *report_dim != closure.dim) {
      return {Verdict::Fail, "structure dimension differs from closure dimension (" + state + ")"};
    }
    return {Verdict::Pass, state};
  }
  if (closure.stabilized) {
    return {Verdict::Fail, "closure stabilized on an infinite decision (" + state + ")"};
  }
  return {Verdict::Pass, state};
}

std::vector<ClaimStep> claim_chain(const Fan& fan, const RootDerivation& d1,
                                   const RootDerivation& d2, std::size_t iterations) {
  std::vector<ClaimStep> steps;
  RootDerivation current = d2;
  const auto h1 = HomogeneousDerivation::from_root(fan, d1);
  for (std::size_t it = 0; it < iterations; ++it) {
    ClaimStep step;
    step.a = pairing(fan.ray(current.rho), d1.e);
    step.rho_bar_before = rho_bar(fan, current.e);
    const auto h2 = HomogeneousDerivation::from_root(fan, current);
    std::optional<HomogeneousDerivation> acc = bracket(h1, h2);
    for (std::int64_t k = 0; acc && k < step.a; ++k) {
      acc = bracket(*acc, h2);
    }
    step.nonzero = acc.has_value();
    if (acc) {
      step.next = as_root_derivation(fan, *acc);
    }
    if (step.next) {
      step.same_ray = step.next->rho == current.rho;
      step.rho_bar_after = rho_bar(fan, step.next->e);
      step.rho_bar_increases = step.rho_bar_after > step.rho_bar_before;
      if (step.next->e != d1.e || step.next->rho != d1.rho) {
        const DerivationSet pair(fan, {d1, *step.next});
        const std::vector<std::size_t> cycle{0, 1};
        step.cyclic_not_almost_simple =
            is_cyclic_ordering(pair, cycle) && !is_almost_simple(pair, cycle);
      }
    }
    const bool ok = step.nonzero && step.next && step.same_ray && step.rho_bar_increases &&
                    step.cyclic_not_almost_simple;
    steps.push_back(step);
    if (!ok) {
      break;
    }
    current = *step.next;
  }
  return steps;
}

namespace {

LatticeVector unit(int n, int i, std::int64_t value = 1) {
  LatticeVector v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i)] = value;
  return v;
}

Fan random_fan(Rng& rng, int max_rank) {
  const int n = static_cast<int>(rng.uniform(1, max_rank));
  std::vector<LatticeVector> rays;
  switch (rng.uniform(0, 4)) {
    case 0:  // affine space
      for (int i = 0; i < n; ++i) {
        rays.push_back(unit(n, i));
      }
      break;
    case 1: {  // projective space
      LatticeVector last(static_cast<std::size_t>(n), -1);
      for (int i = 0; i < n; ++i) {
        rays.push_back(unit(n, i));
      }
      rays.push_back(last);
      break;
    }
    case 2:  // product of projective lines
      for (int i = 0; i < n; ++i) {
        rays.push_back(unit(n, i));
        rays.push_back(unit(n, i, -1));
      }
      break;
    case 3: {  // Hirzebruch surface, or a rank-1 fallback
      if (n < 2) {
        rays = {unit(1, 0), unit(1, 0, -1)};
        break;
      }
      const auto a = rng.uniform(0, 2);
      rays = {{1, 0}, {0, 1}, {-1, a}, {0, -1}};
      if (n == 3) {
        for (auto& r : rays) {
          r.push_back(0);
        }
        rays.push_back(unit(3, 2));
      }
      break;
    }
    default: {  // random primitive rays spanning N_Q
      const auto k = static_cast<std::size_t>(rng.uniform(n, n + 2));
      std::set<LatticeVector> seen;
      for (int attempt = 0; attempt < 100 && rays.size() < k; ++attempt) {
        LatticeVector v(static_cast<std::size_t>(n));
        for (auto& x : v) {
          x = rng.uniform(-2, 2);
        }
        if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) {
          continue;
        }
        const auto [p, g] = primitive_normalize(v);
        if (seen.insert(p).second) {
          rays.push_back(p);
        }
      }
      if (!Fan(n, rays).rays_span()) {
        return random_fan(rng, max_rank);
      }
      break;
    }
  }
  return Fan(n, std::move(rays));
}

CoeffMonomial random_phi(Rng& rng, int symbol_percent) {
  Rational c = static_cast<long>(rng.uniform(1, 3));
  if (rng.coin(50)) {
    c = -c;
  }
  if (!rng.coin(symbol_percent)) {
    return CoeffMonomial(c);
  }
  const std::string name = rng.coin(50) ? "f" : "g";
  std::int64_t power = rng.uniform(1, 2);
  if (rng.coin(50)) {
    power = -power;
  }
  return CoeffMonomial(c, Exponents{{name, power}});
}

}  // namespace

DerivationSet random_derivation_set(Rng& rng, const RandomInstanceOptions& options) {
  for (;;) {
    const Fan fan = random_fan(rng, options.max_rank);
    const auto roots = enumerate_roots(fan, Box::cube(fan.rank(), options.box));
    if (roots.empty()) {
      continue;
    }
    const auto want = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(options.max_m)));
    const std::size_t m = std::min(want, roots.size());
    std::vector<std::size_t> pool(roots.size());
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    std::vector<RootDerivation> ds;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = i + rng.index(pool.size() - i);
      std::swap(pool[i], pool[j]);
      const auto& root = roots[pool[i]];
      ds.push_back(RootDerivation{random_phi(rng, options.symbol_percent), root.ray, root.e});
    }
    return DerivationSet(fan, std::move(ds));
  }
}

}  // namespace rootlie
