#include "rootlie/realize.hpp"

#include "rootlie/errors.hpp"
#include "rootlie/rng.hpp"

#include <algorithm>
#include <set>

namespace rootlie {

namespace {

/// Solves sum_a c_a * columns[a] = v exactly; nullopt when v is outside the
/// span or the columns are dependent.
std::optional<RationalVector> solve_coordinates(const std::vector<LatticeVector>& columns,
                                                const RationalVector& v) {
  const std::size_t n = v.size();
  const std::size_t k = columns.size();
  std::vector<RationalVector> m(n, RationalVector(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      m[i][a] = static_cast<long>(columns[a].at(i));
    }
    m[i][k] = v[i];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(k, n);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t p = row;
    while (p < n && m[p][col] == 0) {
      ++p;
    }
    if (p == n) {
      return std::nullopt;
    }
    std::swap(m[p], m[row]);
    const Rational lead = m[row][col];
    for (auto& x : m[row]) {
      x /= lead;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i != row && m[i][col] != 0) {
        const Rational f = m[i][col];
        for (std::size_t c = 0; c <= k; ++c) {
          m[i][c] -= f * m[row][c];
        }
      }
    }
    pivot_row[col] = row++;
  }
  for (std::size_t i = row; i < n; ++i) {
    if (m[i][k] != 0) {
      return std::nullopt;
    }
  }
  RationalVector c(k);
  for (std::size_t a = 0; a < k; ++a) {
    c[a] = m[pivot_row[a]][k];
  }
  return c;
}

std::size_t rank_of(const std::vector<LatticeVector>& vectors) {
  std::vector<RationalVector> rows;
  for (const auto& v : vectors) {
    rows.push_back(to_rational(v));
  }
  std::size_t rank = 0;
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][col] == 0) {
      ++p;
    }
    if (p == rows.size()) {
      continue;
    }
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t c = col; c < n; ++c) {
        rows[i][c] -= f * rows[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::string> names(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) {
    out.push_back(prefix + std::to_string(i));
  }
  return out;
}

}  // namespace

RayGraph ray_graph(const DerivationSet& s) {
  if (s.size() < 2) {
    throw PreconditionError("a cyclic block needs at least two derivations");
  }
  const auto g = build_cycle_graph(s);
  if (strongly_connected_components(g).size() != 1) {
    throw PreconditionError("derivations do not form a single maximal cyclic subset");
  }
  if (!certificate_decision(s, Mode::OverK0).finite) {
    throw PreconditionError("set has a cyclic subset that is not almost simple");
  }
  RayGraph rg;
  std::set<RayIndex> rays;
  for (const auto& d : s.derivations()) {
    rays.insert(d.rho);
  }
  rg.kappa.assign(rays.begin(), rays.end());
  auto vertex = [&](RayIndex r) -> std::size_t {
    const auto it = std::find(rg.kappa.begin(), rg.kappa.end(), r);
    if (it == rg.kappa.end()) {
      throw DefectError("partner ray of an elementary root lies outside the block");
    }
    return static_cast<std::size_t>(it - rg.kappa.begin());
  };
  std::set<std::pair<std::size_t, std::size_t>> used;
  for (const auto& d : s.derivations()) {
    const auto el = is_elementary_root(s.fan(), d.e);
    if (!el || el->ray != d.rho) {
      throw DefectError("derivation in an almost simple block has a non-elementary root");
    }
    const auto edge = std::make_pair(vertex(el->ray), vertex(el->partner));
    if (!used.insert(edge).second) {
      throw DefectError("two derivations of an almost simple block share an edge");
    }
    rg.edges.push_back(edge);
  }
  return rg;
}

NormalizedSet normalize_simple_set(const DerivationSet& s) {
  if (!is_very_simple(s)) {
    throw PreconditionError("normalization needs every cyclic subset to be simple");
  }
  RayGraph rg = ray_graph(s);
  EdgeFunction partial(rg.kappa.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    partial.set(rg.edges[i].first, rg.edges[i].second, s[i].phi.with_constant(1));
  }
  EdgeFunction marking = extend_partial_marking(partial);
  Potential psi = compute_potential(marking);
  std::vector<RootDerivation> normalized;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto [from, to] = rg.edges[i];
    const CoeffMonomial phi = s[i].phi * psi[from] * psi[to].inverse();
    if (!phi.is_constant()) {
      throw DefectError("potential rescaling left a non-constant coefficient");
    }
    normalized.push_back(RootDerivation{phi, s[i].rho, s[i].e});
  }
  return NormalizedSet{DerivationSet(s.fan(), std::move(normalized)), std::move(rg),
                       std::move(marking), std::move(psi)};
}

Realization realize_almost_simple(const DerivationSet& s) {
  Realization out;
  out.graph = ray_graph(s);
  const auto& fan = s.fan();
  const std::size_t r = out.graph.kappa.size();
  std::vector<LatticeVector> kappa_vectors;
  for (auto k : out.graph.kappa) {
    kappa_vectors.push_back(fan.ray(k));
  }
  const auto rank = rank_of(kappa_vectors);
  if (rank == r) {
    out.dependent = false;
  } else {
    LatticeVector sum(static_cast<std::size_t>(fan.rank()), 0);
    for (const auto& k : kappa_vectors) {
      sum = sum + k;
    }
    if (rank + 1 != r || std::any_of(sum.begin(), sum.end(), [](auto x) { return x != 0; })) {
      throw DefectError("rays of an almost simple block satisfy a relation other than "
                        "kappa_1 + ... + kappa_r = 0");
    }
    out.dependent = true;
  }
  const std::size_t vars = out.dependent ? r - 1 : r;
  out.basis_rays.assign(out.graph.kappa.begin(), out.graph.kappa.begin() + static_cast<std::ptrdiff_t>(vars));

  for (std::size_t d = 0; d < s.size(); ++d) {
    const auto [i, j] = out.graph.edges[d];
    const auto& phi = s[d].phi;
    VectorField x_field(names("x", vars));
    auto unit = [&](std::size_t idx) {
      std::vector<std::int64_t> p(vars, 0);
      if (idx < vars) {
        p[idx] = 1;
      }
      return p;
    };
    if (i < vars) {
      x_field.add_term(i, phi, unit(j));  // x_j d/dx_i, x_r = 1
    } else {
      // z_j d/dz_r restricts to -x_j * sum_k x_k d/dx_k
      for (std::size_t k = 0; k < vars; ++k) {
        auto p = unit(j);
        p[k] += 1;
        x_field.add_term(k, phi.with_constant(-phi.constant()), p);
      }
    }
    out.fields.push_back(std::move(x_field));
    if (out.dependent) {
      VectorField z_field(names("z", r));
      std::vector<std::int64_t> p(r, 0);
      p[j] = 1;
      z_field.add_term(i, phi, p);
      out.z_fields.push_back(std::move(z_field));
    }
  }
  return out;
}

VectorField realize_homogeneous(const DerivationSet& s, const Realization& r,
                                const HomogeneousDerivation& h) {
  const auto& fan = s.fan();
  const std::size_t vars = r.basis_rays.size();
  VectorField field(names("x", vars));
  if (h.is_zero()) {
    return field;
  }
  std::vector<LatticeVector> columns;
  for (auto k : r.basis_rays) {
    columns.push_back(fan.ray(k));
  }
  const auto coords = solve_coordinates(columns, h.v);
  if (!coords) {
    throw DefectError("element of the generated algebra has v outside the span of its rays");
  }
  std::vector<std::int64_t> degree(vars);
  for (std::size_t a = 0; a < vars; ++a) {
    degree[a] = pairing(fan.ray(r.basis_rays[a]), h.e);
  }
  for (std::size_t a = 0; a < vars; ++a) {
    if ((*coords)[a] == 0) {
      continue;
    }
    auto p = degree;
    p[a] += 1;
    field.add_term(a, CoeffMonomial((*coords)[a], h.phi), std::move(p));
  }
  return field;
}

RealizationCheck verify_realization(const DerivationSet& s, const Realization& r,
                                    std::size_t samples, std::uint64_t seed) {
  RealizationCheck check;
  const auto& fan = s.fan();
  const std::size_t m = s.size();
  if (r.fields.size() != m) {
    throw ValidationError("realization does not cover the derivation set");
  }
  for (std::size_t d = 0; d < m; ++d) {
    const auto general =
        realize_homogeneous(s, r, HomogeneousDerivation::from_root(fan, s[d]));
    if (!(general == r.fields[d])) {
      check.ok = false;
      check.failing_pair = {d, d};
      return check;
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (samples >= m * m) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        pairs.emplace_back(i, j);
      }
    }
  } else {
    Rng rng(seed);
    for (std::size_t t = 0; t < samples; ++t) {
      pairs.emplace_back(rng.index(m), rng.index(m));
    }
  }
  for (const auto& [i, j] : pairs) {
    const auto lhs = commutator(r.fields[i], r.fields[j]);
    const auto abstract = bracket(HomogeneousDerivation::from_root(fan, s[i]),
                                  HomogeneousDerivation::from_root(fan, s[j]));
    const auto rhs = abstract ? realize_homogeneous(s, r, *abstract)
                              : VectorField(r.fields[i].variables());
    ++check.pairs_checked;
    if (!(lhs == rhs)) {
      check.ok = false;
      check.failing_pair = {i, j};
      return check;
    }
  }
  return check;
}

}  // namespace rootlie
