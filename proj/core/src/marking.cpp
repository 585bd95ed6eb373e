#include "rootlie/marking.hpp"

#include "rootlie/digraph.hpp"
#include "rootlie/errors.hpp"

namespace rootlie {

void EdgeFunction::set(std::size_t from, std::size_t to, CoeffMonomial value) {
  if (from >= r_ || to >= r_) {
    throw ValidationError("edge endpoint out of range");
  }
  if (from == to) {
    throw ValidationError("self-edges are not allowed");
  }
  values_.insert_or_assign({from, to}, std::move(value));
}

std::optional<CoeffMonomial> EdgeFunction::get(std::size_t from, std::size_t to) const {
  auto it = values_.find({from, to});
  if (it == values_.end()) {
    return std::nullopt;
  }
  return it->second;
}

bool is_marking(const EdgeFunction& f) {
  if (!f.is_total()) {
    throw PreconditionError("is_marking needs a function on every edge");
  }
  const auto r = f.vertex_count();
  Potential psi(r);
  for (std::size_t k = 1; k < r; ++k) {
    psi[k] = *f.get(0, k);
  }
  for (const auto& [edge, value] : f.values()) {
    if (!(value == psi[edge.second] * psi[edge.first].inverse())) {
      return false;
    }
  }
  return true;
}

namespace {

CoeffMonomial path_product(const EdgeFunction& f, const std::vector<std::size_t>& path) {
  CoeffMonomial p;
  for (std::size_t t = 0; t + 1 < path.size(); ++t) {
    p = p * *f.get(path[t], path[t + 1]);
  }
  return p;
}

}  // namespace

EdgeFunction extend_partial_marking(const EdgeFunction& partial) {
  const auto r = partial.vertex_count();
  Digraph g(r);
  for (const auto& [edge, value] : partial.values()) {
    g.add_edge(edge.first, edge.second);
  }
  if (r > 1 && strongly_connected_components(g).size() != 1) {
    throw PreconditionError("partial marking: edge set has no cycle through every vertex");
  }
  const std::vector<bool> all(r, true);
  Potential psi(r);
  for (std::size_t k = 1; k < r; ++k) {
    psi[k] = path_product(partial, *shortest_path(g, 0, k, all));
  }
  for (const auto& [edge, value] : partial.values()) {
    if (!(value == psi[edge.second] * psi[edge.first].inverse())) {
      throw ValidationError("not a partial marking: a cycle through edge (" +
                            std::to_string(edge.first) + "," + std::to_string(edge.second) +
                            ") has product other than 1");
    }
  }
  EdgeFunction full = partial;
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < r; ++k) {
      if (j == k || partial.get(j, k)) {
        continue;
      }
      // second, independent path from j to k
      const auto direct = path_product(partial, *shortest_path(g, j, k, all));
      if (!(direct == psi[k] * psi[j].inverse())) {
        throw DefectError("partial marking extension is not well defined");
      }
      full.set(j, k, direct);
    }
  }
  return full;
}

Potential compute_potential(const EdgeFunction& marking) {
  if (!is_marking(marking)) {
    throw PreconditionError("function is not a marking; no potential exists");
  }
  Potential psi(marking.vertex_count());
  for (std::size_t k = 1; k < psi.size(); ++k) {
    psi[k] = *marking.get(0, k);
  }
  return psi;
}

EdgeFunction marking_from_potential(const Potential& psi) {
  EdgeFunction f(psi.size());
  for (std::size_t j = 0; j < psi.size(); ++j) {
    for (std::size_t k = 0; k < psi.size(); ++k) {
      if (j != k) {
        f.set(j, k, psi[k] * psi[j].inverse());
      }
    }
  }
  return f;
}

}  // namespace rootlie
