#ifndef ROOTLIE_DIGRAPH_HPP
#define ROOTLIE_DIGRAPH_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace rootlie {

/// Small directed graph on vertices 0..n-1 with sorted adjacency lists.
class Digraph {
public:
  explicit Digraph(std::size_t n = 0) : out_(n) {}

  std::size_t size() const noexcept { return out_.size(); }
  void add_edge(std::size_t from, std::size_t to);
  bool has_edge(std::size_t from, std::size_t to) const;
  const std::vector<std::size_t>& successors(std::size_t v) const { return out_.at(v); }
  std::size_t edge_count() const;

  /// Subgraph induced on the given vertices, relabelled 0..k-1 in the given
  /// order.
  Digraph induced(const std::vector<std::size_t>& vertices) const;

private:
  std::vector<std::vector<std::size_t>> out_;
};

/// Strongly connected components (Tarjan). Each component is sorted; the
/// components are ordered by their smallest vertex.
std::vector<std::vector<std::size_t>> strongly_connected_components(const Digraph& g);

/// Shortest path from -> to (inclusive of both ends), restricted to vertices
/// for which `allowed` is true. A path from v to itself is {v}.
std::optional<std::vector<std::size_t>> shortest_path(const Digraph& g, std::size_t from,
                                                      std::size_t to,
                                                      const std::vector<bool>& allowed);

/// Johnson's enumeration of elementary circuits. Every circuit is reported
/// once, starting from its smallest vertex. The visitor returns false to stop.
/// Returns the number of circuits visited.
std::size_t for_each_simple_cycle(
    const Digraph& g, const std::function<bool(const std::vector<std::size_t>&)>& visit);

/// Splits a closed walk (first vertex not repeated at the end) into simple
/// cycles, each rotated to start at its smallest vertex.
std::vector<std::vector<std::size_t>> split_closed_walk(const std::vector<std::size_t>& walk);

}  // namespace rootlie

#endif
