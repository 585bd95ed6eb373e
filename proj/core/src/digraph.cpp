#include "rootlie/digraph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

namespace rootlie {

void Digraph::add_edge(std::size_t from, std::size_t to) {
  auto& adj = out_.at(from);
  auto it = std::lower_bound(adj.begin(), adj.end(), to);
  if (it == adj.end() || *it != to) {
    adj.insert(it, to);
  }
}

bool Digraph::has_edge(std::size_t from, std::size_t to) const {
  const auto& adj = out_.at(from);
  return std::binary_search(adj.begin(), adj.end(), to);
}

std::size_t Digraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& adj : out_) {
    n += adj.size();
  }
  return n;
}

Digraph Digraph::induced(const std::vector<std::size_t>& vertices) const {
  std::unordered_map<std::size_t, std::size_t> label;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    label.emplace(vertices[i], i);
  }
  Digraph sub(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (auto w : out_.at(vertices[i])) {
      if (auto it = label.find(w); it != label.end()) {
        sub.add_edge(i, it->second);
      }
    }
  }
  return sub;
}

namespace {

struct Tarjan {
  const Digraph& g;
  std::vector<int> index;
  std::vector<int> low;
  std::vector<bool> on_stack;
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  int counter = 0;

  explicit Tarjan(const Digraph& graph)
      : g(graph), index(graph.size(), -1), low(graph.size(), 0), on_stack(graph.size(), false) {}

  void visit(std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (auto w : g.successors(v)) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      components.push_back(std::move(comp));
    }
  }
};

}  // namespace

std::vector<std::vector<std::size_t>> strongly_connected_components(const Digraph& g) {
  Tarjan t(g);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (t.index[v] < 0) {
      t.visit(v);
    }
  }
  std::sort(t.components.begin(), t.components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return std::move(t.components);
}

std::optional<std::vector<std::size_t>> shortest_path(const Digraph& g, std::size_t from,
                                                      std::size_t to,
                                                      const std::vector<bool>& allowed) {
  if (from == to) {
    return std::vector<std::size_t>{from};
  }
  std::vector<std::size_t> parent(g.size(), g.size());
  std::deque<std::size_t> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto w : g.successors(v)) {
      if (!allowed[w] || parent[w] != g.size()) {
        continue;
      }
      parent[w] = v;
      if (w == to) {
        std::vector<std::size_t> path{to};
        for (auto x = to; x != from;) {
          x = parent[x];
          path.push_back(x);
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

namespace {

class Johnson {
public:
  Johnson(const Digraph& g, const std::function<bool(const std::vector<std::size_t>&)>& visit)
      : g_(g), visit_(visit), blocked_(g.size(), false), blocked_by_(g.size()) {}

  std::size_t run() {
    const auto n = g_.size();
    for (start_ = 0; start_ < n && !stop_; ++start_) {
      // Component of start_ in the subgraph induced by vertices >= start_.
      std::vector<std::size_t> tail;
      for (std::size_t v = start_; v < n; ++v) {
        tail.push_back(v);
      }
      const Digraph sub = g_.induced(tail);
      const auto comps = strongly_connected_components(sub);
      const auto& comp = comps.front();  // contains local vertex 0 == start_
      if (comp.size() < 2) {
        continue;
      }
      in_comp_.assign(n, false);
      for (auto local : comp) {
        in_comp_[local + start_] = true;
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (in_comp_[v]) {
          blocked_[v] = false;
          blocked_by_[v].clear();
        }
      }
      circuit(start_);
    }
    return count_;
  }

private:
  bool circuit(std::size_t v) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = true;
    for (auto w : g_.successors(v)) {
      if (stop_) {
        break;
      }
      if (!in_comp_[w]) {
        continue;
      }
      if (w == start_) {
        ++count_;
        if (!visit_(path_)) {
          stop_ = true;
        }
        found = true;
      } else if (!blocked_[w] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (auto w : g_.successors(v)) {
        if (in_comp_[w]) {
          blocked_by_[w].insert(v);
        }
      }
    }
    path_.pop_back();
    return found;
  }

  void unblock(std::size_t u) {
    blocked_[u] = false;
    auto pending = std::move(blocked_by_[u]);
    blocked_by_[u].clear();
    for (auto w : pending) {
      if (blocked_[w]) {
        unblock(w);
      }
    }
  }

  const Digraph& g_;
  const std::function<bool(const std::vector<std::size_t>&)>& visit_;
  std::vector<bool> blocked_;
  std::vector<std::set<std::size_t>> blocked_by_;
  std::vector<bool> in_comp_;
  std::vector<std::size_t> path_;
  std::size_t start_ = 0;
  std::size_t count_ = 0;
  bool stop_ = false;
};

}  // namespace

std::size_t for_each_simple_cycle(
    const Digraph& g, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  return Johnson(g, visit).run();
}

std::vector<std::vector<std::size_t>> split_closed_walk(const std::vector<std::size_t>& walk) {
  std::vector<std::vector<std::size_t>> cycles;
  if (walk.empty()) {
    return cycles;
  }
  std::vector<std::size_t> stack;
  std::unordered_map<std::size_t, std::size_t> position;
  auto push = [&](std::size_t x) {
    auto it = position.find(x);
    if (it == position.end()) {
      position.emplace(x, stack.size());
      stack.push_back(x);
      return;
    }
    std::vector<std::size_t> cycle(stack.begin() + static_cast<std::ptrdiff_t>(it->second),
                                   stack.end());
    for (std::size_t i = it->second + 1; i < stack.size(); ++i) {
      position.erase(stack[i]);
    }
    stack.resize(it->second + 1);
    if (cycle.size() >= 2) {
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      cycles.push_back(std::move(cycle));
    }
  };
  for (auto x : walk) {
    push(x);
  }
  push(walk.front());
  return cycles;
}

}  // namespace rootlie
