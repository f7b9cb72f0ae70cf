#include "qlap/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "qlap/error.hpp"

namespace qlap {

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<Vertex>(i);
  return out;
}

namespace {

// Initial vertex invariant: degree plus the sorted multiset of neighbor degrees.
std::vector<std::size_t> initial_colors(const Graph& g) {
  std::map<std::vector<std::size_t>, std::size_t> ids;
  std::vector<std::vector<std::size_t>> keys(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    auto& key = keys[v];
    key.push_back(g.neighbors(v).size());
    for (Vertex u : g.neighbors(v)) key.push_back(g.neighbors(u).size());
    std::sort(key.begin() + 1, key.end());
    ids.emplace(key, 0);
  }
  std::size_t next = 0;
  for (auto& [key, id] : ids) id = next++;
  std::vector<std::size_t> colors(g.n());
  for (Vertex v = 0; v < g.n(); ++v) colors[v] = ids[keys[v]];
  return colors;
}

// BFS order, component by component, so each new vertex has an assigned
// neighbor whenever possible.
std::vector<Vertex> search_order(const Graph& g) {
  std::vector<Vertex> order;
  std::vector<bool> seen(g.n(), false);
  for (Vertex start = 0; start < g.n(); ++start) {
    if (seen[start]) continue;
    std::deque<Vertex> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (Vertex v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
  }
  return order;
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, const SearchLimits& limits)
      : g_(g),
        limits_(limits),
        colors_(initial_colors(g)),
        order_(search_order(g)),
        image_(g.n(), 0),
        used_(g.n(), false) {}

  std::vector<Permutation> run() {
    descend(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void descend(std::size_t depth) {
    if (depth == order_.size()) {
      if (found_.size() == limits_.group_limit) {
        throw LimitExceeded("automorphism group order exceeds limit " +
                            std::to_string(limits_.group_limit));
      }
      found_.push_back(image_);
      return;
    }
    const Vertex v = order_[depth];
    for (Vertex w = 0; w < g_.n(); ++w) {
      if (used_[w] || colors_[w] != colors_[v]) continue;
      if (++nodes_ > limits_.node_budget) {
        throw BudgetExceeded("automorphism search exceeded node budget " +
                             std::to_string(limits_.node_budget));
      }
      if (!consistent(depth, v, w)) continue;
      image_[v] = w;
      used_[w] = true;
      descend(depth + 1);
      used_[w] = false;
    }
  }

  bool consistent(std::size_t depth, Vertex v, Vertex w) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const Vertex u = order_[k];
      if (g_.adjacent(u, v) != g_.adjacent(image_[u], w)) return false;
    }
    return true;
  }

  const Graph& g_;
  SearchLimits limits_;
  std::vector<std::size_t> colors_;
  std::vector<Vertex> order_;
  Permutation image_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
  std::uint64_t nodes_ = 0;
};

std::set<Permutation> generated_subgroup(const std::vector<Permutation>& gens,
                                         std::size_t n) {
  Permutation identity(n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = static_cast<Vertex>(i);
  std::set<Permutation> group{identity};
  std::deque<Permutation> frontier{identity};
  while (!frontier.empty()) {
    const Permutation x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : gens) {
      auto y = compose(s, x);
      if (group.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  return group;
}

}  // namespace

PermutationGroup automorphism_group(const Graph& g, const SearchLimits& limits) {
  PermutationGroup group;
  group.n = g.n();
  group.elements = AutomorphismSearch(g, limits).run();

  // Greedy generating set: keep any element outside the span of the previous ones.
  std::set<Permutation> span = generated_subgroup({}, g.n());
  for (const auto& p : group.elements) {
    if (span.size() == group.elements.size()) break;
    if (span.contains(p)) continue;
    group.generators.push_back(p);
    span = generated_subgroup(group.generators, g.n());
  }
  return group;
}

Partition vertex_orbits(const PermutationGroup& group) {
  DisjointSets sets(group.n);
  for (const auto& s : group.generators) {
    for (std::size_t i = 0; i < group.n; ++i) sets.unite(i, s[i]);
  }
  return Partition(0, sets.labels());
}

Partition path_orbits(const PathSpace& space, const PermutationGroup& group) {
  DisjointSets sets(space.size());
  std::vector<Vertex> image(space.alpha() + 1);
  for (const auto& s : group.generators) {
    for (std::size_t i = 0; i < space.size(); ++i) {
      const auto p = space.path(i);
      std::transform(p.begin(), p.end(), image.begin(), [&](Vertex v) { return s[v]; });
      sets.unite(i, *space.index_of(image));
    }
  }
  return Partition(space.alpha(), sets.labels());
}

Partition path_orbits(const Graph& g, const PermutationGroup& group, std::size_t alpha,
                      std::size_t cap) {
  return path_orbits(PathSpace(g, alpha, cap), group);
}

Partition edge_orbits(const Graph& g, const PermutationGroup& group) {
  return path_orbits(g, group, 1);
}

bool is_vertex_transitive(const Graph& g, const SearchLimits& limits) {
  if (g.n() <= 1) return true;
  return vertex_orbits(automorphism_group(g, limits)).block_count() == 1;
}

std::vector<std::vector<std::size_t>> unordered_edge_classes(const Graph& g,
                                                             const Partition& directed) {
  const PathSpace arcs(g, 1);
  DisjointSets sets(g.edges().size());
  std::vector<std::size_t> first_edge(directed.block_count(), kNoIndex);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const auto p = arcs.path(a);
    const auto e = g.edge_index(p[0], p[1]);
    auto& anchor = first_edge[directed.block_of(a)];
    if (anchor == kNoIndex) {
      anchor = e;
    } else {
      sets.unite(anchor, e);
    }
  }
  Partition merged(1, sets.labels());
  return merged.blocks();
}

Rational classical_index(const Graph& g, const PermutationGroup& group) {
  if (g.edges().empty()) throw Error("classical_index: graph has no edges");
  std::size_t smallest = g.edges().size();
  for (const auto& cls : unordered_edge_classes(g, edge_orbits(g, group))) {
    smallest = std::min(smallest, cls.size());
  }
  return Rational(static_cast<std::int64_t>(volume(g)),
                  static_cast<std::int64_t>(2 * smallest));
}

Rational classical_index(const Graph& g, const SearchLimits& limits) {
  if (!is_connected(g)) throw DisconnectedError("graph is disconnected");
  return classical_index(g, automorphism_group(g, limits));
}

}  // namespace qlap
