#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "qlap/graph.hpp"
#include "qlap/partition.hpp"

namespace qlap {

using Rational = boost::rational<std::int64_t>;
using Permutation = std::vector<Vertex>;

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;
inline constexpr std::size_t kDefaultGroupLimit = 1'000'000;

struct SearchLimits {
  std::uint64_t node_budget = kDefaultSearchBudget;
  std::size_t group_limit = kDefaultGroupLimit;
};

/// Fully enumerated permutation group acting on {0..n-1}.
struct PermutationGroup {
  std::size_t n = 0;
  std::vector<Permutation> elements;  // lexicographic by image tuple
  std::vector<Permutation> generators;

  std::size_t order() const noexcept { return elements.size(); }
  bool operator==(const PermutationGroup&) const = default;
};

// (a*b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

// Backtracking search over degree and neighbor-degree refined vertex colors.
PermutationGroup automorphism_group(const Graph& g, const SearchLimits& limits = {});

Partition vertex_orbits(const PermutationGroup& group);
Partition edge_orbits(const Graph& g, const PermutationGroup& group);
Partition path_orbits(const Graph& g, const PermutationGroup& group, std::size_t alpha,
                      std::size_t cap = kDefaultPathCap);
// Orbits on an already enumerated path space.
Partition path_orbits(const PathSpace& space, const PermutationGroup& group);

bool is_vertex_transitive(const Graph& g, const SearchLimits& limits = {});

// Merges the blocks of (i,j) and (j,i) and returns the induced partition of
// the unordered edges g.edges().
std::vector<std::vector<std::size_t>> unordered_edge_classes(const Graph& g,
                                                             const Partition& directed);

// V / (2 * smallest unordered edge orbit).
Rational classical_index(const Graph& g, const SearchLimits& limits = {});
Rational classical_index(const Graph& g, const PermutationGroup& group);

}  // namespace qlap
