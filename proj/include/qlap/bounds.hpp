#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlap/automorphism.hpp"
#include "qlap/graph.hpp"
#include "qlap/partition.hpp"
#include "qlap/quantum_equiv.hpp"
#include "qlap/spectral.hpp"

namespace qlap {

// How edge classes are sized when forming ind_k = V / r_k.
//   kDirected:  r_k is the smallest class of ordered adjacent pairs.
//   kUnordered: classes are merged over both orientations and ind_k is
//               V / (2 * smallest unordered class), the same shape as ind.
enum class EdgeConvention { kDirected, kUnordered };
std::string to_string(EdgeConvention convention);
EdgeConvention edge_convention_from_string(const std::string& name);

struct RationalInterval {
  Rational lo;
  Rational hi;
  bool operator==(const RationalInterval&) const = default;
};

// ind_k from one side of a directed-edge partition.
Rational index_from_edge_partition(const Graph& g, const Partition& edges,
                                   EdgeConvention convention);
// [from the upper partition, from the lower partition].
RationalInterval ind_k_interval(const Graph& g, const PartitionBracket& edges,
                                EdgeConvention convention = EdgeConvention::kDirected);
RationalInterval ind_k_interval(const Graph& g, unsigned k,
                                EdgeConvention convention = EdgeConvention::kDirected,
                                const ClosureOptions& options = {},
                                const SearchLimits& limits = {});

struct EdgePathCount {
  std::pair<Vertex, Vertex> edge;  // unordered, first < second
  std::uint64_t count = 0;
  bool operator==(const EdgePathCount&) const = default;
};

struct EdgeCounts {
  std::vector<EdgePathCount> per_edge;  // aligned with Graph::edges()
  std::size_t collected_paths = 0;
  std::uint64_t total_length = 0;  // sum of lengths of the collected paths
  bool operator==(const EdgeCounts&) const = default;
};

// Counts, for every edge, its traversals (either orientation) over all paths
// that are related under `relation` to a member of the shortest-path family
// rooted at `root`. relation[len] partitions PathSpace(g, len).
EdgeCounts count_Ne(const Graph& g, std::span<const Partition> relation, Vertex root,
                    TieBreak order = TieBreak::kAscending);

struct ConstancyReport {
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
  bool operator==(const ConstancyReport&) const = default;
};

// Edge counts must agree on every block of the directed-edge partition.
ConstancyReport verify_class_constancy(const Graph& g, const EdgeCounts& counts,
                                       const Partition& edge_classes);

struct InequalityRow {
  std::pair<Vertex, Vertex> edge;
  std::uint64_t count = 0;
  std::size_t class_size = 0;  // unordered edges in the class of this edge
  double per_class = 0.0;      // n^2 D / (2 |class|)
  double per_min_class = 0.0;  // n^2 D / (2 min |class|)
  double index_form = 0.0;     // n D ind_k / V
  bool count_holds = false;    // count <= per_class
  bool class_holds = false;    // per_class <= per_min_class
  bool index_holds = false;    // per_min_class <= index_form
  bool operator==(const InequalityRow&) const = default;
};

struct InequalityReport {
  std::vector<InequalityRow> rows;
  // Smallest right-minus-left margin of each inequality over all edges.
  double count_margin = 0.0;
  double class_margin = 0.0;
  double index_margin = 0.0;
  std::size_t violations = 0;
  bool ok() const noexcept { return violations == 0; }
  bool operator==(const InequalityReport&) const = default;
};

InequalityReport verify_inequality_chain(const Graph& g, const EdgeCounts& counts,
                                         const Partition& edge_classes, std::size_t diameter,
                                         const Rational& ind_k);

struct BoundsOptions {
  EdgeConvention convention = EdgeConvention::kDirected;
  Vertex root = 0;
  TieBreak tie_break = TieBreak::kAscending;
  ClosureOptions closure;
  SearchLimits limits;
  double check_tol = 1e-8;
};

struct IndexEntry {
  unsigned k = 1;
  RationalInterval interval;
  bool operator==(const IndexEntry&) const = default;
};

// Per bracket side (classical orbits or closure fixed point).
struct SideAnalysis {
  EdgeCounts counts;
  ConstancyReport constancy;
  InequalityReport inequality;
  bool operator==(const SideAnalysis&) const = default;
};

struct BoundReport {
  std::size_t n = 0;
  std::size_t diameter = 0;
  std::size_t volume = 0;
  std::optional<std::size_t> regular_degree;
  unsigned k = 1;
  EdgeConvention convention = EdgeConvention::kDirected;
  Vertex root = 0;
  double lambda1 = 0.0;
  Rational ind_classical;
  std::vector<IndexEntry> ind_k;  // k' = 1..k
  double chung_bound = 0.0;       // 1 / (D^2 ind)
  bool applicable = false;        // D <= 2k+1
  std::optional<double> improved_bound_certified;  // from the orbit side of ind_k
  std::optional<double> improved_bound_candidate;  // from the closure side of ind_k
  bool exact = false;  // orbit and closure partitions agree on directed edges
  std::optional<SideAnalysis> lower;
  std::optional<SideAnalysis> upper;
  std::vector<std::string> violations;

  bool operator==(const BoundReport&) const = default;
};

BoundReport evaluate_bounds(const Graph& g, unsigned k, const SpectralResult& spectral,
                            const BoundsOptions& options = {});

}  // namespace qlap
