#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qlap/automorphism.hpp"
#include "qlap/graph.hpp"
#include "qlap/partition.hpp"

namespace qlap {

// Necessary condition for the generator product along (p, q) to be
// non-zero: at every position pair (s,t), p and q agree on adjacency and on
// equality of the visited vertices.
bool base_compatible(const Graph& g, const Path& p, const Path& q);

enum class EliminationOrder { kForward, kReverse };

// Reason a pair was removed from the candidate relation.
enum class KillRule : std::uint8_t {
  kAlive = 0,
  kBase,         // adjacency/equality pattern mismatch
  kReversal,     // reversed pair already removed
  kRestriction,  // a shorter contiguous sub-pair already removed
  kExtension,    // some one-step extension of one side has no partner
};
std::string to_string(KillRule rule);

struct ClosureOptions {
  std::size_t path_cap = kDefaultPathCap;
  // Longest path length carried through the refinement; the effective
  // bound is min(2k+1, max_length).
  std::size_t max_length = kNoIndex;
  EliminationOrder order = EliminationOrder::kForward;
};

/// Greatest relation on paths of length 0..L (L = min(2k+1, max_length))
/// inside base_compatible that is stable under reversal, restriction to
/// contiguous sub-paths, and one-step left/right extension.
///
/// Classical automorphism images always survive, so the transitive closure
/// of the result is coarser than the orbit partition.
class ClosureFixedPoint {
 public:
  ClosureFixedPoint(const Graph& g, unsigned k, const ClosureOptions& options = {});

  unsigned k() const noexcept { return k_; }
  std::size_t max_length() const noexcept { return layers_.size() - 1; }
  std::size_t sweeps() const noexcept { return sweeps_; }

  const PathSpace& space(std::size_t length) const { return layers_.at(length).space; }
  // Pair relation before transitive closure.
  bool related(std::size_t length, std::size_t i, std::size_t j) const;
  KillRule kill_rule(std::size_t length, std::size_t i, std::size_t j) const;
  // Transitive closure of related().
  const Partition& partition(std::size_t length) const { return layers_.at(length).partition; }
  // Number of related ordered pairs at a length (diagonal included).
  std::size_t related_pair_count(std::size_t length) const;

 private:
  struct Layer {
    PathSpace space;
    std::vector<std::size_t> bucket_of;
    std::vector<std::size_t> slot_of;
    std::vector<std::vector<std::size_t>> buckets;
    // Per bucket, row-major slot x slot state.
    std::vector<std::vector<std::uint64_t>> alive;
    std::vector<std::vector<KillRule>> reason;
    std::vector<std::size_t> prefix, suffix;  // indices one length down
    std::vector<std::vector<std::size_t>> right, left;  // indices one length up
    Partition partition;
  };

  bool alive(const Layer& layer, std::size_t i, std::size_t j) const;
  void kill(Layer& layer, std::size_t i, std::size_t j, KillRule rule);
  KillRule violated_rule(std::size_t length, std::size_t i, std::size_t j) const;
  bool extensions_matched(const Layer& up, const std::vector<std::size_t>& from,
                          const std::vector<std::size_t>& to) const;

  unsigned k_;
  std::vector<Layer> layers_;
  std::size_t sweeps_ = 0;
};

Partition closure_partition(const Graph& g, unsigned k, std::size_t alpha,
                            const ClosureOptions& options = {});

struct PartitionBracket {
  unsigned k = 1;
  std::size_t alpha = 1;
  Partition lower;  // classical orbits
  Partition upper;  // closure fixed point
  bool exact = false;

  bool operator==(const PartitionBracket&) const = default;
};

PartitionBracket bracket(const Graph& g, const PermutationGroup& group, unsigned k,
                         std::size_t alpha, const ClosureOptions& options = {});
PartitionBracket bracket(const Graph& g, unsigned k, std::size_t alpha,
                         const ClosureOptions& options = {}, const SearchLimits& limits = {});

struct IntegerInterval {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool operator==(const IntegerInterval&) const = default;
};

// [min lower block, min upper block] over directed edges.
IntegerInterval r_k_bracket(const PartitionBracket& edges);
IntegerInterval r_k_bracket(const Graph& g, unsigned k, const ClosureOptions& options = {},
                            const SearchLimits& limits = {});

enum class WitnessStatus { kClassicallyEquivalent, kClosureAlive, kClosureKilled };
std::string to_string(WitnessStatus status);

struct CompatibilityWitness {
  Path p;
  Path q;
  WitnessStatus status = WitnessStatus::kClosureAlive;
  KillRule rule = KillRule::kAlive;
  bool same_upper_block = false;
};

CompatibilityWitness explain_pair(const ClosureFixedPoint& closure, const Partition& lower,
                                  std::size_t length, std::size_t i, std::size_t j);

struct MonotonicityEntry {
  unsigned k = 1;
  IntegerInterval r;
  std::size_t upper_classes = 0;
};

struct MonotonicityReport {
  std::vector<MonotonicityEntry> entries;
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

// Checks that the directed-edge upper partitions refine as k grows and that
// r_k never increases with k.
MonotonicityReport monotonicity_check(const Graph& g, unsigned k_max,
                                      const ClosureOptions& options = {},
                                      const SearchLimits& limits = {});

}  // namespace qlap
