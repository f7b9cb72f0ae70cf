#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

namespace qlap {

// What the element indices of a Partition refer to. Elements index the
// lexicographically ordered PathSpace of the given length: length 0 paths
// are vertices, length 1 paths are directed edges.
enum class GroundSet { kVertices, kDirectedEdges, kPaths };

GroundSet ground_for_length(std::size_t alpha);
std::string to_string(GroundSet ground);

/// Partition of {0..size-1} in canonical form: blocks sorted internally and
/// ordered by their smallest element.
class Partition {
 public:
  Partition() = default;
  Partition(std::size_t alpha, std::vector<std::size_t> labels);
  static Partition discrete(std::size_t alpha, std::size_t size);

  GroundSet ground() const noexcept { return ground_for_length(alpha_); }
  std::size_t alpha() const noexcept { return alpha_; }
  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  std::size_t block_of(std::size_t element) const { return block_of_[element]; }
  bool same_block(std::size_t a, std::size_t b) const { return block_of_[a] == block_of_[b]; }
  std::size_t min_block_size() const;

  // Every block of *this lies inside a single block of coarser.
  bool refines(const Partition& coarser) const;

  bool operator==(const Partition&) const = default;

 private:
  std::size_t alpha_ = 0;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> labels() {
    std::vector<std::size_t> out(parent_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = find(i);
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace qlap
