#include "qlap/partition.hpp"

#include <algorithm>
#include <map>

namespace qlap {

GroundSet ground_for_length(std::size_t alpha) {
  switch (alpha) {
    case 0:
      return GroundSet::kVertices;
    case 1:
      return GroundSet::kDirectedEdges;
    default:
      return GroundSet::kPaths;
  }
}

std::string to_string(GroundSet ground) {
  switch (ground) {
    case GroundSet::kVertices:
      return "vertices";
    case GroundSet::kDirectedEdges:
      return "directed_edges";
    case GroundSet::kPaths:
      return "paths";
  }
  return "unknown";
}

Partition::Partition(std::size_t alpha, std::vector<std::size_t> labels)
    : alpha_(alpha), block_of_(labels.size()) {
  // Relabel blocks in order of first appearance, i.e. by smallest element.
  std::map<std::size_t, std::size_t> relabel;
  for (std::size_t e = 0; e < labels.size(); ++e) {
    auto [it, inserted] = relabel.try_emplace(labels[e], blocks_.size());
    if (inserted) blocks_.emplace_back();
    blocks_[it->second].push_back(e);
    block_of_[e] = it->second;
  }
}

Partition Partition::discrete(std::size_t alpha, std::size_t size) {
  std::vector<std::size_t> labels(size);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return Partition(alpha, std::move(labels));
}

std::size_t Partition::min_block_size() const {
  std::size_t best = 0;
  for (const auto& b : blocks_) {
    if (best == 0 || b.size() < best) best = b.size();
  }
  return best;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.size() != size()) return false;
  for (const auto& b : blocks_) {
    const auto target = coarser.block_of(b.front());
    for (std::size_t e : b) {
      if (coarser.block_of(e) != target) return false;
    }
  }
  return true;
}

}  // namespace qlap
