#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace qlap {

using Vertex = std::uint32_t;

inline constexpr std::size_t kDefaultPathCap = 1'000'000;
inline constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

/// Simple undirected graph on vertices 0..n-1.
///
/// Instances are only produced by the validating factories, so every Graph
/// has a symmetric 0/1 adjacency matrix with zero diagonal.
class Graph {
 public:
  static Graph from_edges(std::size_t n,
                          std::span<const std::pair<Vertex, Vertex>> edges);
  static Graph from_matrix(std::size_t n, std::span<const int> entries);

  std::size_t n() const noexcept { return n_; }
  bool adjacent(Vertex i, Vertex j) const noexcept {
    return adjacency_[static_cast<std::size_t>(i) * n_ + j] != 0;
  }
  std::span<const Vertex> neighbors(Vertex i) const { return neighbors_[i]; }

  // Unordered edges {i,j} with i < j, lexicographically sorted.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept {
    return edges_;
  }
  // Position of {i,j} in edges(), or kNoIndex if not adjacent.
  std::size_t edge_index(Vertex i, Vertex j) const noexcept {
    return edge_index_[static_cast<std::size_t>(i) * n_ + j];
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adjacency_ == other.adjacency_;
  }

 private:
  explicit Graph(std::size_t n, std::vector<std::uint8_t> adjacency);

  std::size_t n_ = 0;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::size_t> edge_index_;
};

enum class InputFormat { kAuto, kEdgeList, kMatrix };

// Parses the edge-list or adjacency-matrix text format. Blank lines and
// lines starting with '#' are ignored. In kAuto mode the matrix reading is
// chosen when n > 2 and every data line carries exactly n tokens.
Graph load_graph(std::string_view source, InputFormat format = InputFormat::kAuto);
Graph load_graph_file(const std::string& path, InputFormat format = InputFormat::kAuto);

std::size_t degree(const Graph& g, Vertex i);
std::size_t volume(const Graph& g);
bool is_connected(const Graph& g);
std::optional<std::size_t> regular_degree(const Graph& g);

// BFS distances from root; unreachable vertices hold kNoIndex.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex root);
std::size_t diameter(const Graph& g);

struct Path {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
  Path reversed() const;
  auto operator<=>(const Path&) const = default;
};

bool is_path(const Graph& g, std::span<const Vertex> vertices);

/// All walks with `alpha` edges, stored flat in lexicographic order.
///
/// Consecutive vertices must be adjacent; vertices may repeat.
class PathSpace {
 public:
  PathSpace(const Graph& g, std::size_t alpha, std::size_t cap = kDefaultPathCap);

  std::size_t alpha() const noexcept { return alpha_; }
  std::size_t size() const noexcept { return count_; }
  std::span<const Vertex> path(std::size_t index) const {
    return {data_.data() + index * (alpha_ + 1), alpha_ + 1};
  }
  Path path_value(std::size_t index) const;
  std::optional<std::size_t> index_of(std::span<const Vertex> vertices) const;
  std::size_t reverse_index(std::size_t index) const { return reverse_[index]; }

 private:
  std::size_t alpha_;
  std::size_t count_ = 0;
  std::vector<Vertex> data_;
  std::vector<std::size_t> reverse_;
};

std::vector<Path> enumerate_paths(const Graph& g, std::size_t alpha,
                                  std::size_t cap = kDefaultPathCap);

enum class TieBreak { kAscending, kDescending };

// One shortest path from root to every other vertex, read off BFS parent
// pointers. kAscending explores neighbors in increasing vertex order.
std::vector<Path> bfs_shortest_path_family(const Graph& g, Vertex root,
                                           TieBreak order = TieBreak::kAscending);

}  // namespace qlap
