#include "qlap/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include "qlap/error.hpp"

namespace qlap {

Graph::Graph(std::size_t n, std::vector<std::uint8_t> adjacency)
    : n_(n),
      adjacency_(std::move(adjacency)),
      neighbors_(n),
      edge_index_(n * n, kNoIndex) {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (adjacency_[i * n_ + j] == 0) continue;
      neighbors_[i].push_back(static_cast<Vertex>(j));
      if (i < j) {
        edge_index_[i * n_ + j] = edge_index_[j * n_ + i] = edges_.size();
        edges_.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
}

Graph Graph::from_edges(std::size_t n,
                        std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<std::uint8_t> adjacency(n * n, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw RangeError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") references a vertex >= n = " + std::to_string(n));
    }
    if (u == v) throw LoopError("loop at vertex " + std::to_string(u));
    adjacency[u * n + v] = adjacency[v * n + u] = 1;
  }
  return Graph(n, std::move(adjacency));
}

Graph Graph::from_matrix(std::size_t n, std::span<const int> entries) {
  if (entries.size() != n * n) {
    throw ParseError("adjacency matrix needs " + std::to_string(n * n) +
                     " entries, got " + std::to_string(entries.size()));
  }
  std::vector<std::uint8_t> adjacency(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int e = entries[i * n + j];
      if (e != 0 && e != 1) {
        throw ParseError("adjacency entry (" + std::to_string(i) + ", " +
                         std::to_string(j) + ") is not 0/1");
      }
      if (i == j && e == 1) throw LoopError("loop at vertex " + std::to_string(i));
      if (entries[j * n + i] != e) {
        throw AsymmetryError("adjacency matrix not symmetric at (" +
                             std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      adjacency[i * n + j] = static_cast<std::uint8_t>(e);
    }
  }
  return Graph(n, std::move(adjacency));
}

namespace {

struct DataLine {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<DataLine> tokenize(std::string_view source) {
  std::vector<DataLine> lines;
  std::istringstream in{std::string(source)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    DataLine data{number, {}};
    for (std::string w; words >> w;) data.tokens.push_back(w);
    lines.push_back(std::move(data));
  }
  return lines;
}

std::size_t parse_index(const std::string& token, std::size_t line) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("line " + std::to_string(line) + ": '" + token +
                     "' is not a nonnegative integer");
  }
  return value;
}

}  // namespace

Graph load_graph(std::string_view source, InputFormat format) {
  const auto lines = tokenize(source);
  if (lines.empty()) throw ParseError("empty input: expected vertex count");
  if (lines[0].tokens.size() != 1) {
    throw ParseError("line " + std::to_string(lines[0].number) +
                     ": expected a single vertex count");
  }
  const std::size_t n = parse_index(lines[0].tokens[0], lines[0].number);
  const std::span<const DataLine> body(lines.data() + 1, lines.size() - 1);

  if (format == InputFormat::kAuto) {
    const bool square = n > 2 && body.size() == n &&
                        std::all_of(body.begin(), body.end(), [n](const DataLine& l) {
                          return l.tokens.size() == n;
                        });
    format = square ? InputFormat::kMatrix : InputFormat::kEdgeList;
  }

  if (format == InputFormat::kMatrix) {
    if (body.size() != n) {
      throw ParseError("adjacency matrix needs " + std::to_string(n) +
                       " rows, got " + std::to_string(body.size()));
    }
    std::vector<int> entries;
    entries.reserve(n * n);
    for (const auto& l : body) {
      if (l.tokens.size() != n) {
        throw ParseError("line " + std::to_string(l.number) + ": expected " +
                         std::to_string(n) + " entries");
      }
      for (const auto& t : l.tokens) {
        const auto v = parse_index(t, l.number);
        if (v > 1) throw ParseError("line " + std::to_string(l.number) + ": entry not 0/1");
        entries.push_back(static_cast<int>(v));
      }
    }
    return Graph::from_matrix(n, entries);
  }

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& l : body) {
    if (l.tokens.size() != 2) {
      throw ParseError("line " + std::to_string(l.number) +
                       ": expected an edge 'u v'");
    }
    const auto u = parse_index(l.tokens[0], l.number);
    const auto v = parse_index(l.tokens[1], l.number);
    if (u >= n || v >= n) {
      throw RangeError("line " + std::to_string(l.number) + ": vertex index out of range for n = " +
                       std::to_string(n));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edges(n, edges);
}

Graph load_graph_file(const std::string& path, InputFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return load_graph(text.str(), format);
}

std::size_t degree(const Graph& g, Vertex i) {
  if (i >= g.n()) throw RangeError("vertex " + std::to_string(i) + " out of range");
  return g.neighbors(i).size();
}

std::size_t volume(const Graph& g) { return 2 * g.edges().size(); }

std::optional<std::size_t> regular_degree(const Graph& g) {
  if (g.n() == 0) return std::nullopt;
  const auto s = g.neighbors(0).size();
  for (Vertex i = 1; i < g.n(); ++i) {
    if (g.neighbors(i).size() != s) return std::nullopt;
  }
  return s;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex root) {
  if (root >= g.n()) throw RangeError("root " + std::to_string(root) + " out of range");
  std::vector<std::size_t> dist(g.n(), kNoIndex);
  std::deque<Vertex> queue{root};
  dist[root] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] == kNoIndex) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), kNoIndex) == dist.end();
}

std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex i = 0; i < g.n(); ++i) {
    for (std::size_t d : bfs_distances(g, i)) {
      if (d == kNoIndex) throw DisconnectedError("graph is disconnected");
      best = std::max(best, d);
    }
  }
  return best;
}

Path Path::reversed() const {
  return Path{{vertices.rbegin(), vertices.rend()}};
}

bool is_path(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) return false;
  for (auto v : vertices) {
    if (v >= g.n()) return false;
  }
  for (std::size_t s = 0; s + 1 < vertices.size(); ++s) {
    if (!g.adjacent(vertices[s], vertices[s + 1])) return false;
  }
  return true;
}

PathSpace::PathSpace(const Graph& g, std::size_t alpha, std::size_t cap) : alpha_(alpha) {
  const std::size_t width = alpha + 1;
  std::vector<Vertex> current;
  current.reserve(width);

  // Depth-first over ascending neighbor lists yields lexicographic order.
  auto extend = [&](auto&& self) -> void {
    if (current.size() == width) {
      if (++count_ > cap) {
        throw CapacityExceeded("more than " + std::to_string(cap) + " paths of length " +
                                   std::to_string(alpha),
                               count_);
      }
      data_.insert(data_.end(), current.begin(), current.end());
      return;
    }
    for (Vertex v : g.neighbors(current.back())) {
      current.push_back(v);
      self(self);
      current.pop_back();
    }
  };
  for (Vertex start = 0; start < g.n(); ++start) {
    current.assign(1, start);
    extend(extend);
  }

  reverse_.resize(count_);
  std::vector<Vertex> rev(width);
  for (std::size_t i = 0; i < count_; ++i) {
    const auto p = path(i);
    std::reverse_copy(p.begin(), p.end(), rev.begin());
    reverse_[i] = *index_of(rev);
  }
}

Path PathSpace::path_value(std::size_t index) const {
  const auto p = path(index);
  return Path{{p.begin(), p.end()}};
}

std::optional<std::size_t> PathSpace::index_of(std::span<const Vertex> vertices) const {
  if (vertices.size() != alpha_ + 1) return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = count_;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const auto p = path(mid);
    if (std::lexicographical_compare(p.begin(), p.end(), vertices.begin(), vertices.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < count_ && std::equal(vertices.begin(), vertices.end(), path(lo).begin())) {
    return lo;
  }
  return std::nullopt;
}

std::vector<Path> enumerate_paths(const Graph& g, std::size_t alpha, std::size_t cap) {
  const PathSpace space(g, alpha, cap);
  std::vector<Path> out;
  out.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) out.push_back(space.path_value(i));
  return out;
}

std::vector<Path> bfs_shortest_path_family(const Graph& g, Vertex root, TieBreak order) {
  if (root >= g.n()) throw RangeError("root " + std::to_string(root) + " out of range");
  std::vector<std::size_t> parent(g.n(), kNoIndex);
  std::vector<bool> seen(g.n(), false);
  std::deque<Vertex> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    std::vector<Vertex> next(g.neighbors(u).begin(), g.neighbors(u).end());
    if (order == TieBreak::kDescending) std::reverse(next.begin(), next.end());
    for (Vertex v : next) {
      if (seen[v]) continue;
      seen[v] = true;
      parent[v] = u;
      queue.push_back(v);
    }
  }

  std::vector<Path> family;
  for (Vertex target = 0; target < g.n(); ++target) {
    if (target == root) continue;
    if (!seen[target]) throw DisconnectedError("graph is disconnected");
    Path p;
    for (std::size_t v = target; v != kNoIndex; v = parent[v]) {
      p.vertices.push_back(static_cast<Vertex>(v));
    }
    std::reverse(p.vertices.begin(), p.vertices.end());
    family.push_back(std::move(p));
  }
  return family;
}

}  // namespace qlap
