#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "qlap/error.hpp"
#include "qlap/graph.hpp"
#include "support/graphs.hpp"

using namespace qlap;
using namespace qlap::testing;

namespace {

// Exhaustive walk count: all (alpha+1)-tuples whose consecutive entries are adjacent.
std::size_t brute_walk_count(const Graph& g, std::size_t alpha) {
  std::size_t total = 0;
  std::vector<Vertex> t(alpha + 1, 0);
  const std::size_t n = g.n();
  std::size_t combos = 1;
  for (std::size_t i = 0; i <= alpha; ++i) combos *= n;
  for (std::size_t c = 0; c < combos; ++c) {
    std::size_t x = c;
    for (auto& v : t) {
      v = static_cast<Vertex>(x % n);
      x /= n;
    }
    bool ok = true;
    for (std::size_t s = 0; s < alpha && ok; ++s) ok = g.adjacent(t[s], t[s + 1]);
    total += ok;
  }
  return total;
}

// Floyd-Warshall diameter.
std::size_t brute_diameter(const Graph& g) {
  const std::size_t n = g.n(), inf = 1 << 20;
  std::vector<std::size_t> d(n * n, inf);
  for (Vertex i = 0; i < n; ++i) {
    d[i * n + i] = 0;
    for (Vertex j : g.neighbors(i)) d[i * n + j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
  return *std::max_element(d.begin(), d.end());
}

}  // namespace

TEST_CASE("load_graph edge list") {
  const Graph g = load_graph("3\n0 1\n1 2\n0 2");
  CHECK(g.n() == 3);
  CHECK(g.edges().size() == 3);
  CHECK(g == complete(3));
}

TEST_CASE("load_graph rejects malformed input") {
  CHECK_THROWS_AS(load_graph("2\n0 0"), LoopError);
  CHECK_THROWS_AS(load_graph("3\n0 3"), RangeError);
  CHECK_THROWS_AS(load_graph("3\n0 x"), ParseError);
  CHECK_THROWS_AS(load_graph("3\n0 1 2"), ParseError);
  CHECK_THROWS_AS(load_graph(""), ParseError);
  CHECK_THROWS_AS(load_graph("3\n0 1 0\n0 0 1\n0 1 0"), AsymmetryError);
  CHECK_THROWS_AS(load_graph("3\n1 1 0\n1 0 1\n0 1 0"), LoopError);
}

TEST_CASE("load_graph adjacency matrix") {
  const Graph g = load_graph("# C4\n4\n0 1 0 1\n1 0 1 0\n0 1 0 1\n1 0 1 0\n");
  CHECK(g == cycle(4));
  for (Vertex i = 0; i < 4; ++i) CHECK(degree(g, i) == 2);
  CHECK(load_graph("3\n0 1\n1 2", InputFormat::kEdgeList) == path_graph(3));
}

TEST_CASE("duplicate edges collapse") {
  const Graph g = load_graph("3\n0 1\n1 0\n0 1\n1 2");
  CHECK(g.edges().size() == 2);
}

TEST_CASE("degree volume diameter") {
  CHECK(degree(complete(4), 0) == 3);
  CHECK(degree(cycle(5), 2) == 2);
  for (Vertex i = 0; i < 10; ++i) CHECK(degree(petersen(), i) == 3);
  CHECK_THROWS_AS(degree(cycle(5), 5), RangeError);
  CHECK(volume(cycle(6)) == 12);
  CHECK(volume(complete(4)) == 12);
  CHECK(volume(petersen()) == 30);
  CHECK(diameter(complete(5)) == 1);
  CHECK(diameter(cycle(6)) == 3);
  CHECK(diameter(petersen()) == 2);
  CHECK_THROWS_AS(diameter(load_graph("4\n0 1\n2 3")), DisconnectedError);
}

TEST_CASE("diameter matches Floyd-Warshall on random graphs") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = random_connected(12, 0.15, seed);
    CHECK(diameter(g) == brute_diameter(g));
  }
}

TEST_CASE("connectivity and regularity") {
  CHECK(is_connected(petersen()));
  CHECK_FALSE(is_connected(load_graph("4\n0 1\n2 3")));
  CHECK(regular_degree(petersen()) == 3u);
  CHECK_FALSE(regular_degree(star(3)).has_value());
}

TEST_CASE("enumerate_paths counts") {
  CHECK(enumerate_paths(complete(3), 1).size() == 6);
  CHECK(enumerate_paths(petersen(), 0).size() == 10);
  // Walks may backtrack: C4 has 4 * 2 * 2 length-2 paths.
  CHECK(enumerate_paths(cycle(4), 2).size() == 16);
  for (const auto& g : {cycle(4), petersen(), prism(), star(3)}) {
    for (std::size_t a = 0; a <= 3; ++a) CHECK(enumerate_paths(g, a).size() == brute_walk_count(g, a));
  }
}

TEST_CASE("path space ordering and lookup") {
  const PathSpace s(prism(), 3);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto p = s.path(i);
    CHECK(is_path(prism(), p));
    CHECK(s.index_of(p) == i);
    if (i > 0) CHECK(s.path_value(i - 1) < s.path_value(i));
    CHECK(s.path_value(s.reverse_index(i)) == s.path_value(i).reversed());
  }
  const std::vector<Vertex> bad{0, 5};
  CHECK_FALSE(s.index_of(bad).has_value());
  CHECK_FALSE(is_path(prism(), bad));
}

TEST_CASE("path space capacity") {
  try {
    PathSpace(petersen(), 4, 100);
    FAIL("expected CapacityExceeded");
  } catch (const CapacityExceeded& e) {
    CHECK(e.found() == 101);
  }
}

TEST_CASE("bfs shortest path family") {
  const auto c4 = bfs_shortest_path_family(cycle(4), 0);
  REQUIRE(c4.size() == 3);
  std::set<Path> got(c4.begin(), c4.end());
  CHECK(got == std::set<Path>{{{0, 1}}, {{0, 3}}, {{0, 1, 2}}});
  const auto desc = bfs_shortest_path_family(cycle(4), 0, TieBreak::kDescending);
  CHECK(std::find(desc.begin(), desc.end(), Path{{0, 3, 2}}) != desc.end());
  const auto k3 = bfs_shortest_path_family(complete(3), 0);
  CHECK(std::set<Path>(k3.begin(), k3.end()) == std::set<Path>{{{0, 1}}, {{0, 2}}});
  const auto p3 = bfs_shortest_path_family(path_graph(3), 0);
  CHECK(std::set<Path>(p3.begin(), p3.end()) == std::set<Path>{{{0, 1}}, {{0, 1, 2}}});
}

TEST_CASE("shortest path family lengths equal BFS distances") {
  const Graph g = random_connected(15, 0.1, 7);
  const auto dist = bfs_distances(g, 3);
  for (const auto& p : bfs_shortest_path_family(g, 3)) {
    CHECK(p.vertices.front() == 3);
    CHECK(is_path(g, p.vertices));
    CHECK(p.length() == dist[p.vertices.back()]);
  }
}
