#include "qlap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "qlap/error.hpp"

namespace qlap {

std::string to_string(EdgeConvention convention) {
  return convention == EdgeConvention::kDirected ? "directed" : "unordered";
}

EdgeConvention edge_convention_from_string(const std::string& name) {
  if (name == "directed") return EdgeConvention::kDirected;
  if (name == "unordered") return EdgeConvention::kUnordered;
  throw Error("unknown edge convention '" + name + "'");
}

namespace {

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::size_t smallest_unordered_class(const Graph& g, const Partition& edges) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& cls : unordered_edge_classes(g, edges)) best = std::min(best, cls.size());
  return best;
}

}  // namespace

Rational index_from_edge_partition(const Graph& g, const Partition& edges,
                                   EdgeConvention convention) {
  if (edges.alpha() != 1) throw Error("edge partition must be over directed edges");
  if (g.edges().empty()) throw Error("graph has no edges");
  const auto vol = static_cast<std::int64_t>(volume(g));
  if (convention == EdgeConvention::kDirected) {
    return Rational(vol, static_cast<std::int64_t>(edges.min_block_size()));
  }
  return Rational(vol, static_cast<std::int64_t>(2 * smallest_unordered_class(g, edges)));
}

RationalInterval ind_k_interval(const Graph& g, const PartitionBracket& edges,
                                EdgeConvention convention) {
  return {index_from_edge_partition(g, edges.upper, convention),
          index_from_edge_partition(g, edges.lower, convention)};
}

RationalInterval ind_k_interval(const Graph& g, unsigned k, EdgeConvention convention,
                                const ClosureOptions& options, const SearchLimits& limits) {
  return ind_k_interval(g, bracket(g, k, 1, options, limits), convention);
}

EdgeCounts count_Ne(const Graph& g, std::span<const Partition> relation, Vertex root,
                    TieBreak order) {
  if (!is_vertex_transitive(g)) throw NotVertexTransitive("graph is not vertex-transitive");
  const auto family = bfs_shortest_path_family(g, root, order);
  std::size_t longest = 0;
  for (const auto& p : family) longest = std::max(longest, p.length());
  if (relation.size() <= longest) {
    throw MissingRelationLength("relation missing for path length " + std::to_string(longest));
  }

  EdgeCounts out;
  for (const auto& e : g.edges()) out.per_edge.push_back({e, 0});

  for (std::size_t len = 1; len <= longest; ++len) {
    const PathSpace space(g, len, relation[len].size());
    if (space.size() != relation[len].size() || relation[len].alpha() != len) {
      throw Error("relation at length " + std::to_string(len) + " does not match the graph");
    }
    std::set<std::size_t> targets;
    for (const auto& p : family) {
      if (p.length() == len) targets.insert(relation[len].block_of(*space.index_of(p.vertices)));
    }
    if (targets.empty()) continue;
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (!targets.contains(relation[len].block_of(i))) continue;
      const auto p = space.path(i);
      ++out.collected_paths;
      out.total_length += len;
      for (std::size_t s = 0; s < len; ++s) ++out.per_edge[g.edge_index(p[s], p[s + 1])].count;
    }
  }
  return out;
}

ConstancyReport verify_class_constancy(const Graph& g, const EdgeCounts& counts,
                                       const Partition& edge_classes) {
  ConstancyReport report;
  const PathSpace arcs(g, 1);
  if (edge_classes.alpha() != 1 || edge_classes.size() != arcs.size()) {
    throw Error("verify_class_constancy: partition is not over the directed edges");
  }
  for (std::size_t b = 0; b < edge_classes.block_count(); ++b) {
    const auto& block = edge_classes.blocks()[b];
    auto count_of = [&](std::size_t arc) {
      const auto p = arcs.path(arc);
      return counts.per_edge[g.edge_index(p[0], p[1])].count;
    };
    const auto expected = count_of(block.front());
    for (std::size_t arc : block) {
      if (count_of(arc) != expected) {
        const auto p = arcs.path(arc);
        const auto q = arcs.path(block.front());
        report.violations.push_back(
            "class " + std::to_string(b) + ": edge (" + std::to_string(p[0]) + "," +
            std::to_string(p[1]) + ") has count " + std::to_string(count_of(arc)) +
            " but (" + std::to_string(q[0]) + "," + std::to_string(q[1]) + ") has " +
            std::to_string(expected));
      }
    }
  }
  return report;
}

InequalityReport verify_inequality_chain(const Graph& g, const EdgeCounts& counts,
                                         const Partition& edge_classes, std::size_t diameter,
                                         const Rational& ind_k) {
  constexpr double kSlack = 1e-9;
  const auto classes = unordered_edge_classes(g, edge_classes);
  std::vector<std::size_t> class_size(g.edges().size());
  std::size_t smallest = std::numeric_limits<std::size_t>::max();
  for (const auto& cls : classes) {
    smallest = std::min(smallest, cls.size());
    for (std::size_t e : cls) class_size[e] = cls.size();
  }

  const double n = static_cast<double>(g.n());
  const double D = static_cast<double>(diameter);
  const double vol = static_cast<double>(volume(g));
  const double per_min_class = n * n * D / (2.0 * static_cast<double>(smallest));
  const double index_form = n * D * to_double(ind_k) / vol;

  InequalityReport report;
  report.count_margin = report.class_margin = report.index_margin =
      std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    InequalityRow row;
    row.edge = g.edges()[e];
    row.count = counts.per_edge[e].count;
    row.class_size = class_size[e];
    row.per_class = n * n * D / (2.0 * static_cast<double>(class_size[e]));
    row.per_min_class = per_min_class;
    row.index_form = index_form;
    row.count_holds = static_cast<double>(row.count) <= row.per_class + kSlack;
    row.class_holds = row.per_class <= row.per_min_class + kSlack;
    row.index_holds = row.per_min_class <= row.index_form + kSlack;
    report.count_margin =
        std::min(report.count_margin, row.per_class - static_cast<double>(row.count));
    report.class_margin = std::min(report.class_margin, row.per_min_class - row.per_class);
    report.index_margin = std::min(report.index_margin, row.index_form - row.per_min_class);
    report.violations += !row.count_holds + !row.class_holds + !row.index_holds;
    report.rows.push_back(row);
  }
  return report;
}

BoundReport evaluate_bounds(const Graph& g, unsigned k, const SpectralResult& spectral,
                            const BoundsOptions& options) {
  if (k == 0) throw Error("evaluate_bounds: k must be at least 1");
  if (g.n() < 2 || !is_connected(g)) throw DisconnectedError("graph is not connected");
  const auto group = automorphism_group(g, options.limits);
  if (vertex_orbits(group).block_count() != 1) {
    throw NotVertexTransitive("graph is not vertex-transitive");
  }

  BoundReport r;
  r.n = g.n();
  r.diameter = diameter(g);
  r.volume = volume(g);
  r.regular_degree = regular_degree(g);
  r.k = k;
  r.convention = options.convention;
  r.root = options.root;
  r.lambda1 = lambda1(spectral);
  r.ind_classical = classical_index(g, group);
  const double D2 = static_cast<double>(r.diameter * r.diameter);
  r.chung_bound = 1.0 / (D2 * to_double(r.ind_classical));
  r.applicable = r.diameter <= 2 * static_cast<std::size_t>(k) + 1;

  const double tol = options.check_tol;
  if (r.lambda1 < r.chung_bound - tol) {
    r.violations.push_back("lambda1 below the classical bound");
  }

  const Partition lower_edges = path_orbits(g, group, 1, options.closure.path_cap);
  std::optional<ClosureFixedPoint> closure;
  Partition previous_upper;
  for (unsigned kk = 1; kk <= k; ++kk) {
    ClosureOptions opts = options.closure;
    if (kk == k && r.applicable) opts.max_length = std::max<std::size_t>(opts.max_length, r.diameter);
    ClosureFixedPoint fixed(g, kk, opts);
    const Partition& upper_edges = fixed.partition(1);
    PartitionBracket edges{kk, 1, lower_edges, upper_edges, lower_edges == upper_edges};
    r.ind_k.push_back({kk, ind_k_interval(g, edges, options.convention)});

    if (!lower_edges.refines(upper_edges)) {
      r.violations.push_back("k=" + std::to_string(kk) + ": orbits do not refine closure classes");
    }
    if (kk > 1) {
      if (!upper_edges.refines(previous_upper)) {
        r.violations.push_back("k=" + std::to_string(kk) + ": closure classes coarser than at k-1");
      }
      if (r.ind_k[kk - 1].interval.lo < r.ind_k[kk - 2].interval.lo) {
        r.violations.push_back("k=" + std::to_string(kk) + ": ind_k decreased with k");
      }
    }
    if (r.ind_k.back().interval.lo > r.ind_classical) {
      r.violations.push_back("k=" + std::to_string(kk) + ": ind_k exceeds ind");
    }
    previous_upper = upper_edges;
    if (kk == k) {
      r.exact = edges.exact;
      closure.emplace(std::move(fixed));
    }
  }

  if (!r.applicable) return r;

  const auto& interval = r.ind_k.back().interval;
  r.improved_bound_certified = 1.0 / (D2 * to_double(interval.hi));
  r.improved_bound_candidate = 1.0 / (D2 * to_double(interval.lo));
  if (r.lambda1 < *r.improved_bound_certified - tol) {
    r.violations.push_back("lambda1 below the certified improved bound");
  }
  if (*r.improved_bound_certified < r.chung_bound - tol) {
    r.violations.push_back("certified improved bound below the classical bound");
  }
  if (*r.improved_bound_candidate < *r.improved_bound_certified - tol) {
    r.violations.push_back("candidate improved bound below the certified one");
  }

  std::vector<Partition> lower_rel;
  std::vector<Partition> upper_rel;
  for (std::size_t len = 0; len <= r.diameter; ++len) {
    lower_rel.push_back(path_orbits(closure->space(len), group));
    upper_rel.push_back(closure->partition(len));
  }

  auto analyse = [&](const std::vector<Partition>& rel, const Rational& ind_k,
                     const std::string& side) {
    SideAnalysis a;
    a.counts = count_Ne(g, rel, options.root, options.tie_break);
    a.constancy = verify_class_constancy(g, a.counts, rel[1]);
    for (const auto& v : a.constancy.violations) {
      r.violations.push_back(side + " edge counts not class-constant: " + v);
    }
    a.inequality = verify_inequality_chain(g, a.counts, rel[1], r.diameter, ind_k);
    return a;
  };
  r.lower = analyse(lower_rel, interval.hi, "orbit");
  r.upper = analyse(upper_rel, interval.lo, "closure");

  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    if (r.lower->counts.per_edge[e].count > r.upper->counts.per_edge[e].count) {
      r.violations.push_back("edge " + std::to_string(e) +
                             ": orbit-side count exceeds closure-side count");
    }
  }
  return r;
}

}  // namespace qlap
