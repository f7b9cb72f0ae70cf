#include "qlap/report_json.hpp"

#include <string>

#include "qlap/error.hpp"

namespace qlap {

using nlohmann::json;

namespace {

template <typename T>
json optional_to_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

json edge_to_json(const std::pair<Vertex, Vertex>& e) { return json::array({e.first, e.second}); }

std::pair<Vertex, Vertex> edge_from_json(const json& j) {
  return {j.at(0).get<Vertex>(), j.at(1).get<Vertex>()};
}

}  // namespace

json rational_to_json(const Rational& r) {
  return json{{"num", r.numerator()},
              {"den", r.denominator()},
              {"value", static_cast<double>(r.numerator()) / static_cast<double>(r.denominator())}};
}

Rational rational_from_json(const json& j) {
  return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

void to_json(json& j, const Path& p) { j = p.vertices; }
void from_json(const json& j, Path& p) { p.vertices = j.get<std::vector<Vertex>>(); }

void to_json(json& j, const SpectralResult& s) {
  j = json{{"eigenvalues", s.eigenvalues},   {"eigenvectors", s.eigenvectors},
           {"residual", s.residual},         {"off_diagonal", s.off_diagonal},
           {"sweeps", s.sweeps},             {"tol", s.tol}};
}

void from_json(const json& j, SpectralResult& s) {
  j.at("eigenvalues").get_to(s.eigenvalues);
  j.at("eigenvectors").get_to(s.eigenvectors);
  j.at("residual").get_to(s.residual);
  j.at("off_diagonal").get_to(s.off_diagonal);
  j.at("sweeps").get_to(s.sweeps);
  j.at("tol").get_to(s.tol);
}

void to_json(json& j, const Partition& p) {
  j = json{{"ground", to_string(p.ground())},
           {"alpha", p.alpha()},
           {"size", p.size()},
           {"blocks", p.blocks()}};
}

void from_json(const json& j, Partition& p) {
  const auto size = j.at("size").get<std::size_t>();
  const auto blocks = j.at("blocks").get<std::vector<std::vector<std::size_t>>>();
  std::vector<std::size_t> labels(size, kNoIndex);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (auto e : blocks[b]) {
      if (e >= size || labels[e] != kNoIndex) throw ParseError("malformed partition blocks");
      labels[e] = b;
    }
  }
  for (auto l : labels) {
    if (l == kNoIndex) throw ParseError("partition blocks do not cover the ground set");
  }
  p = Partition(j.at("alpha").get<std::size_t>(), std::move(labels));
}

void to_json(json& j, const PartitionBracket& b) {
  j = json{{"k", b.k},         {"alpha", b.alpha}, {"lower", b.lower},
           {"upper", b.upper}, {"exact", b.exact}};
}

void from_json(const json& j, PartitionBracket& b) {
  j.at("k").get_to(b.k);
  j.at("alpha").get_to(b.alpha);
  j.at("lower").get_to(b.lower);
  j.at("upper").get_to(b.upper);
  j.at("exact").get_to(b.exact);
}

void to_json(json& j, const RationalInterval& r) {
  j = json{{"lo", rational_to_json(r.lo)}, {"hi", rational_to_json(r.hi)}};
}

void from_json(const json& j, RationalInterval& r) {
  r.lo = rational_from_json(j.at("lo"));
  r.hi = rational_from_json(j.at("hi"));
}

void to_json(json& j, const EdgePathCount& c) {
  j = json{{"edge", edge_to_json(c.edge)}, {"count", c.count}};
}

void from_json(const json& j, EdgePathCount& c) {
  c.edge = edge_from_json(j.at("edge"));
  j.at("count").get_to(c.count);
}

void to_json(json& j, const EdgeCounts& c) {
  j = json{{"per_edge", c.per_edge},
           {"collected_paths", c.collected_paths},
           {"total_length", c.total_length}};
}

void from_json(const json& j, EdgeCounts& c) {
  j.at("per_edge").get_to(c.per_edge);
  j.at("collected_paths").get_to(c.collected_paths);
  j.at("total_length").get_to(c.total_length);
}

void to_json(json& j, const ConstancyReport& c) { j = json{{"violations", c.violations}}; }
void from_json(const json& j, ConstancyReport& c) { j.at("violations").get_to(c.violations); }

void to_json(json& j, const InequalityRow& r) {
  j = json{{"edge", edge_to_json(r.edge)},
           {"count", r.count},
           {"class_size", r.class_size},
           {"per_class", r.per_class},
           {"per_min_class", r.per_min_class},
           {"index_form", r.index_form},
           {"count_holds", r.count_holds},
           {"class_holds", r.class_holds},
           {"index_holds", r.index_holds}};
}

void from_json(const json& j, InequalityRow& r) {
  r.edge = edge_from_json(j.at("edge"));
  j.at("count").get_to(r.count);
  j.at("class_size").get_to(r.class_size);
  j.at("per_class").get_to(r.per_class);
  j.at("per_min_class").get_to(r.per_min_class);
  j.at("index_form").get_to(r.index_form);
  j.at("count_holds").get_to(r.count_holds);
  j.at("class_holds").get_to(r.class_holds);
  j.at("index_holds").get_to(r.index_holds);
}

void to_json(json& j, const InequalityReport& r) {
  j = json{{"rows", r.rows},
           {"count_margin", r.count_margin},
           {"class_margin", r.class_margin},
           {"index_margin", r.index_margin},
           {"violations", r.violations}};
}

void from_json(const json& j, InequalityReport& r) {
  j.at("rows").get_to(r.rows);
  j.at("count_margin").get_to(r.count_margin);
  j.at("class_margin").get_to(r.class_margin);
  j.at("index_margin").get_to(r.index_margin);
  j.at("violations").get_to(r.violations);
}

void to_json(json& j, const SideAnalysis& s) {
  j = json{{"counts", s.counts}, {"constancy", s.constancy}, {"inequality", s.inequality}};
}

void from_json(const json& j, SideAnalysis& s) {
  j.at("counts").get_to(s.counts);
  j.at("constancy").get_to(s.constancy);
  j.at("inequality").get_to(s.inequality);
}

void to_json(json& j, const IndexEntry& e) { j = json{{"k", e.k}, {"interval", e.interval}}; }

void from_json(const json& j, IndexEntry& e) {
  j.at("k").get_to(e.k);
  j.at("interval").get_to(e.interval);
}

void to_json(json& j, const BoundReport& r) {
  j = json{{"n", r.n},
           {"diameter", r.diameter},
           {"volume", r.volume},
           {"regular_degree", optional_to_json(r.regular_degree)},
           {"k", r.k},
           {"convention", to_string(r.convention)},
           {"root", r.root},
           {"lambda1", r.lambda1},
           {"ind_classical", rational_to_json(r.ind_classical)},
           {"ind_k", r.ind_k},
           {"chung_bound", r.chung_bound},
           {"applicable", r.applicable},
           {"improved_bound_certified", optional_to_json(r.improved_bound_certified)},
           {"improved_bound_candidate", optional_to_json(r.improved_bound_candidate)},
           {"exact", r.exact},
           {"lower", optional_to_json(r.lower)},
           {"upper", optional_to_json(r.upper)},
           {"violations", r.violations}};
}

void from_json(const json& j, BoundReport& r) {
  j.at("n").get_to(r.n);
  j.at("diameter").get_to(r.diameter);
  j.at("volume").get_to(r.volume);
  r.regular_degree = optional_from_json<std::size_t>(j.at("regular_degree"));
  j.at("k").get_to(r.k);
  r.convention = edge_convention_from_string(j.at("convention").get<std::string>());
  j.at("root").get_to(r.root);
  j.at("lambda1").get_to(r.lambda1);
  r.ind_classical = rational_from_json(j.at("ind_classical"));
  j.at("ind_k").get_to(r.ind_k);
  j.at("chung_bound").get_to(r.chung_bound);
  j.at("applicable").get_to(r.applicable);
  r.improved_bound_certified = optional_from_json<double>(j.at("improved_bound_certified"));
  r.improved_bound_candidate = optional_from_json<double>(j.at("improved_bound_candidate"));
  j.at("exact").get_to(r.exact);
  r.lower = optional_from_json<SideAnalysis>(j.at("lower"));
  r.upper = optional_from_json<SideAnalysis>(j.at("upper"));
  j.at("violations").get_to(r.violations);
}

}  // namespace qlap
