#include "qlap/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlap/error.hpp"
#include "qlap/quantum_equiv.hpp"
#include "qlap/report_json.hpp"

namespace qlap::cli {

using nlohmann::json;

namespace {

std::string num(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string path_text(std::span<const Vertex> p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

SearchLimits limits_of(const AnalysisConfig& c) { return {c.search_budget, c.group_limit}; }

ClosureOptions closure_of(const AnalysisConfig& c) {
  ClosureOptions o;
  o.path_cap = c.path_cap;
  return o;
}

json meta(const AnalysisConfig& c, const std::string& command) {
  json config{{"input", c.input},
              {"k", c.k},
              {"alpha", c.alpha},
              {"tol", c.tol},
              {"path_cap", c.path_cap},
              {"search_budget", c.search_budget},
              {"group_limit", c.group_limit},
              {"convention", to_string(c.convention)},
              {"root", c.root ? json(*c.root) : json(nullptr)}};
  return json{{"tool", "qlap"}, {"version", kToolVersion}, {"command", command},
              {"config", std::move(config)}};
}

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

SpectralResult spectrum_of(const AnalysisConfig& c, const Graph& g) {
  if (!is_connected(g)) throw DisconnectedError("graph is disconnected");
  return eigen_decompose(build_laplacian(g), c.tol);
}

// ---- spectrum ------------------------------------------------------------

json spectrum_json(const SpectralResult& s) {
  json j = s;
  j["lambda1"] = lambda1(s);
  j["lambda1_suspect"] = lambda1_suspect(s);
  return j;
}

void spectrum_text(const SpectralResult& s, std::ostream& out) {
  out << "eigenvalues:\n";
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    out << "  " << std::setw(4) << i << "  " << num(s.eigenvalues[i]) << "\n";
  }
  out << "lambda1 = " << num(lambda1(s)) << "\n";
  out << "residual = " << num(s.residual) << "\n";
  out << "sweeps = " << s.sweeps << "\n";
  if (lambda1_suspect(s)) out << "warning: lambda1 is within 10*tol of zero\n";
}

// ---- orbits --------------------------------------------------------------

struct OrbitSummary {
  PermutationGroup group;
  Partition vertices;
  Partition arcs;
  std::vector<std::vector<std::size_t>> edge_classes;
  std::optional<Rational> index;
};

OrbitSummary orbits_of(const AnalysisConfig& c, const Graph& g) {
  OrbitSummary s;
  s.group = automorphism_group(g, limits_of(c));
  s.vertices = vertex_orbits(s.group);
  s.arcs = edge_orbits(g, s.group);
  s.edge_classes = unordered_edge_classes(g, s.arcs);
  if (is_connected(g) && !g.edges().empty()) s.index = classical_index(g, s.group);
  return s;
}

json orbits_json(const Graph& g, const OrbitSummary& s) {
  json j{{"aut_order", s.group.order()},
         {"generators", s.group.generators},
         {"vertex_transitive", s.vertices.block_count() == 1},
         {"vertex_orbits", s.vertices},
         {"arc_orbits", s.arcs},
         {"edge_classes", s.edge_classes.size()},
         {"arc_classes", s.arcs.block_count()}};
  json classes = json::array();
  for (const auto& cls : s.edge_classes) {
    json edges = json::array();
    for (auto e : cls) edges.push_back(json::array({g.edges()[e].first, g.edges()[e].second}));
    classes.push_back(std::move(edges));
  }
  j["unordered_edge_classes"] = std::move(classes);
  j["classical_index"] = s.index ? rational_to_json(*s.index) : json(nullptr);
  return j;
}

void orbits_text(const Graph& g, const OrbitSummary& s, std::ostream& out) {
  const PathSpace arcs(g, 1);
  out << "aut_order: " << s.group.order() << "\n";
  out << "generators: " << s.group.generators.size() << "\n";
  out << "vertex_transitive: " << yes_no(s.vertices.block_count() == 1) << "\n";
  out << "vertex_orbits: " << s.vertices.block_count() << "\n";
  out << "edge_classes: " << s.edge_classes.size() << "\n";
  out << "arc_classes: " << s.arcs.block_count() << "\n";
  out << "classical_index: " << (s.index ? rational_text(*s.index) : "n/a") << "\n";
  out << "vertex orbit blocks:\n";
  for (const auto& b : s.vertices.blocks()) {
    out << "  {";
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
    out << "}\n";
  }
  out << "arc orbit blocks:\n";
  for (const auto& b : s.arcs.blocks()) {
    out << "  {";
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << path_text(arcs.path(b[i]));
    out << "}\n";
  }
}

// ---- equiv ---------------------------------------------------------------

struct EquivSummary {
  PartitionBracket bracket;
  std::vector<CompatibilityWitness> witnesses;
  std::size_t sweeps = 0;
};

EquivSummary equiv_of(const AnalysisConfig& c, const Graph& g, std::size_t alpha) {
  const auto group = automorphism_group(g, limits_of(c));
  if (alpha > 2 * static_cast<std::size_t>(c.k) + 1) {
    throw Error("alpha must not exceed 2k+1");
  }
  const ClosureFixedPoint closure(g, c.k, closure_of(c));
  EquivSummary s;
  s.sweeps = closure.sweeps();
  s.bracket.k = c.k;
  s.bracket.alpha = alpha;
  s.bracket.lower = path_orbits(closure.space(alpha), group);
  s.bracket.upper = closure.partition(alpha);
  s.bracket.exact = s.bracket.lower == s.bracket.upper;

  // One witness per pair of upper classes, taken at the class representatives.
  const auto& blocks = s.bracket.upper.blocks();
  for (std::size_t a = 0; a < blocks.size() && s.witnesses.size() < c.witnesses; ++a) {
    for (std::size_t b = a + 1; b < blocks.size() && s.witnesses.size() < c.witnesses; ++b) {
      s.witnesses.push_back(
          explain_pair(closure, s.bracket.lower, alpha, blocks[a].front(), blocks[b].front()));
    }
  }
  return s;
}

json equiv_json(const EquivSummary& s) {
  json witnesses = json::array();
  for (const auto& w : s.witnesses) {
    witnesses.push_back(json{{"p", w.p},
                             {"q", w.q},
                             {"status", to_string(w.status)},
                             {"rule", to_string(w.rule)},
                             {"same_upper_block", w.same_upper_block}});
  }
  json j = s.bracket;
  j["classes"] = s.bracket.upper.block_count();
  j["lower_classes"] = s.bracket.lower.block_count();
  j["sweeps"] = s.sweeps;
  j["witnesses"] = std::move(witnesses);
  return j;
}

void blocks_text(const PathSpace& space, const Partition& p, std::ostream& out) {
  for (const auto& b : p.blocks()) {
    out << "  {";
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << path_text(space.path(b[i]));
    out << "}\n";
  }
}

void equiv_text(const Graph& g, const AnalysisConfig& c, const EquivSummary& s,
                std::ostream& out) {
  const PathSpace space(g, s.bracket.alpha, c.path_cap);
  out << "k: " << s.bracket.k << "\n";
  out << "alpha: " << s.bracket.alpha << "\n";
  out << "ground: " << to_string(s.bracket.upper.ground()) << " (" << space.size() << ")\n";
  out << "exact: " << yes_no(s.bracket.exact) << ", classes: " << s.bracket.upper.block_count()
      << "\n";
  out << "lower_classes: " << s.bracket.lower.block_count() << "\n";
  out << "upper blocks:\n";
  blocks_text(space, s.bracket.upper, out);
  if (!s.bracket.exact) {
    out << "lower blocks:\n";
    blocks_text(space, s.bracket.lower, out);
  }
  out << "witnesses:\n";
  if (s.witnesses.empty()) out << "  none\n";
  for (const auto& w : s.witnesses) {
    out << "  " << path_text(w.p.vertices) << " vs " << path_text(w.q.vertices) << ": "
        << to_string(w.status);
    if (w.status == WitnessStatus::kClosureKilled) out << " by " << to_string(w.rule);
    out << "\n";
  }
}

// ---- bounds --------------------------------------------------------------

BoundReport bounds_of(const AnalysisConfig& c, const Graph& g, const SpectralResult& s) {
  BoundsOptions o;
  o.convention = c.convention;
  o.root = c.root.value_or(0);
  if (o.root >= g.n()) throw RangeError("root " + std::to_string(o.root) + " out of range");
  o.closure = closure_of(c);
  o.limits = limits_of(c);
  return evaluate_bounds(g, c.k, s, o);
}

void side_text(const std::string& name, const SideAnalysis& side, std::ostream& out) {
  const auto& q = side.inequality;
  out << "edge_counts[" << name << "]:";
  for (const auto& e : side.counts.per_edge) {
    out << " " << e.edge.first << "-" << e.edge.second << ":" << e.count;
  }
  out << "\n";
  out << "class_constant[" << name << "]: " << yes_no(side.constancy.ok()) << "\n";
  out << "inequality_chain[" << name << "]: violations " << q.violations << ", margins count "
      << num(q.count_margin) << ", class " << num(q.class_margin) << ", index "
      << num(q.index_margin) << "\n";
}

void bounds_text(const BoundReport& r, std::ostream& out) {
  out << "n: " << r.n << "\n";
  out << "diameter: " << r.diameter << "\n";
  out << "volume: " << r.volume << "\n";
  out << "k: " << r.k << "\n";
  out << "convention: " << to_string(r.convention) << "\n";
  out << "lambda1: " << num(r.lambda1) << "\n";
  out << "ind: " << rational_text(r.ind_classical) << "\n";
  for (const auto& e : r.ind_k) {
    out << "ind_k[" << e.k << "]: [" << rational_text(e.interval.lo) << ", "
        << rational_text(e.interval.hi) << "]\n";
  }
  out << "chung: " << num(r.chung_bound) << "\n";
  out << "applicable: " << yes_no(r.applicable) << "\n";
  if (r.applicable) {
    out << "improved_certified: " << num(*r.improved_bound_certified) << "\n";
    out << "improved_candidate: " << num(*r.improved_bound_candidate) << "\n";
  } else {
    out << "improved_certified: inapplicable (D > 2k+1)\n";
    out << "improved_candidate: inapplicable (D > 2k+1)\n";
  }
  out << "exact: " << yes_no(r.exact) << "\n";
  if (r.lower) side_text("orbit", *r.lower, out);
  if (r.upper) side_text("closure", *r.upper, out);
  out << "violations:";
  if (r.violations.empty()) out << " none";
  out << "\n";
  for (const auto& v : r.violations) out << "  " << v << "\n";
}

}  // namespace

void cmd_spectrum(const AnalysisConfig& c, const Graph& g, std::ostream& out) {
  const auto s = spectrum_of(c, g);
  if (c.format == OutputFormat::kJson) {
    emit_json(out, json{{"meta", meta(c, "spectrum")}, {"spectrum", spectrum_json(s)}});
  } else {
    spectrum_text(s, out);
  }
}

void cmd_orbits(const AnalysisConfig& c, const Graph& g, std::ostream& out) {
  const auto s = orbits_of(c, g);
  if (c.format == OutputFormat::kJson) {
    emit_json(out, json{{"meta", meta(c, "orbits")}, {"orbits", orbits_json(g, s)}});
  } else {
    orbits_text(g, s, out);
  }
}

void cmd_equiv(const AnalysisConfig& c, const Graph& g, std::ostream& out) {
  const auto s = equiv_of(c, g, c.alpha);
  if (c.format == OutputFormat::kJson) {
    emit_json(out, json{{"meta", meta(c, "equiv")}, {"equiv", equiv_json(s)}});
  } else {
    equiv_text(g, c, s, out);
  }
}

void cmd_bounds(const AnalysisConfig& c, const Graph& g, std::ostream& out) {
  const auto r = bounds_of(c, g, spectrum_of(c, g));
  if (c.format == OutputFormat::kJson) {
    emit_json(out, json{{"meta", meta(c, "bounds")}, {"bounds", r}});
  } else {
    bounds_text(r, out);
  }
}

void cmd_report(const AnalysisConfig& c, const Graph& g, std::ostream& out) {
  const auto spectrum = spectrum_of(c, g);
  const auto orbits = orbits_of(c, g);
  const auto equiv = equiv_of(c, g, 1);
  std::optional<BoundReport> bounds;
  if (orbits.vertices.block_count() == 1) bounds = bounds_of(c, g, spectrum);

  if (c.format == OutputFormat::kJson) {
    json doc{{"meta", meta(c, "report")},
             {"spectrum", spectrum_json(spectrum)},
             {"orbits", orbits_json(g, orbits)},
             {"equiv", equiv_json(equiv)},
             {"bounds", bounds ? json(*bounds) : json(nullptr)}};
    emit_json(out, doc);
    return;
  }
  out << "qlap " << kToolVersion << " report: " << c.input << "\n";
  out << "\n[spectrum]\n";
  spectrum_text(spectrum, out);
  out << "\n[orbits]\n";
  orbits_text(g, orbits, out);
  out << "\n[equiv]\n";
  equiv_text(g, c, equiv, out);
  out << "\n[bounds]\n";
  if (bounds) {
    bounds_text(*bounds, out);
  } else {
    out << "skipped: graph is not vertex-transitive\n";
  }
}

int exit_code_for(const std::exception& error) {
  if (dynamic_cast<const DisconnectedError*>(&error) ||
      dynamic_cast<const IsolatedVertexError*>(&error)) {
    return kExitDisconnected;
  }
  if (dynamic_cast<const ConvergenceError*>(&error) ||
      dynamic_cast<const BudgetExceeded*>(&error) ||
      dynamic_cast<const LimitExceeded*>(&error) ||
      dynamic_cast<const CapacityExceeded*>(&error)) {
    return kExitComputation;
  }
  if (dynamic_cast<const NotVertexTransitive*>(&error)) return kExitNotTransitive;
  return kExitInput;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normalized Laplacian spectra, automorphism orbits and spectral-gap bounds",
               "qlap"};
  AnalysisConfig config;
  std::string command;
  std::string format = "text";
  std::string convention = "directed";
  std::string input_format = "auto";
  std::optional<Vertex> root;

  app.add_option("command", command, "spectrum | orbits | equiv | bounds | report")
      ->required()
      ->check(CLI::IsMember({"spectrum", "orbits", "equiv", "bounds", "report"}));
  app.add_option("input", config.input, "graph file (edge list or adjacency matrix)")
      ->required();
  app.add_option("--k", config.k, "subgroup index k >= 1")->check(CLI::PositiveNumber);
  app.add_option("--alpha", config.alpha, "path length for equiv");
  app.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tol", config.tol, "eigensolver tolerance")->check(CLI::PositiveNumber);
  app.add_option("--root", root, "root vertex of the shortest-path family");
  app.add_option("--convention", convention, "directed | unordered")
      ->check(CLI::IsMember({"directed", "unordered"}));
  app.add_option("--path-cap", config.path_cap, "maximum paths per length")
      ->check(CLI::PositiveNumber);
  app.add_option("--group-limit", config.group_limit, "maximum automorphism group order")
      ->check(CLI::PositiveNumber);
  app.add_option("--witnesses", config.witnesses, "witness pairs printed by equiv");
  app.add_option("--input-format", input_format, "auto | edges | matrix")
      ->check(CLI::IsMember({"auto", "edges", "matrix"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  config.format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;
  config.convention = edge_convention_from_string(convention);
  config.root = root;
  config.input_format = input_format == "edges"    ? InputFormat::kEdgeList
                        : input_format == "matrix" ? InputFormat::kMatrix
                                                   : InputFormat::kAuto;
  if (const char* budget = std::getenv("QLAP_BUDGET")) {
    try {
      config.search_budget = std::stoull(budget);
    } catch (const std::exception&) {
      err << "qlap: ignoring malformed QLAP_BUDGET='" << budget << "'\n";
    }
  }

  try {
    const Graph g = load_graph_file(config.input, config.input_format);
    std::ostringstream buffer;
    if (command == "spectrum") {
      cmd_spectrum(config, g, buffer);
    } else if (command == "orbits") {
      cmd_orbits(config, g, buffer);
    } else if (command == "equiv") {
      cmd_equiv(config, g, buffer);
    } else if (command == "bounds") {
      cmd_bounds(config, g, buffer);
    } else {
      cmd_report(config, g, buffer);
    }
    out << buffer.str();
    return kExitOk;
  } catch (const std::exception& e) {
    err << "qlap: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace qlap::cli
