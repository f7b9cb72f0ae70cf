// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "qlap/bounds.hpp"
#include "qlap/cli.hpp"
#include "support/graphs.hpp"

using namespace qlap;
using namespace qlap::testing;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (!pass) detail << "; ";
    pass = false;
    detail << why;
  }
};

int failures = 0;

void report(int id, const std::string& title, Verdict& v) {
  std::cout << (v.pass ? "PASS" : "FAIL") << "  [" << id << "] " << title;
  const auto text = v.detail.str();
  if (!text.empty()) std::cout << " :: " << text;
  std::cout << std::endl;
  failures += !v.pass;
}

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string edge_list_text(const Graph& g) {
  std::string s = std::to_string(g.n()) + "\n";
  for (const auto& [i, j] : g.edges()) s += std::to_string(i) + " " + std::to_string(j) + "\n";
  return s;
}

// ---------------------------------------------------------------------------

void spectrum_oracles() {
  Verdict v;
  struct Case {
    std::string name;
    Graph g;
    double expected;
  };
  std::vector<Case> cases;
  for (std::size_t n : {4, 5, 6, 8}) {
    cases.push_back({"C" + std::to_string(n), cycle(n), 1.0 - std::cos(2 * std::numbers::pi / n)});
  }
  for (std::size_t n : {3, 4, 5}) {
    cases.push_back({"K" + std::to_string(n), complete(n), double(n) / double(n - 1)});
  }
  cases.push_back({"Petersen", petersen(), 2.0 / 3.0});

  double worst = 0.0, slowest = 0.0;
  for (const auto& c : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = load_graph(edge_list_text(c.g));
    const auto s = eigen_decompose(build_laplacian(g));
    const double ours = lambda1(s);
    std::ostringstream sink;
    cli::AnalysisConfig config;
    cli::cmd_report(config, g, sink);
    slowest = std::max(slowest, ms_since(t0));

    const auto n = static_cast<Eigen::Index>(g.n());
    Eigen::MatrixXd l(n, n);
    const auto lap = build_laplacian(g);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) l(i, j) = lap(i, j);
    const double oracle = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(l).eigenvalues()(1);

    const double err = std::max(std::abs(ours - c.expected), std::abs(oracle - c.expected));
    worst = std::max(worst, err);
    if (err >= 1e-8) v.fail(c.name + " lambda1 " + fmt(ours) + " vs " + fmt(c.expected));
  }
  if (slowest >= 1000.0) v.fail("slowest run " + fmt(slowest) + " ms");
  v.detail << (v.pass ? "" : "; ") << "max error " << fmt(worst) << ", slowest run " << fmt(slowest)
           << " ms";
  report(1, "spectrum oracles (tol 1e-8, < 1 s per run)", v);
}

void classical_bound() {
  Verdict v;
  double tightest = 1e9;
  for (const auto& [name, g] : vertex_transitive_suite()) {
    const double l1 = lambda1(eigen_decompose(build_laplacian(g)));
    const auto group = automorphism_group(g);
    const Rational ind = classical_index(g, group);
    const double D = static_cast<double>(diameter(g));
    const double bound = 1.0 / (D * D * (double(ind.numerator()) / double(ind.denominator())));
    tightest = std::min(tightest, l1 - bound);
    if (l1 < bound - 1e-8) v.fail(name + ": lambda1 " + fmt(l1) + " < " + fmt(bound));
  }
  v.detail << (v.pass ? "" : "; ") << "smallest lambda1 - bound " << fmt(tightest);
  report(2, "lambda1 >= 1/(D^2 ind) on vertex-transitive graphs", v);
}

void improved_bound() {
  Verdict v;
  std::size_t applicable = 0;
  for (const auto& [name, g] : vertex_transitive_suite()) {
    const auto s = eigen_decompose(build_laplacian(g));
    for (unsigned k = 1; k <= 2; ++k) {
      const auto r = evaluate_bounds(g, k, s);
      if (r.applicable != (r.diameter <= 2 * k + 1)) v.fail(name + ": applicability flag wrong");
      if (!r.applicable) continue;
      ++applicable;
      if (r.lambda1 < *r.improved_bound_certified - 1e-8) {
        v.fail(name + " k=" + std::to_string(k) + ": lambda1 below certified bound");
      }
      if (*r.improved_bound_certified < r.chung_bound - 1e-12) {
        v.fail(name + " k=" + std::to_string(k) + ": certified bound below classical");
      }
      if (!r.violations.empty()) v.fail(name + ": " + r.violations.front());
    }
  }
  const auto s8 = eigen_decompose(build_laplacian(cycle(8)));
  const bool k1 = evaluate_bounds(cycle(8), 1, s8).applicable;
  const bool k2 = evaluate_bounds(cycle(8), 2, s8).applicable;
  if (k1) v.fail("C8 applicable at k=1");
  if (!k2) v.fail("C8 not applicable at k=2");
  v.detail << (v.pass ? "" : "; ") << applicable << " applicable (graph, k) cases; C8 gating k=1 "
           << (k1 ? "on" : "off") << ", k=2 " << (k2 ? "on" : "off");
  report(3, "improved bound consistency and applicability gating", v);
}

std::vector<Permutation> brute_group(const Graph& g) {
  Permutation p(g.n());
  std::iota(p.begin(), p.end(), Vertex{0});
  std::vector<Permutation> out;
  do {
    bool ok = std::all_of(g.edges().begin(), g.edges().end(),
                          [&](const auto& e) { return g.adjacent(p[e.first], p[e.second]); });
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Plain vertex-by-vertex extension without any color refinement.
std::size_t naive_backtrack_order(const Graph& g) {
  const std::size_t n = g.n();
  Permutation image(n);
  std::vector<bool> used(n, false);
  std::size_t count = 0;
  std::function<void(std::size_t)> extend = [&](std::size_t v) {
    if (v == n) {
      ++count;
      return;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) {
        ok = g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)) == g.adjacent(image[u], w);
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      extend(v + 1);
      used[w] = false;
    }
  };
  extend(0);
  return count;
}

void group_oracles() {
  Verdict v;
  auto check = [&](const std::string& name, const Graph& g, std::size_t expected) {
    const auto group = automorphism_group(g);
    if (group.order() != expected) {
      v.fail(name + " order " + std::to_string(group.order()) + " != " + std::to_string(expected));
    }
    if (g.n() <= 8) {
      if (group.elements != brute_group(g)) v.fail(name + " differs from the S_n filter");
    } else if (naive_backtrack_order(g) != expected) {
      v.fail(name + " differs from naive backtracking");
    }
  };
  for (std::size_t n = 4; n <= 8; ++n) check("C" + std::to_string(n), cycle(n), 2 * n);
  std::size_t fact = 1;
  for (std::size_t n = 1; n <= 5; ++n) {
    fact *= n;
    if (n >= 2) check("K" + std::to_string(n), complete(n), fact);
  }
  check("Petersen", petersen(), 120);
  report(4, "automorphism group orders against independent oracles", v);
}

void bracket_soundness() {
  Verdict v;
  std::size_t checked = 0;
  for (const auto& [name, g] : full_suite()) {
    const auto group = automorphism_group(g);
    for (unsigned k = 1; k <= 2; ++k) {
      const std::string tag = name + " k=" + std::to_string(k);
      const ClosureFixedPoint fwd(g, k);
      ClosureOptions o;
      o.order = EliminationOrder::kReverse;
      const ClosureFixedPoint rev(g, k, o);
      for (std::size_t len = 0; len <= fwd.max_length(); ++len) {
        const auto& space = fwd.space(len);
        const auto lower = path_orbits(space, group);
        const auto& upper = fwd.partition(len);
        ++checked;
        if (!lower.refines(upper)) v.fail(tag + ": lower does not refine upper at length " + std::to_string(len));
        if (upper != rev.partition(len)) v.fail(tag + ": elimination orders disagree");
        for (std::size_t i = 0; i < space.size(); ++i) {
          for (std::size_t j = 0; j < space.size(); ++j) {
            const bool r = fwd.related(len, i, j);
            if (r != rev.related(len, i, j)) {
              v.fail(tag + ": pair relation depends on order");
              goto next_length;
            }
            if (lower.same_block(i, j) && !r) {
              v.fail(tag + ": classical pair killed");
              goto next_length;
            }
            if (!r) continue;
            if (!fwd.related(len, space.reverse_index(i), space.reverse_index(j))) {
              v.fail(tag + ": reversal incoherent");
              goto next_length;
            }
            if (len > 0) {
              const auto& down = fwd.space(len - 1);
              const auto pi = space.path(i), pj = space.path(j);
              if (!fwd.related(len - 1, *down.index_of(pi.first(len)), *down.index_of(pj.first(len))) ||
                  !fwd.related(len - 1, *down.index_of(pi.last(len)), *down.index_of(pj.last(len)))) {
                v.fail(tag + ": restriction incoherent");
                goto next_length;
              }
            }
          }
        }
      next_length:;
      }
    }
  }
  v.detail << (v.pass ? "" : "; ") << checked << " (graph, k, length) layers";
  report(5, "bracket soundness, coherence and order independence", v);
}

void count_constancy() {
  Verdict v;
  std::size_t runs = 0;
  for (const auto& [name, g] : vertex_transitive_suite()) {
    const auto group = automorphism_group(g);
    const auto D = diameter(g);
    for (unsigned k = 1; k <= 2; ++k) {
      if (D > 2 * k + 1) continue;
      const ClosureFixedPoint closure(g, k);
      std::vector<Partition> lower, upper;
      for (std::size_t len = 0; len <= D; ++len) {
        lower.push_back(path_orbits(closure.space(len), group));
        upper.push_back(closure.partition(len));
      }
      for (Vertex root : {Vertex{0}, static_cast<Vertex>(g.n() / 2)}) {
        for (const auto* side : {&lower, &upper}) {
          ++runs;
          const auto counts = count_Ne(g, *side, root);
          const auto c = verify_class_constancy(g, counts, (*side)[1]);
          if (!c.ok()) v.fail(name + " k=" + std::to_string(k) + ": " + c.violations.front());
        }
      }
    }
  }
  v.detail << (v.pass ? "" : "; ") << runs << " (graph, k, root, side) runs";
  report(6, "edge counts constant on edge classes", v);
}

void inequality_chain() {
  Verdict v;
  std::size_t violations = 0, runs = 0;
  double count_margin = 1e300, class_margin = 1e300, index_margin = 1e300;
  std::ostringstream log;
  for (const auto& [name, g] : vertex_transitive_suite()) {
    const auto s = eigen_decompose(build_laplacian(g));
    for (unsigned k = 1; k <= 2; ++k) {
      const auto r = evaluate_bounds(g, k, s);
      if (!r.applicable) continue;
      for (const auto* side : {&*r.lower, &*r.upper}) {
        ++runs;
        const auto& q = side->inequality;
        violations += q.violations;
        count_margin = std::min(count_margin, q.count_margin);
        class_margin = std::min(class_margin, q.class_margin);
        index_margin = std::min(index_margin, q.index_margin);
      }
      if (k == 1 || r.diameter > 3) {
        log << " " << name << "(k=" << k << "): " << fmt(r.lower->inequality.count_margin) << "/"
            << fmt(r.lower->inequality.class_margin) << "/" << fmt(r.lower->inequality.index_margin);
      }
    }
  }
  if (violations != 0) v.fail(std::to_string(violations) + " violated rows over " + std::to_string(runs) + " runs");
  v.detail << "; minimum margins count " << fmt(count_margin) << ", class " << fmt(class_margin)
           << ", index " << fmt(index_margin) << "; per graph count/class/index:" << log.str();
  report(7, "inequality chain N_e <= n^2 D/(2|E_i|) <= n^2 D/(2 min) <= n D ind_k / V", v);
}

void eigensolver_numerics() {
  Verdict v;
  double rec = 0, orth = 0, trace_ratio = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::size_t n = 10 + (seed * 7) % 41;
    const Graph g = random_connected(n, 0.1, seed);
    const auto l = build_laplacian(g);
    const auto s = eigen_decompose(l);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double x = 0.0, dot = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          x += s.eigenvectors[k][i] * s.eigenvalues[k] * s.eigenvectors[k][j];
          dot += s.eigenvectors[i][k] * s.eigenvectors[j][k];
        }
        rec = std::max(rec, std::abs(l(i, j) - x));
        orth = std::max(orth, std::abs(dot - (i == j ? 1.0 : 0.0)));
      }
    }
    const double sum = std::accumulate(s.eigenvalues.begin(), s.eigenvalues.end(), 0.0);
    const double defect = std::abs(sum - l.trace());
    trace_ratio = std::max(trace_ratio, defect / (double(n) * 1e-12));
    if (defect >= double(n) * 1e-12) v.fail("seed " + std::to_string(seed) + " trace defect " + fmt(defect));
  }
  if (rec >= 1e-10) v.fail("reconstruction " + fmt(rec));
  if (orth >= 1e-10) v.fail("orthonormality " + fmt(orth));
  v.detail << (v.pass ? "" : "; ") << "reconstruction " << fmt(rec) << ", orthonormality " << fmt(orth)
           << ", trace defect " << fmt(trace_ratio) << " x n*1e-12";
  report(8, "Jacobi numerics on 20 random connected graphs (n <= 50)", v);
}

std::string capture(const std::string& command) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  return out;
}

void determinism() {
  Verdict v;
  std::size_t bytes = 0;
  for (const char* file : {"petersen.txt", "prism.txt", "c8.txt"}) {
    for (const char* format : {"text", "json"}) {
      const std::string cmd = std::string(QLAP_BINARY) + " report " + QLAP_DATA_DIR + "/" + file +
                              " --k 2 --format " + format;
      const auto a = capture(cmd), b = capture(cmd);
      bytes += a.size();
      if (a.empty()) v.fail(std::string(file) + ": no output");
      if (a != b) v.fail(std::string(file) + " (" + format + "): outputs differ");
    }
  }
  v.detail << (v.pass ? "" : "; ") << bytes << " bytes compared";
  report(9, "qlap report is byte-identical across runs", v);
}

}  // namespace

int main() {
  const std::array<void (*)(), 9> criteria{spectrum_oracles, classical_bound,   improved_bound,
                                           group_oracles,    bracket_soundness, count_constancy,
                                           inequality_chain, eigensolver_numerics, determinism};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      Verdict v;
      v.fail(std::string("exception: ") + e.what());
      report(static_cast<int>(i + 1), "criterion aborted", v);
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
