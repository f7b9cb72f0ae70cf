#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "qlap/automorphism.hpp"
#include "qlap/bounds.hpp"
#include "qlap/graph.hpp"
#include "qlap/spectral.hpp"

namespace qlap::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum class OutputFormat { kText, kJson };

struct AnalysisConfig {
  std::string input;
  unsigned k = 1;
  std::size_t alpha = 1;
  OutputFormat format = OutputFormat::kText;
  double tol = kDefaultTolerance;
  std::size_t path_cap = kDefaultPathCap;
  std::uint64_t search_budget = kDefaultSearchBudget;
  std::size_t group_limit = kDefaultGroupLimit;
  EdgeConvention convention = EdgeConvention::kDirected;
  std::optional<Vertex> root;
  std::size_t witnesses = 10;
  InputFormat input_format = InputFormat::kAuto;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;          // parse / validation / usage
inline constexpr int kExitDisconnected = 2;   // disconnected or isolated vertex
inline constexpr int kExitComputation = 3;    // convergence or search/path limits
inline constexpr int kExitNotTransitive = 4;  // bounds on a non vertex-transitive graph

// Each command writes its report to `out` and throws qlap::Error on failure.
void cmd_spectrum(const AnalysisConfig& config, const Graph& g, std::ostream& out);
void cmd_orbits(const AnalysisConfig& config, const Graph& g, std::ostream& out);
void cmd_equiv(const AnalysisConfig& config, const Graph& g, std::ostream& out);
void cmd_bounds(const AnalysisConfig& config, const Graph& g, std::ostream& out);
void cmd_report(const AnalysisConfig& config, const Graph& g, std::ostream& out);

int exit_code_for(const std::exception& error);

// Full command-line entry point: argument parsing, dispatch, error mapping.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qlap::cli
