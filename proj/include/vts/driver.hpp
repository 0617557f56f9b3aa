#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vts/decoder.hpp"
#include "vts/model.hpp"
#include "vts/solver.hpp"
#include "vts/verifier.hpp"

// search orchestration: encode -> solve -> decode -> verify. a witness
// that fails the independent verifier is never returned; it raises an
// internal error instead.

namespace vts {

struct SearchOutcome {
  SolveStatus status = SolveStatus::Unknown;
  std::optional<Witness> witness;
  VerifierReport verification;
  SolveStats stats;
  int num_vars = 0;
  std::size_t num_clauses = 0;
};

SearchOutcome run_search(const SearchConfig& cfg);

enum class SweepStatus { NoGraph, MinConnectivity, Inconclusive };

const char* to_string(SweepStatus s);

struct SweepStep {
  int delta = 0;
  SolveStatus status = SolveStatus::Unknown;
  SolveStats stats;
};

struct SweepResult {
  SweepStatus status = SweepStatus::Inconclusive;
  int delta = 0;  // first satisfiable drop count, or last probed
  SolveStatus base_status = SolveStatus::Unknown;
  std::vector<SweepStep> steps;
  std::optional<Witness> witness;
};

// base feasibility first, then drop counts 1,2,... until satisfiable.
// max_delta <= 0 defaults to the slot capacity nodes^2 * max_parallel.
SweepResult run_min_connectivity(SearchConfig cfg, int max_delta = 0);

struct BenchRow {
  char variant = 'A';
  int nodes = 0;
  int molecules = 0;
  int max_parallel = 0;
  int delta = 0;
  SolveStatus status = SolveStatus::Unknown;
  double seconds = 0.0;
};

// drop count probed for a variant in the benchmark ladder.
int bench_delta(Variant v);

// one row per (size, variant), sizes ascending; on_row fires as each
// cell finishes so progress can be streamed.
std::vector<BenchRow> run_bench(
    const std::string& variants, int min_nodes, int max_nodes,
    double time_limit, std::uint64_t seed,
    const std::function<void(const BenchRow&)>& on_row = nullptr);

}  // namespace vts
