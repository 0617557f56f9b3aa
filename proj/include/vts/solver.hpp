#pragma once

#include <cstdint>
#include <vector>

#include "vts/cnf.hpp"

// embedded CDCL solver: two-watched-literal propagation, activity-driven
// decisions with phase saving, first-UIP learning with recursive clause
// minimization, lbd-aware learnt retention, and restarts paced by moving
// averages of learnt quality with a trail-depth block.

namespace vts {

enum class SolveStatus { Sat, Unsat, Unknown };

const char* to_string(SolveStatus s);

struct SolveStats {
  std::uint64_t conflicts = 0;
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t restarts = 0;
  double wall_seconds = 0.0;
};

struct SolverLimits {
  double time_limit_seconds = 0.0;  // 0 disables the limit
  std::uint64_t seed = 0;           // 0 keeps decisions fully deterministic
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  // indexed by variable, entry 0 unused; filled only when status == Sat.
  // the model is re-checked against the input clauses before returning.
  std::vector<bool> model;
  SolveStats stats;
};

SolveResult solve(const Cnf& cnf, const SolverLimits& limits = {});

}  // namespace vts
