#include "vts/driver.hpp"

#include "vts/encoder.hpp"

namespace vts {

const char* to_string(SweepStatus s) {
  switch (s) {
    case SweepStatus::NoGraph: return "no-graph";
    case SweepStatus::MinConnectivity: return "min-connectivity";
    case SweepStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

SearchOutcome run_search(const SearchConfig& cfg) {
  SearchOutcome out;
  const Encoding enc = encode_problem(cfg);
  out.num_vars = enc.cnf.num_vars;
  out.num_clauses = enc.cnf.clauses.size();
  const SolverLimits limits{cfg.solver_time_limit, cfg.seed};
  SolveResult res = solve(enc.cnf, limits);
  out.status = res.status;
  out.stats = res.stats;
  if (res.status == SolveStatus::Sat) {
    Witness w = decode_witness(enc, res.model, cfg);
    out.verification =
        verify_witness(w.vts, cfg, w.dropped, w.disconnected_pair);
    if (!out.verification.pass) {
      std::string msg = "internal: witness failed verification";
      for (const auto& f : out.verification.failures) msg += "; " + f;
      throw Error(msg);
    }
    out.witness = std::move(w);
  }
  return out;
}

SweepResult run_min_connectivity(SearchConfig cfg, int max_delta) {
  cfg.connectivity_query = false;
  cfg.delta = 0;
  SweepResult sr;
  const SearchOutcome base = run_search(cfg);
  sr.base_status = base.status;
  if (base.status == SolveStatus::Unsat) {
    sr.status = SweepStatus::NoGraph;
    return sr;
  }
  if (base.status == SolveStatus::Unknown) {
    sr.status = SweepStatus::Inconclusive;
    return sr;
  }
  if (max_delta <= 0)
    max_delta = cfg.num_nodes * cfg.num_nodes * cfg.max_parallel;
  for (int d = 1; d <= max_delta; ++d) {
    cfg.connectivity_query = true;
    cfg.delta = d;
    SearchOutcome probe = run_search(cfg);
    sr.steps.push_back({d, probe.status, probe.stats});
    sr.delta = d;
    if (probe.status == SolveStatus::Sat) {
      sr.status = SweepStatus::MinConnectivity;
      sr.witness = std::move(probe.witness);
      return sr;
    }
    if (probe.status == SolveStatus::Unknown) {
      sr.status = SweepStatus::Inconclusive;
      return sr;
    }
  }
  sr.status = SweepStatus::Inconclusive;
  return sr;
}

int bench_delta(Variant v) {
  switch (v) {
    case Variant::C: return 3;
    case Variant::F: return 4;
    default: return 2;
  }
}

std::vector<BenchRow> run_bench(
    const std::string& variants, int min_nodes, int max_nodes,
    double time_limit, std::uint64_t seed,
    const std::function<void(const BenchRow&)>& on_row) {
  std::vector<BenchRow> rows;
  for (int nu = min_nodes; nu <= max_nodes; ++nu)
    for (char vc : variants) {
      SearchConfig cfg;
      cfg.variant = variant_from_letter(vc);
      cfg.num_nodes = nu;
      cfg.num_molecules = default_molecules(nu);
      cfg.max_parallel = 2;
      cfg.connectivity_query = true;
      cfg.delta = bench_delta(cfg.variant);
      cfg.drop_semantics = DropSemantics::Undirected;
      cfg.solver_time_limit = time_limit;
      cfg.seed = seed;
      const SearchOutcome out = run_search(cfg);
      BenchRow row{vc,        nu,         cfg.num_molecules,
                   2,         cfg.delta,  out.status,
                   out.stats.wall_seconds};
      if (on_row) on_row(row);
      rows.push_back(row);
    }
  return rows;
}

}  // namespace vts
