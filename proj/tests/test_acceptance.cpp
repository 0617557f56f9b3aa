// acceptance suite: exercises the whole engine against its documented
// targets and prints one PASS/FAIL line per criterion. exits nonzero if
// any criterion fails. detail lines stream as cells finish so long runs
// stay observable.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "vts/dimacs.hpp"
#include "vts/document.hpp"
#include "vts/driver.hpp"
#include "vts/encoder.hpp"
#include "vts/model.hpp"
#include "vts/solver.hpp"
#include "vts/verifier.hpp"

using namespace vts;

namespace {

double now_seconds() {
  using clk = std::chrono::steady_clock;
  return std::chrono::duration<double>(clk::now().time_since_epoch()).count();
}

struct Criterion {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string summary;
};

std::vector<Criterion> results;

void record(int id, const std::string& name, bool pass,
            const std::string& summary) {
  results.push_back({id, name, pass, summary});
  std::printf("criterion %d [%s]: %s  %s\n", id, name.c_str(),
              pass ? "PASS" : "FAIL", summary.c_str());
  std::fflush(stdout);
}

void detail(const std::string& line) {
  std::printf("    %s\n", line.c_str());
  std::fflush(stdout);
}

SearchConfig ladder_config(Variant v, int nodes) {
  SearchConfig cfg;
  cfg.variant = v;
  cfg.num_nodes = nodes;
  cfg.num_molecules = default_molecules(nodes);
  cfg.max_parallel = 2;
  cfg.drop_semantics = DropSemantics::Undirected;
  return cfg;
}

std::string sweep_brief(const SweepResult& sr) {
  std::ostringstream os;
  os << to_string(sr.status);
  if (sr.status == SweepStatus::MinConnectivity) os << "(" << sr.delta << ")";
  os << " [base " << (sr.base_status == SolveStatus::Sat     ? "sat"
                      : sr.base_status == SolveStatus::Unsat ? "unsat"
                                                             : "unknown");
  for (const SweepStep& st : sr.steps)
    os << ", d" << st.delta << " "
       << (st.status == SolveStatus::Sat     ? "sat"
           : st.status == SolveStatus::Unsat ? "unsat"
                                             : "unknown");
  os << "]";
  return os.str();
}

// 1. connectivity ladder: nu 3..6 at default sizes, two slots, undirected
// drops. A/B/E admit no system at all; C/D/F have a definite floor.
void criterion_ladder() {
  struct Cell {
    char variant;
    SweepStatus want;
    int want_delta;  // meaningful when want == MinConnectivity
  };
  const std::vector<Cell> cells = {
      {'A', SweepStatus::NoGraph, 0}, {'B', SweepStatus::NoGraph, 0},
      {'E', SweepStatus::NoGraph, 0}, {'C', SweepStatus::MinConnectivity, 3},
      {'D', SweepStatus::MinConnectivity, 2},
      {'F', SweepStatus::MinConnectivity, 4},
  };
  int matched = 0, total = 0;
  const double t0 = now_seconds();
  for (int nodes = 3; nodes <= 6; ++nodes) {
    for (const Cell& cell : cells) {
      SearchConfig cfg = ladder_config(variant_from_letter(cell.variant),
                                       nodes);
      cfg.solver_time_limit = 600;
      const double c0 = now_seconds();
      const SweepResult sr = run_min_connectivity(cfg);
      const double c1 = now_seconds();
      const bool ok =
          sr.status == cell.want &&
          (cell.want != SweepStatus::MinConnectivity ||
           sr.delta == cell.want_delta);
      ++total;
      matched += ok;
      std::ostringstream os;
      os << (ok ? "ok  " : "MISMATCH ") << cell.variant << " nu=" << nodes
         << " mu=" << cfg.num_molecules << ": got " << sweep_brief(sr)
         << ", want " << to_string(cell.want);
      if (cell.want == SweepStatus::MinConnectivity)
        os << "(" << cell.want_delta << ")";
      os << "  (" << std::fixed << c1 - c0 << "s)";
      detail(os.str());
    }
  }
  const double t1 = now_seconds();
  std::ostringstream os;
  os << matched << "/" << total << " cells matched in " << std::fixed
     << t1 - t0 << "s";
  record(1, "connectivity ladder", matched == total, os.str());
}

// 2. the worked three-node fixture round-trips through the document layer,
// verifies under variant C, and has undirected edge connectivity 3.
void criterion_fixture() {
  const Vts fixture = fixture_fig1();
  const std::string text = emit_document(fixture, std::nullopt);
  const ParsedDocument doc = parse_document(text);
  SearchConfig cfg;
  cfg.variant = Variant::C;
  cfg.num_nodes = fixture.num_nodes;
  cfg.num_molecules = fixture.num_molecules;
  cfg.max_parallel = 2;
  const VerifierReport rep = verify_witness(doc.vts, cfg, {}, std::nullopt);
  for (const std::string& f : rep.failures) detail("verifier: " + f);
  const int conn = edge_connectivity(doc.vts);
  std::ostringstream os;
  os << (rep.pass ? "all checks pass" : "verifier failed") <<
      ", edge connectivity " << conn;
  record(2, "worked fixture", rep.pass && conn == 3, os.str());
}

// 3. the CDCL search and the exhaustive reference agree on every tiny
// configuration: nu=2 with mu in {2,3,4} and nu=3 with mu in {2,3}, one
// slot, all six variants, base feasibility only.
void criterion_reference_agreement() {
  struct Size {
    int nodes, molecules;
  };
  const std::vector<Size> sizes = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
  int agreed = 0, total = 0;
  for (const Size& sz : sizes) {
    for (char vc : std::string("ABCDEF")) {
      SearchConfig cfg;
      cfg.variant = variant_from_letter(vc);
      cfg.num_nodes = sz.nodes;
      cfg.num_molecules = sz.molecules;
      cfg.max_parallel = 1;
      const bool reference = brute_force_search(cfg).has_value();
      const SearchOutcome got = run_search(cfg);
      const bool solver_sat = got.status == SolveStatus::Sat;
      const bool ok =
          got.status != SolveStatus::Unknown && solver_sat == reference;
      ++total;
      agreed += ok;
      if (!ok) {
        std::ostringstream os;
        os << "disagree " << vc << " nu=" << sz.nodes << " mu=" << sz.molecules
           << ": reference " << (reference ? "sat" : "unsat") << ", solver "
           << (solver_sat ? "sat" : "unsat");
        detail(os.str());
      }
    }
  }
  std::ostringstream os;
  os << agreed << "/" << total << " configurations agree";
  record(3, "reference-search agreement", agreed == total, os.str());
}

// 4. every satisfiable sweep witness is independently valid: the verifier
// passes, the drop count is exact, and the base graph's undirected edge
// connectivity is at most the drop count.
void criterion_witness_validity() {
  std::mt19937_64 rng(20260816);
  const std::string variants = "CDF";
  // size draw leans small so refutation-heavy large cells (whose sweeps
  // mostly end inconclusive under the per-call cap) don't dominate the
  // clock; every size through 6 stays reachable.
  const int size_pool[] = {2, 2, 3, 3, 4, 4, 5, 6};
  int successes = 0, attempts = 0, violations = 0;
  int by_size[7] = {0}, by_variant[3] = {0};
  const int want = 100, max_attempts = 600;
  while (successes < want && attempts < max_attempts) {
    ++attempts;
    SearchConfig cfg;
    cfg.variant = variant_from_letter(
        variants[static_cast<std::size_t>(rng() % variants.size())]);
    cfg.num_nodes = size_pool[rng() % 8];
    cfg.num_molecules =
        default_molecules(cfg.num_nodes) + static_cast<int>(rng() % 3) - 1;
    cfg.max_parallel = 1 + static_cast<int>(rng() % 2);
    cfg.drop_semantics = DropSemantics::Undirected;
    cfg.solver_time_limit = 20;
    cfg.seed = rng();
    const SweepResult sr = run_min_connectivity(cfg);
    if (sr.status != SweepStatus::MinConnectivity || !sr.witness) continue;
    const Witness& w = *sr.witness;
    SearchConfig qcfg = cfg;
    qcfg.connectivity_query = true;
    qcfg.delta = sr.delta;
    const VerifierReport rep =
        verify_witness(w.vts, qcfg, w.dropped, w.disconnected_pair);
    const int conn = edge_connectivity(w.vts);
    const bool exact = static_cast<int>(w.dropped.size()) == sr.delta;
    const bool bounded = conn <= sr.delta;
    if (!rep.pass || !exact || !bounded) {
      ++violations;
      std::ostringstream os;
      os << "violation " << variant_letter(cfg.variant)
         << " nu=" << cfg.num_nodes << " mu=" << cfg.num_molecules
         << " pi=" << cfg.max_parallel << " delta=" << sr.delta << ":"
         << (rep.pass ? "" : " verifier") << (exact ? "" : " drop-count")
         << (bounded ? "" : " connectivity");
      detail(os.str());
      for (const std::string& f : rep.failures) detail("  " + f);
    } else {
      ++successes;
      ++by_size[cfg.num_nodes];
      ++by_variant[variants.find(variant_letter(cfg.variant))];
    }
  }
  {
    std::ostringstream os;
    os << "successes by size:";
    for (int s = 2; s <= 6; ++s) os << " nu" << s << "=" << by_size[s];
    os << "; by variant: C=" << by_variant[0] << " D=" << by_variant[1]
       << " F=" << by_variant[2];
    detail(os.str());
  }
  std::ostringstream os;
  os << successes << "/" << want << " witnesses valid (" << attempts
     << " configurations sampled, " << violations << " violations)";
  record(4, "witness validity", successes >= want && violations == 0,
         os.str());
}

// 5. the exactly-c gadget admits exactly choose(n, c) models over its
// input literals, checked by exhaustive assignment enumeration.
void criterion_cardinality() {
  auto choose = [](int n, int k) -> std::uint64_t {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
      r = r * static_cast<std::uint64_t>(n - k + i) /
          static_cast<std::uint64_t>(i);
    return r;
  };
  int checked = 0, wrong = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int c = 0; c <= n; ++c) {
      CnfBuilder b(n);
      b.begin_family("card");
      std::vector<Lit> lits;
      for (int v = 1; v <= n; ++v) lits.push_back(v);
      encode_exactly(b, lits, c);
      const std::uint64_t got =
          test::count_models(n, b.cnf().num_vars, b.cnf(), b.aux_defs());
      ++checked;
      if (got != choose(n, c)) {
        ++wrong;
        std::ostringstream os;
        os << "count mismatch n=" << n << " c=" << c << ": got " << got
           << ", want " << choose(n, c);
        detail(os.str());
      }
    }
  }
  std::ostringstream os;
  os << checked - wrong << "/" << checked << " gadget counts exact";
  record(5, "cardinality gadget", wrong == 0, os.str());
}

// 6. scale check: the largest advertised configuration reaches a definite
// status within an hour.
void criterion_scale() {
  SearchConfig cfg;
  cfg.variant = Variant::F;
  cfg.num_nodes = 8;
  cfg.num_molecules = 16;
  cfg.max_parallel = 2;
  cfg.connectivity_query = true;
  cfg.delta = 4;
  cfg.drop_semantics = DropSemantics::Undirected;
  cfg.solver_time_limit = 3600;
  const double t0 = now_seconds();
  const SearchOutcome out = run_search(cfg);
  const double t1 = now_seconds();
  const bool definitive = out.status != SolveStatus::Unknown;
  std::ostringstream os;
  os << "F nu=8 mu=16 pi=2 delta=4: "
     << (out.status == SolveStatus::Sat     ? "sat"
         : out.status == SolveStatus::Unsat ? "unsat"
                                            : "unknown")
     << " in " << std::fixed << t1 - t0 << "s (" << out.stats.conflicts
     << " conflicts)";
  if (out.witness) os << ", witness verified";
  record(6, "scale check", definitive, os.str());
}

// 7. encoding determinism: every ladder configuration, with and without
// drop queries, exports byte-identical DIMACS across two builds.
void criterion_determinism() {
  int same = 0, total = 0;
  for (int nodes = 3; nodes <= 6; ++nodes) {
    for (char vc : std::string("ABCDEF")) {
      for (int delta = 0; delta <= 4; ++delta) {
        SearchConfig cfg = ladder_config(variant_from_letter(vc), nodes);
        if (delta > 0) {
          cfg.connectivity_query = true;
          cfg.delta = delta;
        }
        const Encoding e1 = encode_problem(cfg);
        const Encoding e2 = encode_problem(cfg);
        const std::string d1 = export_dimacs(e1.cnf, e1.vm, e1.audit);
        const std::string d2 = export_dimacs(e2.cnf, e2.vm, e2.audit);
        ++total;
        if (d1 == d2 && !d1.empty()) {
          ++same;
        } else {
          std::ostringstream os;
          os << "differs " << vc << " nu=" << nodes << " delta=" << delta;
          detail(os.str());
        }
      }
    }
  }
  std::ostringstream os;
  os << same << "/" << total << " exports byte-identical";
  record(7, "deterministic export", same == total, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  // optional args: criterion numbers to run (default all), for iterating
  // on one criterion without paying for the whole suite.
  bool run[8];
  for (int i = 1; i <= 7; ++i) run[i] = argc < 2;
  for (int a = 1; a < argc; ++a) {
    const int id = std::atoi(argv[a]);
    if (id < 1 || id > 7) {
      std::fprintf(stderr, "usage: %s [criterion 1..7]...\n", argv[0]);
      return 2;
    }
    run[id] = true;
  }
  const double t0 = now_seconds();
  if (run[1]) criterion_ladder();
  if (run[2]) criterion_fixture();
  if (run[3]) criterion_reference_agreement();
  if (run[4]) criterion_witness_validity();
  if (run[5]) criterion_cardinality();
  if (run[6]) criterion_scale();
  if (run[7]) criterion_determinism();
  const double t1 = now_seconds();

  int failed = 0;
  std::printf("\nsummary:\n");
  for (const Criterion& c : results) {
    std::printf("criterion %d [%s]: %s\n", c.id, c.name.c_str(),
                c.pass ? "PASS" : "FAIL");
    failed += !c.pass;
  }
  std::printf("acceptance: %d/%d criteria passed in %.1fs\n",
              static_cast<int>(results.size()) - failed,
              static_cast<int>(results.size()), t1 - t0);
  return failed == 0 ? 0 : 1;
}
