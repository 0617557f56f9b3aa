#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <iostream>

#include "support.hpp"
#include "vts/driver.hpp"
#include "vts/verifier.hpp"

using namespace vts;

namespace {

SearchConfig small_cfg(Variant v, int nodes, int molecules, int parallel) {
  SearchConfig cfg;
  cfg.variant = v;
  cfg.num_nodes = nodes;
  cfg.num_molecules = molecules;
  cfg.max_parallel = parallel;
  return cfg;
}

}  // namespace

TEST_CASE("search agrees with the exhaustive reference on tiny sizes") {
  // grid kept within the reference search bounds; every cell compares
  // sat/unsat, and sat witnesses already passed the verifier inside
  // run_search.
  struct Cell {
    int nodes, molecules, parallel;
  };
  std::vector<Cell> grid = {
      {2, 2, 1}, {2, 3, 1}, {2, 4, 1}, {2, 2, 2}, {2, 3, 2},
      {3, 2, 1}, {3, 3, 1},
  };
  for (const Cell& cell : grid) {
    for (char vc : std::string("ABCDEF")) {
      const Variant v = variant_from_letter(vc);
      SearchConfig cfg =
          small_cfg(v, cell.nodes, cell.molecules, cell.parallel);
      CAPTURE(vc);
      CAPTURE(cell.nodes);
      CAPTURE(cell.molecules);
      CAPTURE(cell.parallel);
      const auto expect = brute_force_search(cfg);
      const SearchOutcome got = run_search(cfg);
      REQUIRE(got.status != SolveStatus::Unknown);
      CHECK((got.status == SolveStatus::Sat) == expect.has_value());
      if (got.status == SolveStatus::Sat) {
        CHECK(got.verification.pass);
      }
    }
  }
}

TEST_CASE("connectivity query agrees with the reference on tiny sizes") {
  // delta = 1 and 2 over 3-node one-slot systems; the reference filters
  // by min_disconnect <= delta <= edge count.
  for (char vc : std::string("CDF")) {
    const Variant v = variant_from_letter(vc);
    for (int delta = 1; delta <= 2; ++delta) {
      SearchConfig cfg = small_cfg(v, 3, 3, 1);
      cfg.connectivity_query = true;
      cfg.delta = delta;
      CAPTURE(vc);
      CAPTURE(delta);
      const auto expect = brute_force_search(cfg);
      const SearchOutcome got = run_search(cfg);
      REQUIRE(got.status != SolveStatus::Unknown);
      CHECK((got.status == SolveStatus::Sat) == expect.has_value());
      if (got.witness) {
        CHECK((int)got.witness->dropped.size() == delta);
        CHECK(got.verification.pass);
      }
    }
  }
}

TEST_CASE("min connectivity sweep on a tiny feasible variant") {
  // variant F has 2-node systems; the sweep must find the smallest delta
  // and its witness must survive the verifier.
  SearchConfig cfg = small_cfg(Variant::F, 2, 5, 2);
  const SweepResult sr = run_min_connectivity(cfg);
  REQUIRE(sr.base_status == SolveStatus::Sat);
  REQUIRE(sr.status == SweepStatus::MinConnectivity);
  CHECK(sr.delta >= 1);
  REQUIRE(sr.witness.has_value());
  CHECK((int)sr.witness->dropped.size() == sr.delta);

  // dropping fewer than delta edges must be reported unsatisfiable
  for (const SweepStep& st : sr.steps)
    if (st.delta < sr.delta && st.delta > 0)
      CHECK(st.status == SolveStatus::Unsat);
}

TEST_CASE("infeasible variant sweeps to no-graph") {
  SearchConfig cfg = small_cfg(Variant::A, 2, 5, 2);
  const SweepResult sr = run_min_connectivity(cfg);
  CHECK(sr.base_status == SolveStatus::Unsat);
  CHECK(sr.status == SweepStatus::NoGraph);
}
