#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "vts/model.hpp"

// independent graph-theoretic checks. nothing here looks at the CNF
// encoding; everything is computed directly on the system, so these
// functions can contradict the search engine if either side is wrong.

namespace vts {

struct CheckResult {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
  void merge(const CheckResult& other) {
    ok = ok && other.ok;
    failures.insert(failures.end(), other.failures.begin(),
                    other.failures.end());
  }
};

// shape constraints: molecule ranges, nonempty edge label sets, activity
// within presence, endpoint presence, no self loops, cross-class pairing,
// distinct slots within the parallel bound.
CheckResult check_well_structured(const Vts& g, int max_parallel);

// every molecule moved along an edge can travel back from the edge's
// destination to its source through edges carrying that molecule.
CheckResult check_stability(const Vts& g);

// every edge has an active molecule paired with an active molecule of its
// destination, and no active molecule of any edge pairs with an active
// molecule of a node other than the destination.
CheckResult check_well_fused(const Vts& g);

// the variant's node and edge activity rules hold.
CheckResult check_activity_rules(const Vts& g, Variant variant);

// the base graph, edges taken undirected, connects all nodes.
CheckResult check_connected(const Vts& g);

// removing exactly the listed edges leaves the claimed pair (when given)
// and at least one pair mutually unreachable under the chosen semantics.
CheckResult check_drop_disconnects(
    const Vts& g, const std::vector<std::tuple<int, int, int>>& dropped,
    DropSemantics semantics,
    const std::optional<std::pair<int, int>>& claimed_pair);

// undirected edge connectivity of the base multigraph (max-flow over
// parallel-slot capacities); 0 when already disconnected.
int edge_connectivity(const Vts& g);

struct VerifierReport {
  bool pass = true;
  std::vector<std::string> failures;
};

// all of the above for a search result: the system itself, the variant
// rules, and (for a connectivity query) the dropped-edge certificate.
VerifierReport verify_witness(
    const Vts& g, const SearchConfig& cfg,
    const std::vector<std::tuple<int, int, int>>& dropped,
    const std::optional<std::pair<int, int>>& claimed_pair);

// exhaustive reference search over tiny configurations, used to validate
// the engine. supports nodes<=3 with one slot per ordered pair, or
// nodes==2 with up to two slots; molecules<=4.
std::optional<Vts> brute_force_search(const SearchConfig& cfg);

// smallest number of edges whose removal mutually disconnects some pair,
// by subset enumeration; -1 when no subset disconnects.
int min_disconnect(const Vts& g, DropSemantics semantics);

}  // namespace vts
