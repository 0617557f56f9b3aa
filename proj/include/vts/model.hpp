#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Core data model for vesicle traffic systems (VTS): labeled directed
// multigraphs whose nodes are compartments and whose edges are vesicles.
// Molecule sets are stored as bitmasks, so at most 64 molecule species
// are supported per system.

namespace vts {

using MoleculeId = int;
using NodeId = int;
using MolSet = std::uint64_t;

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

constexpr int max_molecules = 64;

inline bool has(MolSet s, MoleculeId m) { return (s >> m) & 1u; }
inline MolSet with(MolSet s, MoleculeId m) { return s | (MolSet{1} << m); }
inline MolSet without(MolSet s, MoleculeId m) {
  return s & ~(MolSet{1} << m);
}
inline int popcount(MolSet s) { return std::popcount(s); }
inline MoleculeId first_molecule(MolSet s) { return std::countr_zero(s); }

// Molecules below the midpoint form one SNARE class, the rest the other.
// Pairing is only allowed across the two classes.
inline int q_class_size(int num_molecules) { return (num_molecules + 1) / 2; }
inline bool is_q_class(MoleculeId m, int num_molecules) {
  return m < q_class_size(num_molecules);
}
inline bool same_class(MoleculeId x, MoleculeId y, int num_molecules) {
  return is_q_class(x, num_molecules) == is_q_class(y, num_molecules);
}

// One directed vesicle edge. Parallel edges between the same node pair are
// distinguished by slot. labels is the set of molecules carried, active the
// subset that is active on the edge.
struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  int slot = 0;
  MolSet labels = 0;
  MolSet active = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A complete VTS. Edges are kept sorted by (src, dst, slot).
struct Vts {
  int num_nodes = 0;
  int num_molecules = 0;
  std::vector<MolSet> node_labels;    // per node: molecules present
  std::vector<MolSet> node_activity;  // per node: molecules active
  std::vector<Edge> edges;
  std::vector<MolSet> pairing;        // row m: set of m' with P(m, m')

  bool pairs(MoleculeId m, MoleculeId mp) const { return has(pairing[m], mp); }

  friend bool operator==(const Vts&, const Vts&) = default;
};

// Canonical edge order used everywhere (documents, encodings, reports).
void sort_edges(Vts& v);

// Checks the structural invariants a Vts must satisfy and throws Error
// naming the first violated constraint:
//   V1 every edge carries at least one molecule
//   V2 edge activity is a subset of edge labels
//   V3 node activity is a subset of node labels
//   V4 edge labels are present at both endpoints
//   V5 no self loops
//   V6 pairing holds only across the two molecule classes
// plus basic shape checks (index ranges, unique slots, matrix sizes).
void check_invariants(const Vts& v);

// Node and edge activity rules. A boolean function rule means each
// molecule's activity is some fixed function of the full label vector at
// the site; the all-active rule activates exactly the molecules present.
enum class NodeRule { AllActive, BooleanFn };
enum class EdgeRule { AllActive, BooleanFn, PairingInhibition };

enum class Variant { A, B, C, D, E, F };

NodeRule node_rule_of(Variant v);
EdgeRule edge_rule_of(Variant v);
Variant variant_from_letter(char c);
char variant_letter(Variant v);

// How reachability is read on the dropped graph: along edge directions
// only, or ignoring directions. The CLI spells the directed mode "paper".
enum class DropSemantics { Directed, Undirected };

// Search problem description. delta is the number of edges to drop when
// the connectivity query is enabled.
struct SearchConfig {
  Variant variant = Variant::A;
  int num_nodes = 0;
  int num_molecules = 0;
  int max_parallel = 1;  // parallel edge slots per ordered node pair
  bool connectivity_query = false;
  int delta = 0;
  DropSemantics drop_semantics = DropSemantics::Undirected;
  double solver_time_limit = 0;  // seconds, 0 = unlimited
  std::uint64_t seed = 0;

  void validate() const;
};

// Default size convention: twice as many molecules as nodes, one extra
// on the smallest systems.
int default_molecules(int num_nodes);

// Worked three-node example system used as a fixture throughout the tests.
Vts fixture_fig1();

std::string to_string(Variant v);
std::string to_string(DropSemantics s);

}  // namespace vts
