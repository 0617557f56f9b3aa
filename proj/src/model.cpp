#include "vts/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace vts {

void sort_edges(Vts& v) { std::sort(v.edges.begin(), v.edges.end()); }

namespace {

std::string edge_name(const Edge& e) {
  std::ostringstream os;
  os << "(" << e.src << "," << e.dst << "," << e.slot << ")";
  return os.str();
}

}  // namespace

void check_invariants(const Vts& v) {
  if (v.num_nodes < 0) throw Error("negative node count");
  if (v.num_molecules < 0 || v.num_molecules > max_molecules)
    throw Error("molecule count out of range [0, 64]");
  if ((int)v.node_labels.size() != v.num_nodes ||
      (int)v.node_activity.size() != v.num_nodes)
    throw Error("node matrix size does not match node count");
  if ((int)v.pairing.size() != v.num_molecules)
    throw Error("pairing matrix size does not match molecule count");

  MolSet universe =
      v.num_molecules == 64 ? ~MolSet{0} : (MolSet{1} << v.num_molecules) - 1;

  for (int i = 0; i < v.num_nodes; ++i) {
    if (v.node_labels[i] & ~universe)
      throw Error("molecule index out of range at node " + std::to_string(i));
    if (v.node_activity[i] & ~v.node_labels[i])
      throw Error("V3 at node " + std::to_string(i) +
                  ": active molecule not present");
  }

  std::set<std::tuple<int, int, int>> seen;
  for (const Edge& e : v.edges) {
    if (e.src < 0 || e.src >= v.num_nodes || e.dst < 0 || e.dst >= v.num_nodes)
      throw Error("edge endpoint out of range at edge " + edge_name(e));
    if (e.slot < 0) throw Error("negative slot at edge " + edge_name(e));
    if (!seen.insert({e.src, e.dst, e.slot}).second)
      throw Error("duplicate edge slot " + edge_name(e));
    if (e.src == e.dst) throw Error("V5: self loop at edge " + edge_name(e));
    if (e.labels & ~universe)
      throw Error("molecule index out of range at edge " + edge_name(e));
    if (e.labels == 0) throw Error("V1 at edge " + edge_name(e) +
                                   ": edge carries no molecule");
    if (e.active & ~e.labels)
      throw Error("V2 at edge " + edge_name(e) +
                  ": active molecule not carried");
    for (MoleculeId m = 0; m < v.num_molecules; ++m) {
      if (!has(e.labels, m)) continue;
      if (!has(v.node_labels[e.src], m) || !has(v.node_labels[e.dst], m))
        throw Error("V4 at edge " + edge_name(e) + " molecule " +
                    std::to_string(m));
    }
  }

  for (MoleculeId m = 0; m < v.num_molecules; ++m) {
    if (v.pairing[m] & ~universe)
      throw Error("pairing index out of range in row " + std::to_string(m));
    for (MoleculeId mp = 0; mp < v.num_molecules; ++mp)
      if (v.pairs(m, mp) && same_class(m, mp, v.num_molecules))
        throw Error("V6: pairing within one molecule class at (" +
                    std::to_string(m) + "," + std::to_string(mp) + ")");
  }
}

NodeRule node_rule_of(Variant v) {
  switch (v) {
    case Variant::A:
    case Variant::C:
    case Variant::E:
      return NodeRule::AllActive;
    default:
      return NodeRule::BooleanFn;
  }
}

EdgeRule edge_rule_of(Variant v) {
  switch (v) {
    case Variant::A:
    case Variant::B:
      return EdgeRule::AllActive;
    case Variant::C:
    case Variant::D:
      return EdgeRule::BooleanFn;
    default:
      return EdgeRule::PairingInhibition;
  }
}

Variant variant_from_letter(char c) {
  if (c >= 'a' && c <= 'f') c = char(c - 'a' + 'A');
  if (c < 'A' || c > 'F')
    throw Error(std::string("unknown variant letter: ") + c);
  return Variant(c - 'A');
}

char variant_letter(Variant v) { return char('A' + int(v)); }

void SearchConfig::validate() const {
  if (num_nodes < 2) throw Error("config: need at least 2 nodes");
  if (num_molecules < 2) throw Error("config: need at least 2 molecules");
  if (num_molecules > max_molecules)
    throw Error("config: at most 64 molecules supported");
  if (max_parallel < 1) throw Error("config: need at least 1 edge slot");
  if (delta < 0) throw Error("config: negative drop count");
  if (connectivity_query && delta < 1)
    throw Error("config: connectivity query needs a positive drop count");
  if (connectivity_query &&
      delta > num_nodes * num_nodes * max_parallel)
    throw Error("config: drop count exceeds the edge slot capacity");
  if (!connectivity_query && delta != 0)
    throw Error("config: drop count given without a connectivity query");
}

int default_molecules(int num_nodes) {
  return num_nodes == 2 ? 2 * num_nodes + 1 : 2 * num_nodes;
}

Vts fixture_fig1() {
  Vts v;
  v.num_nodes = 3;
  v.num_molecules = 8;

  auto mask = [](std::initializer_list<int> ms) {
    MolSet s = 0;
    for (int m : ms) s = with(s, m);
    return s;
  };

  v.node_labels = {mask({0, 1, 2, 3, 4}), mask({0, 1, 2, 3, 6}),
                   mask({1, 2, 3, 5, 7})};
  v.node_activity = v.node_labels;  // every compartment molecule is active

  v.edges = {
      {0, 1, 0, mask({0, 1}), mask({1})},
      {0, 1, 1, mask({0, 1, 2, 3}), mask({0, 1})},
      {1, 0, 0, mask({0, 1, 3}), mask({3})},
      {1, 2, 0, mask({1, 2, 3}), mask({2})},
      {2, 0, 0, mask({2, 3}), mask({3})},
      {2, 1, 0, mask({1, 3}), mask({1})},
  };
  sort_edges(v);

  v.pairing.assign(8, 0);
  v.pairing[1] = mask({6});
  v.pairing[2] = mask({5});
  v.pairing[3] = mask({4});

  check_invariants(v);
  return v;
}

std::string to_string(Variant v) { return std::string(1, variant_letter(v)); }

std::string to_string(DropSemantics s) {
  return s == DropSemantics::Undirected ? "undirected" : "paper";
}

}  // namespace vts
