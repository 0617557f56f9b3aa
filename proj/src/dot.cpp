#include "vts/dot.hpp"

#include <set>

namespace vts {

namespace {

std::string mol_list(MolSet labels, MolSet active, int mu) {
  std::string s;
  for (int m = 0; m < mu; ++m) {
    if (!has(labels, m)) continue;
    if (!s.empty()) s += ' ';
    s += std::to_string(m);
    if (has(active, m)) s += '*';
  }
  return s;
}

}  // namespace

std::string export_dot(const Vts& g,
                       const std::vector<std::tuple<int, int, int>>& dropped) {
  std::set<std::tuple<int, int, int>> drop(dropped.begin(), dropped.end());
  Vts sorted = g;
  sort_edges(sorted);
  std::string out = "digraph vts {\n  rankdir=LR;\n  node [shape=box];\n";
  for (int i = 0; i < sorted.num_nodes; ++i) {
    out += "  n" + std::to_string(i) + " [label=\"n" + std::to_string(i) +
           ": " +
           mol_list(sorted.node_labels[i], sorted.node_activity[i],
                    sorted.num_molecules) +
           "\"];\n";
  }
  for (const Edge& e : sorted.edges) {
    out += "  n" + std::to_string(e.src) + " -> n" + std::to_string(e.dst) +
           " [label=\"" + mol_list(e.labels, e.active, sorted.num_molecules) +
           "\"";
    if (drop.count({e.src, e.dst, e.slot})) out += ", style=dashed";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace vts
