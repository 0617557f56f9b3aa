#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "vts/encoder.hpp"
#include "vts/model.hpp"

namespace vts {

// molecule-set -> activity-set rows observed on nodes or edges.
struct FunctionTable {
  std::map<MolSet, MolSet> rows;
};

struct Witness {
  Vts vts;
  std::vector<std::tuple<int, int, int>> dropped;
  std::optional<std::pair<int, int>> disconnected_pair;
  FunctionTable node_table;
  FunctionTable edge_table;
  // reach[i][j]: molecules the assignment certifies can travel i -> j.
  std::vector<std::vector<MolSet>> reach;
  // residual_reach[i][j]: pair still reachable after the drop (query only).
  std::vector<std::vector<bool>> residual_reach;
};

// Reads a satisfying assignment back into a system. Validates
// defensively: activity outside presence, molecules on absent edges,
// drops of absent edges, or a missing disconnected pair are reported as
// internal errors, since the encoding is supposed to rule them out.
Witness decode_witness(const Encoding& enc, const std::vector<bool>& model,
                       const SearchConfig& cfg);

}  // namespace vts
