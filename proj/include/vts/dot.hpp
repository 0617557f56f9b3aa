#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "vts/model.hpp"

namespace vts {

// Graphviz rendering: one statement per node ("n0: 1 2* 3", active
// molecules starred) and per edge slot (molecule list label, dropped
// edges dashed). Output is deterministic for equal inputs.
std::string export_dot(
    const Vts& g,
    const std::vector<std::tuple<int, int, int>>& dropped = {});

}  // namespace vts
