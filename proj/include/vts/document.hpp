#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vts/model.hpp"

// Text document format for VTS instances. A document is a JSON object with
// fields num_molecules, nodes, edges and pairing; witness documents add a
// "witness" block recording the dropped edges and the disconnected pair.

namespace vts {

struct WitnessInfo {
  std::vector<std::tuple<int, int, int>> dropped;  // (src, dst, slot)
  std::pair<int, int> disconnected_pair{-1, -1};
};

struct ParsedDocument {
  Vts vts;
  std::optional<WitnessInfo> witness;
};

// Strict parser: any malformed field, out-of-range index or violated
// structural invariant raises Error naming the constraint and location.
ParsedDocument parse_document(const std::string& text);
Vts parse_vts(const std::string& text);

// Canonical emitter: sorted molecule lists, edges in (src, dst, slot)
// order, stable indentation. parse(emit(v)) == v.
std::string emit_vts(const Vts& v);
std::string emit_document(const Vts& v, const std::optional<WitnessInfo>& w);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace vts
