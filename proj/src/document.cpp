#include "vts/document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace vts {

namespace {

using nlohmann::ordered_json;

MolSet mol_list_to_mask(const ordered_json& arr, int num_molecules,
                        const std::string& where) {
  if (!arr.is_array()) throw Error(where + ": expected a molecule list");
  MolSet s = 0;
  for (const auto& el : arr) {
    if (!el.is_number_integer())
      throw Error(where + ": molecule entries must be integers");
    long long m = el.get<long long>();
    if (m < 0 || m >= num_molecules)
      throw Error(where + ": molecule " + std::to_string(m) +
                  " out of range [0, " + std::to_string(num_molecules) + ")");
    if (has(s, (MoleculeId)m))
      throw Error(where + ": duplicate molecule " + std::to_string(m));
    s = with(s, (MoleculeId)m);
  }
  return s;
}

ordered_json mask_to_mol_list(MolSet s, int num_molecules) {
  ordered_json arr = ordered_json::array();
  for (MoleculeId m = 0; m < num_molecules; ++m)
    if (has(s, m)) arr.push_back(m);
  return arr;
}

int get_int(const ordered_json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key))
    throw Error(where + ": missing field '" + key + "'");
  const auto& v = obj.at(key);
  if (!v.is_number_integer())
    throw Error(where + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

ParsedDocument parse_document(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& ex) {
    throw Error(std::string("document is not valid JSON: ") + ex.what());
  }
  if (!doc.is_object()) throw Error("document root must be an object");

  ParsedDocument out;
  Vts& v = out.vts;

  v.num_molecules = get_int(doc, "num_molecules", "document");
  if (v.num_molecules < 0 || v.num_molecules > max_molecules)
    throw Error("num_molecules out of range [0, 64]");

  if (!doc.contains("nodes") || !doc.at("nodes").is_array())
    throw Error("document: missing 'nodes' list");
  const auto& nodes = doc.at("nodes");
  v.num_nodes = (int)nodes.size();
  v.node_labels.assign(v.num_nodes, 0);
  v.node_activity.assign(v.num_nodes, 0);
  std::set<int> ids;
  for (const auto& n : nodes) {
    if (!n.is_object()) throw Error("nodes: entries must be objects");
    int id = get_int(n, "id", "node");
    if (id < 0 || id >= v.num_nodes)
      throw Error("node id " + std::to_string(id) + " out of range [0, " +
                  std::to_string(v.num_nodes) + ")");
    if (!ids.insert(id).second)
      throw Error("duplicate node id " + std::to_string(id));
    std::string where = "node " + std::to_string(id);
    if (!n.contains("molecules")) throw Error(where + ": missing 'molecules'");
    if (!n.contains("active")) throw Error(where + ": missing 'active'");
    v.node_labels[id] = mol_list_to_mask(n.at("molecules"), v.num_molecules, where);
    v.node_activity[id] = mol_list_to_mask(n.at("active"), v.num_molecules, where);
  }

  if (!doc.contains("edges") || !doc.at("edges").is_array())
    throw Error("document: missing 'edges' list");
  for (const auto& e : doc.at("edges")) {
    if (!e.is_object()) throw Error("edges: entries must be objects");
    Edge edge;
    edge.src = get_int(e, "src", "edge");
    edge.dst = get_int(e, "dst", "edge");
    edge.slot = get_int(e, "slot", "edge");
    std::ostringstream w;
    w << "edge (" << edge.src << "," << edge.dst << "," << edge.slot << ")";
    if (!e.contains("molecules")) throw Error(w.str() + ": missing 'molecules'");
    if (!e.contains("active")) throw Error(w.str() + ": missing 'active'");
    edge.labels = mol_list_to_mask(e.at("molecules"), v.num_molecules, w.str());
    edge.active = mol_list_to_mask(e.at("active"), v.num_molecules, w.str());
    v.edges.push_back(edge);
  }
  sort_edges(v);

  if (!doc.contains("pairing") || !doc.at("pairing").is_array())
    throw Error("document: missing 'pairing' list");
  v.pairing.assign(v.num_molecules, 0);
  for (const auto& pr : doc.at("pairing")) {
    if (!pr.is_array() || pr.size() != 2)
      throw Error("pairing: entries must be [edge_molecule, node_molecule]");
    long long a = pr.at(0).get<long long>();
    long long b = pr.at(1).get<long long>();
    if (a < 0 || a >= v.num_molecules || b < 0 || b >= v.num_molecules)
      throw Error("pairing: index out of range in (" + std::to_string(a) +
                  "," + std::to_string(b) + ")");
    v.pairing[a] = with(v.pairing[a], (MoleculeId)b);
  }

  check_invariants(v);

  if (doc.contains("witness")) {
    const auto& wd = doc.at("witness");
    if (!wd.is_object()) throw Error("witness: must be an object");
    WitnessInfo wi;
    if (!wd.contains("dropped") || !wd.at("dropped").is_array())
      throw Error("witness: missing 'dropped' list");
    for (const auto& dr : wd.at("dropped")) {
      if (!dr.is_array() || dr.size() != 3)
        throw Error("witness: dropped entries must be [src, dst, slot]");
      int s = dr.at(0).get<int>(), d = dr.at(1).get<int>(), q = dr.at(2).get<int>();
      Edge probe{s, d, q, 0, 0};
      bool found = false;
      for (const Edge& e : v.edges)
        if (e.src == s && e.dst == d && e.slot == q) found = true;
      if (!found)
        throw Error("witness: dropped edge (" + std::to_string(s) + "," +
                    std::to_string(d) + "," + std::to_string(q) +
                    ") is not an edge of the system");
      wi.dropped.emplace_back(s, d, q);
      (void)probe;
    }
    std::sort(wi.dropped.begin(), wi.dropped.end());
    if (!wd.contains("disconnected_pair") ||
        !wd.at("disconnected_pair").is_array() ||
        wd.at("disconnected_pair").size() != 2)
      throw Error("witness: missing 'disconnected_pair' [i, j]");
    int i = wd.at("disconnected_pair").at(0).get<int>();
    int j = wd.at("disconnected_pair").at(1).get<int>();
    if (i < 0 || i >= v.num_nodes || j < 0 || j >= v.num_nodes || i == j)
      throw Error("witness: disconnected_pair out of range");
    wi.disconnected_pair = {i, j};
    out.witness = wi;
  }

  return out;
}

Vts parse_vts(const std::string& text) { return parse_document(text).vts; }

std::string emit_document(const Vts& v, const std::optional<WitnessInfo>& w) {
  check_invariants(v);
  ordered_json doc;
  doc["num_molecules"] = v.num_molecules;
  doc["nodes"] = ordered_json::array();
  for (int i = 0; i < v.num_nodes; ++i) {
    ordered_json n;
    n["id"] = i;
    n["molecules"] = mask_to_mol_list(v.node_labels[i], v.num_molecules);
    n["active"] = mask_to_mol_list(v.node_activity[i], v.num_molecules);
    doc["nodes"].push_back(n);
  }
  doc["edges"] = ordered_json::array();
  Vts sorted = v;
  sort_edges(sorted);
  for (const Edge& e : sorted.edges) {
    ordered_json je;
    je["src"] = e.src;
    je["dst"] = e.dst;
    je["slot"] = e.slot;
    je["molecules"] = mask_to_mol_list(e.labels, v.num_molecules);
    je["active"] = mask_to_mol_list(e.active, v.num_molecules);
    doc["edges"].push_back(je);
  }
  doc["pairing"] = ordered_json::array();
  for (MoleculeId m = 0; m < v.num_molecules; ++m)
    for (MoleculeId mp = 0; mp < v.num_molecules; ++mp)
      if (v.pairs(m, mp)) doc["pairing"].push_back(ordered_json::array({m, mp}));
  if (w) {
    ordered_json wd;
    wd["dropped"] = ordered_json::array();
    auto dropped = w->dropped;
    std::sort(dropped.begin(), dropped.end());
    for (auto [s, d, q] : dropped)
      wd["dropped"].push_back(ordered_json::array({s, d, q}));
    wd["disconnected_pair"] =
        ordered_json::array({w->disconnected_pair.first, w->disconnected_pair.second});
    doc["witness"] = wd;
  }
  return doc.dump(2) + "\n";
}

std::string emit_vts(const Vts& v) { return emit_document(v, std::nullopt); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

}  // namespace vts
