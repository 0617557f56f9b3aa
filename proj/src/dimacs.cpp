#include "vts/dimacs.hpp"

#include <cstdlib>
#include <sstream>

namespace vts {

std::string export_dimacs(const Cnf& cnf, const VarMap& vm,
                          const std::vector<FamilyAudit>& audit) {
  std::string out;
  out.reserve(64 * cnf.clauses.size());
  for (int v = 1; v <= vm.num_named(); ++v) {
    out += "c var ";
    out += vm.name(v);
    out += " = ";
    out += std::to_string(v);
    out += '\n';
  }
  for (const auto& fam : audit) {
    out += "c family ";
    out += fam.name;
    out += " clauses=";
    out += std::to_string(fam.clauses);
    out += " aux=";
    out += std::to_string(fam.aux_vars);
    out += '\n';
  }
  out += "p cnf ";
  out += std::to_string(cnf.num_vars);
  out += ' ';
  out += std::to_string(cnf.clauses.size());
  out += '\n';
  for (const auto& cl : cnf.clauses) {
    for (Lit l : cl) {
      out += std::to_string(l);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

std::optional<std::vector<bool>> import_assignment(const std::string& text,
                                                   int num_vars) {
  std::vector<bool> values(num_vars + 1, false);
  bool saw_sat = false;
  bool saw_values = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == 's') {
      if (line.find("UNSATISFIABLE") != std::string::npos) return std::nullopt;
      if (line.find("SATISFIABLE") != std::string::npos) saw_sat = true;
      continue;
    }
    if (line[0] != 'v') continue;
    std::istringstream ls(line.substr(1));
    long lit;
    while (ls >> lit) {
      if (lit == 0) continue;
      const long var = lit < 0 ? -lit : lit;
      if (var > num_vars)
        throw Error("assignment names variable " + std::to_string(var) +
                    " beyond the formula");
      values[static_cast<std::size_t>(var)] = lit > 0;
      saw_values = true;
    }
    if (!ls.eof()) throw Error("malformed value line in solver output");
  }
  if (!saw_sat && !saw_values)
    throw Error("solver output contains no result lines");
  return values;
}

}  // namespace vts
