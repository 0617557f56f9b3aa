#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vts/cnf.hpp"
#include "vts/varmap.hpp"

namespace vts {

// DIMACS CNF text. The comment header names every problem variable
// ("c var n[0][1] = 3") and lists per-family clause and auxiliary
// variable counts, so the formula can be audited and solved externally.
std::string export_dimacs(const Cnf& cnf, const VarMap& vm,
                          const std::vector<FamilyAudit>& audit);

// Parses the "s ..."/"v ..." lines an external solver prints. Returns
// nullopt for an UNSATISFIABLE answer, otherwise values indexed by
// variable (entry 0 unused, unmentioned variables false). Throws on
// malformed input or literals beyond num_vars.
std::optional<std::vector<bool>> import_assignment(const std::string& text,
                                                   int num_vars);

}  // namespace vts
