#pragma once

#include <vector>

#include "vts/cnf.hpp"
#include "vts/model.hpp"
#include "vts/varmap.hpp"

// CNF encoding of the search problem. Constraint families:
//   V1..V6  structure: edges carry molecules, activity within presence,
//           labels present at both endpoints, no self loops, cross-class
//           pairing only
//   SB,LX   representative selection: parallel slots fill lowest-first;
//           node rows and same-class molecule columns of the presence
//           matrix descend lexicographically. these prune symmetric
//           duplicates and exclude some valid systems by design
//   V7,V8   fusion: every edge fuses with its destination and with no
//           other node
//   Ann/Anb node activity rule (all-active / boolean function)
//   Aen/Aeb/Aep edge activity rule (all-active / boolean function /
//           pairing inhibition)
//   R1,R2   stability: every molecule moved along an edge can flow back
//           (bounded reachability unrolling at horizon nu)
//   BC      the base graph is connected (without this, empty or split
//           systems satisfy all other families vacuously and the drop
//           query answers nothing about cuts)
//   D1..D4  connectivity query: dropping exactly delta edges leaves some
//           node pair disconnected

namespace vts {

struct Encoding {
  VarMap vm;
  Cnf cnf;
  std::vector<FamilyAudit> audit;
  std::vector<AuxDef> aux_defs;
};

VarMap allocate_variables(const SearchConfig& cfg);

void encode_structure(CnfBuilder& b, const VarMap& vm);
void encode_fusion(CnfBuilder& b, const VarMap& vm);
void encode_activity(CnfBuilder& b, const VarMap& vm, Variant variant);
void encode_stability(CnfBuilder& b, const VarMap& vm);
void encode_connected(CnfBuilder& b, const VarMap& vm);
void encode_drop(CnfBuilder& b, const VarMap& vm, int delta,
                 DropSemantics semantics);

// Exactly c of the given literals are true (sequential counter; the
// auxiliary registers are fully defined, so models project one-to-one).
void encode_exactly(CnfBuilder& b, const std::vector<Lit>& lits, int c);

Encoding encode_problem(const SearchConfig& cfg);

}  // namespace vts
