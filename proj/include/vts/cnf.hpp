#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vts/model.hpp"

// CNF container and clause builder. Literals use the DIMACS convention:
// +v / -v for variable v >= 1. The builder tracks, per constraint family,
// how many clauses and auxiliary variables were emitted, and records a
// small semantic definition for every auxiliary variable so tests can
// extend a structural assignment to the auxiliaries deterministically.

namespace vts {

using Lit = int;

struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<Lit>> clauses;
};

struct FamilyAudit {
  std::string name;
  int clauses = 0;
  int aux_vars = 0;
};

// How an auxiliary variable is determined by earlier variables. Used only
// for evaluating candidate assignments outside the solver; the clauses the
// encoder emits may constrain just one direction of the definition.
struct AuxDef {
  enum Kind {
    And,    // var = conjunction of lits
    Or,     // var = disjunction of lits
    Equal,  // var = (lits[0] == lits[1])
    OrAnd,  // var = lits[0] or (lits[1] and lits[2])
  };
  int var = 0;
  Kind kind = And;
  std::vector<Lit> lits;
};

class CnfBuilder {
public:
  explicit CnfBuilder(int num_named) { cnf_.num_vars = num_named; }

  void begin_family(const std::string& name);

  void add(std::vector<Lit> clause);
  void unit(Lit a) { add({a}); }
  void binary(Lit a, Lit b) { add({a, b}); }
  void ternary(Lit a, Lit b, Lit c) { add({a, b, c}); }

  // Fresh auxiliary variable with its semantic definition.
  int aux(AuxDef::Kind kind, std::vector<Lit> lits);

  // aux = and(lits), clauses only for aux => each lit.
  int and_aux_fwd(std::vector<Lit> lits);
  // aux = and(lits), full equivalence clauses.
  int and_aux_full(std::vector<Lit> lits);
  // aux = or(lits), clauses only for each lit => aux.
  int or_aux_rev(std::vector<Lit> lits);
  // aux = (x == y), clauses only for equal inputs forcing aux true.
  int equal_aux_rev(Lit x, Lit y);

  const Cnf& cnf() const { return cnf_; }
  Cnf take_cnf() { return std::move(cnf_); }
  const std::vector<FamilyAudit>& audit() const { return audit_; }
  const std::vector<AuxDef>& aux_defs() const { return aux_defs_; }
  int num_vars() const { return cnf_.num_vars; }

private:
  Cnf cnf_;
  std::vector<FamilyAudit> audit_;
  std::vector<AuxDef> aux_defs_;
};

// True iff every clause has a true literal under the given values
// (values[v] for variable v, index 0 unused).
bool satisfies(const Cnf& cnf, const std::vector<bool>& values);

// Extends named-variable values to the auxiliaries using their recorded
// definitions. values must have size num_vars + 1; auxiliaries are
// evaluated in allocation order.
void eval_aux(const std::vector<AuxDef>& defs, std::vector<bool>& values);

}  // namespace vts
