#include "vts/cnf.hpp"

#include <cassert>
#include <cstdlib>

namespace vts {

void CnfBuilder::begin_family(const std::string& name) {
  audit_.push_back({name, 0, 0});
}

void CnfBuilder::add(std::vector<Lit> clause) {
  assert(!audit_.empty());
  for ([[maybe_unused]] Lit l : clause)
    assert(l != 0 && std::abs(l) <= cnf_.num_vars);
  cnf_.clauses.push_back(std::move(clause));
  audit_.back().clauses++;
}

int CnfBuilder::aux(AuxDef::Kind kind, std::vector<Lit> lits) {
  assert(!audit_.empty());
  int v = ++cnf_.num_vars;
  aux_defs_.push_back({v, kind, std::move(lits)});
  audit_.back().aux_vars++;
  return v;
}

int CnfBuilder::and_aux_fwd(std::vector<Lit> lits) {
  int v = aux(AuxDef::And, lits);
  for (Lit l : lits) binary(-v, l);
  return v;
}

int CnfBuilder::and_aux_full(std::vector<Lit> lits) {
  int v = aux(AuxDef::And, lits);
  std::vector<Lit> back{v};
  for (Lit l : lits) {
    binary(-v, l);
    back.push_back(-l);
  }
  add(back);
  return v;
}

int CnfBuilder::or_aux_rev(std::vector<Lit> lits) {
  int v = aux(AuxDef::Or, lits);
  for (Lit l : lits) binary(-l, v);
  return v;
}

int CnfBuilder::equal_aux_rev(Lit x, Lit y) {
  int v = aux(AuxDef::Equal, {x, y});
  ternary(-x, -y, v);
  ternary(x, y, v);
  return v;
}

namespace {

bool lit_value(const std::vector<bool>& values, Lit l) {
  bool b = values[std::abs(l)];
  return l > 0 ? b : !b;
}

}  // namespace

bool satisfies(const Cnf& cnf, const std::vector<bool>& values) {
  for (const auto& cl : cnf.clauses) {
    bool sat = false;
    for (Lit l : cl)
      if (lit_value(values, l)) {
        sat = true;
        break;
      }
    if (!sat) return false;
  }
  return true;
}

void eval_aux(const std::vector<AuxDef>& defs, std::vector<bool>& values) {
  for (const AuxDef& d : defs) {
    bool v = false;
    switch (d.kind) {
      case AuxDef::And:
        v = true;
        for (Lit l : d.lits) v = v && lit_value(values, l);
        break;
      case AuxDef::Or:
        v = false;
        for (Lit l : d.lits) v = v || lit_value(values, l);
        break;
      case AuxDef::Equal:
        v = lit_value(values, d.lits[0]) == lit_value(values, d.lits[1]);
        break;
      case AuxDef::OrAnd:
        v = lit_value(values, d.lits[0]) ||
            (lit_value(values, d.lits[1]) && lit_value(values, d.lits[2]));
        break;
    }
    values[d.var] = v;
  }
}

}  // namespace vts
