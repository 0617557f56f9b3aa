#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vts/cnf.hpp"
#include "vts/model.hpp"

// shared helpers for the unit tests.

namespace vts::test {

// runs fn and returns the Error message it throws, or "" if it returns.
inline std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

// all assignments of the first num_vars variables, each extended over the
// aux definitions; yields the full assignment vector (index 0 unused).
inline void for_each_assignment(
    int num_named, int num_vars, const std::vector<AuxDef>& defs,
    const std::function<void(const std::vector<bool>&)>& fn) {
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << num_named);
       ++bits) {
    std::vector<bool> a(static_cast<std::size_t>(num_vars) + 1, false);
    for (int v = 1; v <= num_named; ++v) a[v] = (bits >> (v - 1)) & 1u;
    eval_aux(defs, a);
    fn(a);
  }
}

// counts assignments of the named variables that satisfy the formula once
// extended over the aux definitions.
inline std::uint64_t count_models(int num_named, int num_vars,
                                  const Cnf& cnf,
                                  const std::vector<AuxDef>& defs) {
  std::uint64_t n = 0;
  for_each_assignment(num_named, num_vars, defs,
                      [&](const std::vector<bool>& a) {
                        if (satisfies(cnf, a)) ++n;
                      });
  return n;
}

}  // namespace vts::test
