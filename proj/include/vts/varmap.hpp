#pragma once

#include <string>
#include <vector>

#include "vts/model.hpp"

// Deterministic layout of the named problem variables. Blocks are
// allocated contiguously from 1 in the order n, e, el, p, a, b, r, d, rp;
// auxiliary variables introduced during encoding always come after the
// named region. Index meanings:
//   n[i][m]        molecule m present at node i
//   e[i][j][q]     edge slot q from i to j exists
//   el[i][j][q][m] molecule m carried on that edge slot
//   p[m][mp]       molecule m (edge side) pairs with mp (node side)
//   a[i][m]        molecule m active at node i
//   b[i][j][q][m]  molecule m active on the edge slot
//   r[i][j][m][l]  m-path from i to j of length <= l, l in [1, nu]
//   d[i][j][q]     edge slot dropped by the connectivity query
//   rp[i][j]       j reachable from i after the drop

namespace vts {

class VarMap {
public:
  VarMap(int num_nodes, int num_molecules, int max_parallel);

  int n(int i, int m) const { return base_n_ + i * mu_ + m + 1; }
  int e(int i, int j, int q) const { return base_e_ + slot(i, j, q) + 1; }
  int el(int i, int j, int q, int m) const {
    return base_el_ + slot(i, j, q) * mu_ + m + 1;
  }
  int p(int m, int mp) const { return base_p_ + m * mu_ + mp + 1; }
  int a(int i, int m) const { return base_a_ + i * mu_ + m + 1; }
  int b(int i, int j, int q, int m) const {
    return base_b_ + slot(i, j, q) * mu_ + m + 1;
  }
  int r(int i, int j, int m, int len) const {
    return base_r_ + (((i * nu_ + j) * mu_ + m) * nu_) + (len - 1) + 1;
  }
  int d(int i, int j, int q) const { return base_d_ + slot(i, j, q) + 1; }
  int rp(int i, int j) const { return base_rp_ + i * nu_ + j + 1; }

  int num_named() const { return num_named_; }
  int num_nodes() const { return nu_; }
  int num_molecules() const { return mu_; }
  int max_parallel() const { return pi_; }

  // Human-readable name for a named variable, e.g. "el[0][1][0][3]".
  std::string name(int var) const;

private:
  int slot(int i, int j, int q) const { return (i * nu_ + j) * pi_ + q; }

  int nu_, mu_, pi_;
  int base_n_, base_e_, base_el_, base_p_, base_a_, base_b_, base_r_,
      base_d_, base_rp_;
  int num_named_;
};

}  // namespace vts
