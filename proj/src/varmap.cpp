#include "vts/varmap.hpp"

#include <cstdint>
#include <sstream>
#include <tuple>

namespace vts {

VarMap::VarMap(int num_nodes, int num_molecules, int max_parallel)
    : nu_(num_nodes), mu_(num_molecules), pi_(max_parallel) {
  if (nu_ < 1 || mu_ < 1 || pi_ < 1)
    throw Error("variable map: sizes must be positive");
  std::int64_t nu = nu_, mu = mu_, pi = pi_;
  std::int64_t slots = nu * nu * pi;
  std::int64_t total = nu * mu        // n
                       + slots        // e
                       + slots * mu   // el
                       + mu * mu      // p
                       + nu * mu      // a
                       + slots * mu   // b
                       + nu * nu * mu * nu  // r
                       + slots        // d
                       + nu * nu;     // rp
  if (total > (1 << 30))
    throw Error("variable map: configuration too large for the index space");

  int at = 0;
  base_n_ = at; at += nu_ * mu_;
  base_e_ = at; at += (int)slots;
  base_el_ = at; at += (int)(slots * mu);
  base_p_ = at; at += mu_ * mu_;
  base_a_ = at; at += nu_ * mu_;
  base_b_ = at; at += (int)(slots * mu);
  base_r_ = at; at += nu_ * nu_ * mu_ * nu_;
  base_d_ = at; at += (int)slots;
  base_rp_ = at; at += nu_ * nu_;
  num_named_ = at;
}

std::string VarMap::name(int var) const {
  int idx = var - 1;
  std::ostringstream os;
  auto slot3 = [&](int off) {
    int s = off / pi_, q = off % pi_;
    return std::tuple<int, int, int>{s / nu_, s % nu_, q};
  };
  if (idx < base_e_) {
    int off = idx - base_n_;
    os << "n[" << off / mu_ << "][" << off % mu_ << "]";
  } else if (idx < base_el_) {
    auto [i, j, q] = slot3(idx - base_e_);
    os << "e[" << i << "][" << j << "][" << q << "]";
  } else if (idx < base_p_) {
    int off = idx - base_el_;
    auto [i, j, q] = slot3(off / mu_);
    os << "el[" << i << "][" << j << "][" << q << "][" << off % mu_ << "]";
  } else if (idx < base_a_) {
    int off = idx - base_p_;
    os << "p[" << off / mu_ << "][" << off % mu_ << "]";
  } else if (idx < base_b_) {
    int off = idx - base_a_;
    os << "a[" << off / mu_ << "][" << off % mu_ << "]";
  } else if (idx < base_r_) {
    int off = idx - base_b_;
    auto [i, j, q] = slot3(off / mu_);
    os << "b[" << i << "][" << j << "][" << q << "][" << off % mu_ << "]";
  } else if (idx < base_d_) {
    int off = idx - base_r_;
    int len = off % nu_ + 1;
    off /= nu_;
    int m = off % mu_;
    off /= mu_;
    os << "r[" << off / nu_ << "][" << off % nu_ << "][" << m << "][" << len
       << "]";
  } else if (idx < base_rp_) {
    auto [i, j, q] = slot3(idx - base_d_);
    os << "d[" << i << "][" << j << "][" << q << "]";
  } else if (idx < num_named_) {
    int off = idx - base_rp_;
    os << "rp[" << off / nu_ << "][" << off % nu_ << "]";
  } else {
    os << "aux" << var;
  }
  return os.str();
}

}  // namespace vts
