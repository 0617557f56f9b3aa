#include "vts/decoder.hpp"

#include <string>

namespace vts {

namespace {

std::string slot_str(int i, int j, int q) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," +
         std::to_string(q) + ")";
}

}  // namespace

Witness decode_witness(const Encoding& enc, const std::vector<bool>& model,
                       const SearchConfig& cfg) {
  const VarMap& vm = enc.vm;
  const int nu = vm.num_nodes();
  const int mu = vm.num_molecules();
  const int pi = vm.max_parallel();
  if (static_cast<int>(model.size()) < vm.num_named() + 1)
    throw Error("internal: assignment smaller than the variable map");

  Witness w;
  Vts& g = w.vts;
  g.num_nodes = nu;
  g.num_molecules = mu;
  g.node_labels.assign(nu, 0);
  g.node_activity.assign(nu, 0);

  for (int i = 0; i < nu; ++i)
    for (int m = 0; m < mu; ++m) {
      if (model[vm.n(i, m)]) g.node_labels[i] = with(g.node_labels[i], m);
      if (model[vm.a(i, m)]) {
        if (!model[vm.n(i, m)])
          throw Error("internal: node " + std::to_string(i) +
                      " activates molecule " + std::to_string(m) +
                      " it does not hold");
        g.node_activity[i] = with(g.node_activity[i], m);
      }
    }

  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j)
      for (int q = 0; q < pi; ++q) {
        const bool exists = model[vm.e(i, j, q)];
        MolSet labels = 0, active = 0;
        for (int m = 0; m < mu; ++m) {
          if (model[vm.el(i, j, q, m)]) labels = with(labels, m);
          if (model[vm.b(i, j, q, m)]) active = with(active, m);
        }
        if (!exists) {
          if (labels != 0)
            throw Error("internal: molecules on absent edge " +
                        slot_str(i, j, q));
          if (active != 0)
            throw Error("internal: activity on absent edge " +
                        slot_str(i, j, q));
          continue;
        }
        if (labels == 0)
          throw Error("internal: edge " + slot_str(i, j, q) +
                      " carries no molecule");
        if ((active & labels) != active)
          throw Error("internal: edge " + slot_str(i, j, q) +
                      " activates a molecule it does not carry");
        g.edges.push_back(Edge{i, j, q, labels, active});
      }

  g.pairing.assign(mu, 0);
  for (int m = 0; m < mu; ++m)
    for (int mp = 0; mp < mu; ++mp)
      if (model[vm.p(m, mp)]) g.pairing[m] = with(g.pairing[m], mp);

  sort_edges(g);
  check_invariants(g);

  // function tables; collisions are only an error where the variant
  // actually promises a function of the molecule set.
  const bool node_fn = node_rule_of(cfg.variant) == NodeRule::BooleanFn;
  const bool edge_fn = edge_rule_of(cfg.variant) == EdgeRule::BooleanFn;
  for (int i = 0; i < nu; ++i) {
    auto it = w.node_table.rows.find(g.node_labels[i]);
    if (it == w.node_table.rows.end())
      w.node_table.rows.emplace(g.node_labels[i], g.node_activity[i]);
    else if (node_fn && it->second != g.node_activity[i])
      throw Error("internal: node " + std::to_string(i) +
                  " breaks the node activity function");
  }
  for (const Edge& e : g.edges) {
    auto it = w.edge_table.rows.find(e.labels);
    if (it == w.edge_table.rows.end())
      w.edge_table.rows.emplace(e.labels, e.active);
    else if (edge_fn && it->second != e.active)
      throw Error("internal: edge " + slot_str(e.src, e.dst, e.slot) +
                  " breaks the edge activity function");
  }

  w.reach.assign(nu, std::vector<MolSet>(nu, 0));
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j)
      for (int m = 0; m < mu; ++m)
        if (model[vm.r(i, j, m, nu)]) w.reach[i][j] = with(w.reach[i][j], m);

  if (cfg.connectivity_query) {
    for (int i = 0; i < nu; ++i)
      for (int j = 0; j < nu; ++j)
        for (int q = 0; q < pi; ++q)
          if (model[vm.d(i, j, q)]) {
            if (!model[vm.e(i, j, q)])
              throw Error("internal: dropped edge " + slot_str(i, j, q) +
                          " does not exist");
            w.dropped.emplace_back(i, j, q);
          }
    if (static_cast<int>(w.dropped.size()) != cfg.delta)
      throw Error("internal: drop count " +
                  std::to_string(w.dropped.size()) + " does not match " +
                  std::to_string(cfg.delta));
    w.residual_reach.assign(nu, std::vector<bool>(nu, false));
    for (int i = 0; i < nu; ++i)
      for (int j = 0; j < nu; ++j)
        if (i != j) w.residual_reach[i][j] = model[vm.rp(i, j)];
    for (int i = 0; i < nu && !w.disconnected_pair; ++i)
      for (int j = i + 1; j < nu; ++j)
        if (!w.residual_reach[i][j] && !w.residual_reach[j][i]) {
          w.disconnected_pair = std::make_pair(i, j);
          break;
        }
    if (!w.disconnected_pair)
      throw Error("internal: no disconnected pair in the assignment");
  }

  return w;
}

}  // namespace vts
