#include "vts/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace vts {

namespace {

std::string edge_str(int i, int j, int q) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," +
         std::to_string(q) + ")";
}

std::string edge_str(const Edge& e) {
  return edge_str(e.src, e.dst, e.slot);
}

// reachability over an adjacency matrix, reach[i][i] = true.
std::vector<std::vector<bool>> closure(
    const std::vector<std::vector<bool>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int s = 0; s < n; ++s) {
    std::vector<int> stack{s};
    reach[s][s] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (adj[u][v] && !reach[s][v]) {
          reach[s][v] = true;
          stack.push_back(v);
        }
    }
  }
  return reach;
}

}  // namespace

CheckResult check_well_structured(const Vts& g, int max_parallel) {
  CheckResult r;
  const int nu = g.num_nodes;
  const int mu = g.num_molecules;
  if (nu < 2) r.fail("fewer than two nodes");
  if (mu < 2 || mu > max_molecules) r.fail("molecule count out of range");
  if (static_cast<int>(g.node_labels.size()) != nu ||
      static_cast<int>(g.node_activity.size()) != nu) {
    r.fail("node table sizes do not match the node count");
    return r;
  }
  const MolSet allowed = mu >= 64 ? ~MolSet{0} : ((MolSet{1} << mu) - 1);
  for (int i = 0; i < nu; ++i) {
    if ((g.node_labels[i] & ~allowed) != 0)
      r.fail("node " + std::to_string(i) + " holds an out-of-range molecule");
    if ((g.node_activity[i] & ~g.node_labels[i]) != 0)
      r.fail("node " + std::to_string(i) +
             " activates a molecule it does not hold");
  }
  std::set<std::tuple<int, int, int>> slots;
  for (const Edge& e : g.edges) {
    if (e.src < 0 || e.src >= nu || e.dst < 0 || e.dst >= nu ||
        e.slot < 0 || e.slot >= max_parallel) {
      r.fail("edge " + edge_str(e) + " is out of range");
      continue;
    }
    if (!slots.insert({e.src, e.dst, e.slot}).second)
      r.fail("duplicate edge slot " + edge_str(e));
    if (e.src == e.dst) r.fail("self loop at " + edge_str(e));
    if (e.labels == 0) r.fail("edge " + edge_str(e) + " carries no molecule");
    if ((e.labels & ~allowed) != 0)
      r.fail("edge " + edge_str(e) + " carries an out-of-range molecule");
    if ((e.active & ~e.labels) != 0)
      r.fail("edge " + edge_str(e) +
             " activates a molecule it does not carry");
    if (e.src >= 0 && e.src < nu && (e.labels & ~g.node_labels[e.src]) != 0)
      r.fail("edge " + edge_str(e) + " carries a molecule its source lacks");
    if (e.dst >= 0 && e.dst < nu && (e.labels & ~g.node_labels[e.dst]) != 0)
      r.fail("edge " + edge_str(e) +
             " carries a molecule its destination lacks");
  }
  if (static_cast<int>(g.pairing.size()) != mu) {
    r.fail("pairing table size does not match the molecule count");
    return r;
  }
  for (int m = 0; m < mu; ++m)
    for (int mp = 0; mp < max_molecules; ++mp)
      if (has(g.pairing[m], mp)) {
        if (mp >= mu) {
          r.fail("pairing row " + std::to_string(m) +
                 " names an out-of-range molecule");
          break;
        }
        if (same_class(m, mp, mu))
          r.fail("pairing (" + std::to_string(m) + "," + std::to_string(mp) +
                 ") stays within one molecule class");
      }
  return r;
}

CheckResult check_stability(const Vts& g) {
  CheckResult r;
  const int nu = g.num_nodes;
  for (int m = 0; m < g.num_molecules; ++m) {
    std::vector<std::vector<bool>> adj(nu, std::vector<bool>(nu, false));
    for (const Edge& e : g.edges)
      if (has(e.labels, m)) adj[e.src][e.dst] = true;
    const auto reach = closure(adj);
    for (const Edge& e : g.edges)
      if (has(e.labels, m) && !reach[e.dst][e.src])
        r.fail("molecule " + std::to_string(m) + " moved along " +
               edge_str(e) + " cannot return to node " +
               std::to_string(e.src));
  }
  return r;
}

CheckResult check_well_fused(const Vts& g) {
  CheckResult r;
  for (const Edge& e : g.edges) {
    bool fuses = false;
    for (int m = 0; m < g.num_molecules && !fuses; ++m)
      if (has(e.active, m))
        for (int mp = 0; mp < g.num_molecules; ++mp)
          if (has(g.node_activity[e.dst], mp) && g.pairs(m, mp)) {
            fuses = true;
            break;
          }
    if (!fuses)
      r.fail("edge " + edge_str(e) +
             " cannot fuse with its destination node");
    for (int j = 0; j < g.num_nodes; ++j) {
      if (j == e.dst) continue;
      for (int m = 0; m < g.num_molecules; ++m) {
        if (!has(e.active, m)) continue;
        for (int mp = 0; mp < g.num_molecules; ++mp)
          if (has(g.node_activity[j], mp) && g.pairs(m, mp))
            r.fail("edge " + edge_str(e) + " would also fuse with node " +
                   std::to_string(j));
      }
    }
  }
  return r;
}

CheckResult check_activity_rules(const Vts& g, Variant variant) {
  CheckResult r;
  const int mu = g.num_molecules;
  switch (node_rule_of(variant)) {
    case NodeRule::AllActive:
      for (int i = 0; i < g.num_nodes; ++i)
        if (g.node_activity[i] != g.node_labels[i])
          r.fail("node " + std::to_string(i) +
                 " must activate exactly its molecules");
      break;
    case NodeRule::BooleanFn: {
      std::map<MolSet, std::pair<int, MolSet>> first;
      for (int i = 0; i < g.num_nodes; ++i) {
        auto [it, fresh] = first.try_emplace(
            g.node_labels[i], std::make_pair(i, g.node_activity[i]));
        if (!fresh && it->second.second != g.node_activity[i])
          r.fail("nodes " + std::to_string(it->second.first) + " and " +
                 std::to_string(i) +
                 " hold the same molecules but differ in activity");
      }
      break;
    }
  }
  switch (edge_rule_of(variant)) {
    case EdgeRule::AllActive:
      for (const Edge& e : g.edges)
        if (e.active != e.labels)
          r.fail("edge " + edge_str(e) +
                 " must activate exactly its molecules");
      break;
    case EdgeRule::BooleanFn: {
      std::map<MolSet, std::pair<const Edge*, MolSet>> first;
      for (const Edge& e : g.edges) {
        auto [it, fresh] =
            first.try_emplace(e.labels, std::make_pair(&e, e.active));
        if (!fresh && it->second.second != e.active)
          r.fail("edges " + edge_str(*it->second.first) + " and " +
                 edge_str(e) +
                 " carry the same molecules but differ in activity");
      }
      break;
    }
    case EdgeRule::PairingInhibition:
      for (const Edge& e : g.edges)
        for (int m = 0; m < mu; ++m) {
          bool lhs = true;
          if (has(e.labels, m))
            for (int mp = 0; mp < mu && lhs; ++mp)
              if (mp != m && g.pairs(m, mp) && !has(e.labels, mp)) lhs = false;
          bool rhs = !has(e.active, m);
          for (int mp = 0; mp < mu && rhs; ++mp)
            if (mp != m && g.pairs(m, mp) && has(e.active, mp)) rhs = false;
          if (lhs != rhs)
            r.fail("edge " + edge_str(e) + " molecule " + std::to_string(m) +
                   " breaks the inhibition rule");
        }
      break;
  }
  return r;
}

CheckResult check_connected(const Vts& g) {
  CheckResult r;
  const int nu = g.num_nodes;
  std::vector<std::vector<bool>> adj(nu, std::vector<bool>(nu, false));
  for (const Edge& e : g.edges) {
    adj[e.src][e.dst] = true;
    adj[e.dst][e.src] = true;
  }
  const auto reach = closure(adj);
  for (int i = 1; i < nu; ++i)
    if (!reach[0][i])
      r.fail("node " + std::to_string(i) +
             " is not connected to node 0 in the base graph");
  return r;
}

CheckResult check_drop_disconnects(
    const Vts& g, const std::vector<std::tuple<int, int, int>>& dropped,
    DropSemantics semantics,
    const std::optional<std::pair<int, int>>& claimed_pair) {
  CheckResult r;
  std::set<std::tuple<int, int, int>> existing;
  for (const Edge& e : g.edges) existing.insert({e.src, e.dst, e.slot});
  std::set<std::tuple<int, int, int>> drop;
  for (const auto& t : dropped) {
    if (!existing.count(t))
      r.fail("dropped edge " +
             edge_str(std::get<0>(t), std::get<1>(t), std::get<2>(t)) +
             " does not exist");
    if (!drop.insert(t).second)
      r.fail("edge " + edge_str(std::get<0>(t), std::get<1>(t),
                                std::get<2>(t)) +
             " is dropped twice");
  }
  if (!r.ok) return r;

  const int nu = g.num_nodes;
  std::vector<std::vector<bool>> adj(nu, std::vector<bool>(nu, false));
  for (const Edge& e : g.edges) {
    if (drop.count({e.src, e.dst, e.slot})) continue;
    adj[e.src][e.dst] = true;
    if (semantics == DropSemantics::Undirected) adj[e.dst][e.src] = true;
  }
  const auto reach = closure(adj);
  bool any = false;
  for (int i = 0; i < nu && !any; ++i)
    for (int j = i + 1; j < nu; ++j)
      if (!reach[i][j] && !reach[j][i]) {
        any = true;
        break;
      }
  if (!any) r.fail("the drop leaves every node pair reachable");
  if (claimed_pair) {
    const auto [i, j] = *claimed_pair;
    if (i < 0 || i >= nu || j < 0 || j >= nu || i == j)
      r.fail("claimed disconnected pair is out of range");
    else if (reach[i][j] || reach[j][i])
      r.fail("claimed pair (" + std::to_string(i) + "," + std::to_string(j) +
             ") is still reachable after the drop");
  }
  return r;
}

int edge_connectivity(const Vts& g) {
  const int nu = g.num_nodes;
  std::vector<std::vector<int>> cap(nu, std::vector<int>(nu, 0));
  for (const Edge& e : g.edges) {
    ++cap[e.src][e.dst];
    ++cap[e.dst][e.src];
  }
  int best = -1;
  for (int t = 1; t < nu; ++t) {
    auto res = cap;
    int flow = 0;
    for (;;) {
      // shortest augmenting path 0 -> t
      std::vector<int> prev(nu, -1);
      std::vector<int> queue{0};
      prev[0] = 0;
      for (std::size_t h = 0; h < queue.size() && prev[t] < 0; ++h) {
        const int u = queue[h];
        for (int v = 0; v < nu; ++v)
          if (prev[v] < 0 && res[u][v] > 0) {
            prev[v] = u;
            queue.push_back(v);
          }
      }
      if (prev[t] < 0) break;
      int bottleneck = INT32_MAX;
      for (int v = t; v != 0; v = prev[v])
        bottleneck = std::min(bottleneck, res[prev[v]][v]);
      for (int v = t; v != 0; v = prev[v]) {
        res[prev[v]][v] -= bottleneck;
        res[v][prev[v]] += bottleneck;
      }
      flow += bottleneck;
    }
    if (best < 0 || flow < best) best = flow;
  }
  return best < 0 ? 0 : best;
}

VerifierReport verify_witness(
    const Vts& g, const SearchConfig& cfg,
    const std::vector<std::tuple<int, int, int>>& dropped,
    const std::optional<std::pair<int, int>>& claimed_pair) {
  VerifierReport rep;
  CheckResult all;
  if (g.num_nodes != cfg.num_nodes)
    all.fail("node count does not match the requested configuration");
  if (g.num_molecules != cfg.num_molecules)
    all.fail("molecule count does not match the requested configuration");
  all.merge(check_well_structured(g, cfg.max_parallel));
  all.merge(check_stability(g));
  all.merge(check_well_fused(g));
  all.merge(check_activity_rules(g, cfg.variant));
  all.merge(check_connected(g));
  if (cfg.connectivity_query) {
    if (static_cast<int>(dropped.size()) != cfg.delta)
      all.fail("dropped " + std::to_string(dropped.size()) +
               " edges instead of " + std::to_string(cfg.delta));
    all.merge(
        check_drop_disconnects(g, dropped, cfg.drop_semantics, claimed_pair));
    if (cfg.drop_semantics == DropSemantics::Undirected) {
      const int lambda = edge_connectivity(g);
      if (lambda > cfg.delta)
        all.fail("edge connectivity " + std::to_string(lambda) +
                 " exceeds the claimed drop count " +
                 std::to_string(cfg.delta));
    }
  }
  rep.pass = all.ok;
  rep.failures = std::move(all.failures);
  return rep;
}

int min_disconnect(const Vts& g, DropSemantics semantics) {
  const int ne = static_cast<int>(g.edges.size());
  if (ne > 20) throw Error("too many edges for subset enumeration");
  int best = -1;
  for (int k = 1; k <= ne; ++k) {
    // subsets of size k
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      std::vector<std::tuple<int, int, int>> drop;
      drop.reserve(k);
      for (int i : idx)
        drop.emplace_back(g.edges[i].src, g.edges[i].dst, g.edges[i].slot);
      if (check_drop_disconnects(g, drop, semantics, std::nullopt).ok)
        return k;
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == ne - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return best;
}

}  // namespace vts
