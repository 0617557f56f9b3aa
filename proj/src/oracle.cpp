#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "vts/verifier.hpp"

// exhaustive reference search. molecules decompose the structure: each
// molecule independently picks a placement (a digraph over its support
// with every arc on a cycle, plus slot choices), which bakes the
// endpoint and return-path constraints in by construction. pairing and
// node activity are enumerated outright; edge activity is then decided
// in closed form per rule (activity sets are maximal: shrinking one only
// loses fusion partners, so the maximal choice is feasible iff any is).

namespace vts {

namespace {

struct Placement {
  // slot bitmask per ordered node pair (i*nu+j); 0 = molecule absent
  std::array<std::uint8_t, 9> arc_slots{};
};

std::vector<Placement> stable_placements(int nu, int pi, int supp) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j)
      if (i != j && (supp >> i & 1) && (supp >> j & 1))
        arcs.emplace_back(i, j);
  const int na = static_cast<int>(arcs.size());
  const int slot_top = (1 << pi) - 1;
  std::vector<Placement> out;
  for (int dg = 0; dg < (1 << na); ++dg) {
    bool reach[3][3] = {};
    for (int i = 0; i < nu; ++i) reach[i][i] = true;
    for (int a = 0; a < na; ++a)
      if (dg >> a & 1) reach[arcs[a].first][arcs[a].second] = true;
    for (int k = 0; k < nu; ++k)
      for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nu; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    bool stable = true;
    for (int a = 0; a < na && stable; ++a)
      if (dg >> a & 1) stable = reach[arcs[a].second][arcs[a].first];
    if (!stable) continue;
    std::vector<int> chosen;
    for (int a = 0; a < na; ++a)
      if (dg >> a & 1) chosen.push_back(a);
    if (chosen.empty()) {
      out.emplace_back();
      continue;
    }
    std::vector<int> sm(chosen.size(), 1);
    for (;;) {
      Placement p;
      for (std::size_t k = 0; k < chosen.size(); ++k)
        p.arc_slots[arcs[chosen[k]].first * nu + arcs[chosen[k]].second] =
            static_cast<std::uint8_t>(sm[k]);
      out.push_back(p);
      int pos = static_cast<int>(chosen.size()) - 1;
      while (pos >= 0 && sm[pos] == slot_top) {
        sm[pos] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++sm[pos];
    }
  }
  return out;
}

}  // namespace

std::optional<Vts> brute_force_search(const SearchConfig& cfg) {
  cfg.validate();
  const int nu = cfg.num_nodes;
  const int mu = cfg.num_molecules;
  const int pi = cfg.max_parallel;
  const bool in_bounds =
      mu <= 4 && ((nu <= 3 && pi == 1) || (nu == 2 && pi <= 2));
  if (!in_bounds)
    throw Error("reference search supports nodes<=3 with one slot, or "
                "nodes==2 with two slots, molecules<=4");
  const MolSet full = (MolSet{1} << mu) - 1;

  std::vector<std::vector<Placement>> place(1 << nu);
  for (int s = 0; s < (1 << nu); ++s) place[s] = stable_placements(nu, pi, s);

  std::vector<std::pair<int, int>> cross;
  for (int m = 0; m < mu; ++m)
    for (int mp = 0; mp < mu; ++mp)
      if (!same_class(m, mp, mu)) cross.emplace_back(m, mp);

  std::optional<Vts> found;

  std::vector<MolSet> labels(nu);
  const std::uint64_t lab_total = std::uint64_t{1} << (nu * mu);
  for (std::uint64_t code = 0; code < lab_total && !found; ++code) {
    for (int i = 0; i < nu; ++i) labels[i] = (code >> (i * mu)) & full;
    std::array<int, 4> supp{};
    for (int m = 0; m < mu; ++m)
      for (int i = 0; i < nu; ++i)
        if (has(labels[i], m)) supp[m] |= 1 << i;

    std::vector<std::size_t> pick(mu, 0);
    bool more = true;
    while (more && !found) {
      MolSet slot_set[3][3][2] = {};
      for (int m = 0; m < mu; ++m) {
        const Placement& p = place[supp[m]][pick[m]];
        for (int i = 0; i < nu; ++i)
          for (int j = 0; j < nu; ++j) {
            const std::uint8_t sm = p.arc_slots[i * nu + j];
            for (int q = 0; q < pi; ++q)
              if (sm >> q & 1) slot_set[i][j][q] = with(slot_set[i][j][q], m);
          }
      }

      bool reach[3][3] = {};
      for (int i = 0; i < nu; ++i) reach[i][i] = true;
      for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nu; ++j)
          for (int q = 0; q < pi; ++q)
            if (slot_set[i][j][q]) reach[i][j] = reach[j][i] = true;
      for (int k = 0; k < nu; ++k)
        for (int i = 0; i < nu; ++i)
          for (int j = 0; j < nu; ++j)
            if (reach[i][k] && reach[k][j]) reach[i][j] = true;
      bool connected = true;
      for (int i = 1; i < nu; ++i) connected = connected && reach[0][i];

      if (connected) {
        const std::uint32_t p_total = 1u << cross.size();
        for (std::uint32_t pbits = 0; pbits < p_total && !found; ++pbits) {
          std::array<MolSet, 4> partners{};
          for (std::size_t k = 0; k < cross.size(); ++k)
            if (pbits >> k & 1)
              partners[cross[k].first] =
                  with(partners[cross[k].first], cross[k].second);

          auto try_activity = [&](const std::vector<MolSet>& act) -> bool {
            // per destination: molecules safe from foreign fusion, and
            // molecules with an active fusion partner there
            std::array<MolSet, 3> allowed{}, hit{};
            for (int j = 0; j < nu; ++j) {
              allowed[j] = full;
              for (int m = 0; m < mu; ++m) {
                bool blocked = false;
                for (int j2 = 0; j2 < nu && !blocked; ++j2)
                  if (j2 != j && (partners[m] & act[j2]) != 0) blocked = true;
                if (blocked) allowed[j] &= ~(MolSet{1} << m);
                if ((partners[m] & act[j]) != 0) hit[j] = with(hit[j], m);
              }
            }

            MolSet act_set[3][3][2] = {};
            const EdgeRule rule = edge_rule_of(cfg.variant);
            if (rule == EdgeRule::BooleanFn) {
              std::map<MolSet, MolSet> key_allowed;
              for (int i = 0; i < nu; ++i)
                for (int j = 0; j < nu; ++j)
                  for (int q = 0; q < pi; ++q)
                    if (slot_set[i][j][q]) {
                      auto [it, fresh] = key_allowed.try_emplace(
                          slot_set[i][j][q], allowed[j]);
                      if (!fresh) it->second &= allowed[j];
                    }
              for (int i = 0; i < nu; ++i)
                for (int j = 0; j < nu; ++j)
                  for (int q = 0; q < pi; ++q) {
                    const MolSet s = slot_set[i][j][q];
                    if (!s) continue;
                    const MolSet b = s & key_allowed[s];
                    if ((b & hit[j]) == 0) return false;
                    act_set[i][j][q] = b;
                  }
            } else {
              for (int i = 0; i < nu; ++i)
                for (int j = 0; j < nu; ++j)
                  for (int q = 0; q < pi; ++q) {
                    const MolSet s = slot_set[i][j][q];
                    if (!s) continue;
                    MolSet b;
                    if (rule == EdgeRule::AllActive) {
                      if ((s & ~allowed[j]) != 0) return false;
                      b = s;
                    } else {
                      MolSet forced = 0;
                      for (int m = 0; m < mu; ++m) {
                        const bool lhs =
                            !has(s, m) || (partners[m] & ~s) == 0;
                        if (lhs) forced |= (MolSet{1} << m) | partners[m];
                      }
                      b = s & ~forced & allowed[j];
                      for (int m = 0; m < mu; ++m) {
                        const bool lhs =
                            !has(s, m) || (partners[m] & ~s) == 0;
                        const bool rhs =
                            !has(b, m) && (partners[m] & b) == 0;
                        if (lhs != rhs) return false;
                      }
                    }
                    if ((b & hit[j]) == 0) return false;
                    act_set[i][j][q] = b;
                  }
            }

            Vts g;
            g.num_nodes = nu;
            g.num_molecules = mu;
            g.node_labels = labels;
            g.node_activity = act;
            for (int i = 0; i < nu; ++i)
              for (int j = 0; j < nu; ++j)
                for (int q = 0; q < pi; ++q)
                  if (slot_set[i][j][q])
                    g.edges.push_back(
                        Edge{i, j, q, slot_set[i][j][q], act_set[i][j][q]});
            g.pairing.assign(mu, 0);
            for (int m = 0; m < mu; ++m) g.pairing[m] = partners[m];

            if (!check_well_structured(g, pi).ok ||
                !check_stability(g).ok || !check_well_fused(g).ok ||
                !check_activity_rules(g, cfg.variant).ok ||
                !check_connected(g).ok)
              throw Error("internal: reference search built a bad system");

            if (cfg.connectivity_query) {
              if (static_cast<int>(g.edges.size()) < cfg.delta) return false;
              const int md = min_disconnect(g, cfg.drop_semantics);
              if (md < 0 || md > cfg.delta) return false;
            }
            found = std::move(g);
            return true;
          };

          if (node_rule_of(cfg.variant) == NodeRule::AllActive) {
            try_activity(labels);
          } else {
            std::map<MolSet, std::vector<int>> groups;
            for (int i = 0; i < nu; ++i) groups[labels[i]].push_back(i);
            std::vector<MolSet> keys;
            for (const auto& [k, v] : groups) keys.push_back(k);
            std::vector<MolSet> act(nu);
            std::function<bool(std::size_t)> rec =
                [&](std::size_t k) -> bool {
              if (k == keys.size()) return try_activity(act);
              MolSet sub = keys[k];
              for (;;) {
                for (int i : groups[keys[k]]) act[i] = sub;
                if (rec(k + 1)) return true;
                if (sub == 0) break;
                sub = (sub - 1) & keys[k];
              }
              return false;
            };
            rec(0);
          }
        }
      }

      int m = 0;
      while (m < mu) {
        if (++pick[m] < place[supp[m]].size()) break;
        pick[m] = 0;
        ++m;
      }
      if (m == mu) more = false;
    }
  }
  return found;
}

}  // namespace vts
