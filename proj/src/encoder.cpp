#include "vts/encoder.hpp"

#include <algorithm>
#include <string>

namespace vts {

namespace {

// fresh or-aux v with the forward clause (v -> l1 | l2 | ...).
// callers use v positively, so the reverse direction is not needed.
Lit or_aux_fwd(CnfBuilder& b, const std::vector<Lit>& lits) {
  Lit v = b.aux(AuxDef::Kind::Or, lits);
  std::vector<Lit> cl;
  cl.reserve(lits.size() + 1);
  cl.push_back(-v);
  for (Lit l : lits) cl.push_back(l);
  b.add(cl);
  return v;
}

// x >=lex y: wherever the prefixes agree, x may not go 0 while y goes 1.
// the prefix-equal chain only needs its true direction.
void lex_ge(CnfBuilder& b, const std::vector<Lit>& x,
            const std::vector<Lit>& y) {
  Lit eq = 0;  // 0: empty prefix, constant true
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (eq == 0)
      b.binary(x[k], -y[k]);
    else
      b.ternary(-eq, x[k], -y[k]);
    if (k + 1 == x.size()) break;
    const Lit bit = b.equal_aux_rev(x[k], y[k]);
    eq = eq == 0 ? bit : b.and_aux_full({eq, bit});
  }
}

}  // namespace

VarMap allocate_variables(const SearchConfig& cfg) {
  cfg.validate();
  return VarMap(cfg.num_nodes, cfg.num_molecules, cfg.max_parallel);
}

void encode_structure(CnfBuilder& b, const VarMap& vm) {
  const int nu = vm.num_nodes();
  const int mu = vm.num_molecules();
  const int pi = vm.max_parallel();

  // V1: an edge carries at least one molecule, and a carried molecule
  // implies its edge slot is used.
  b.begin_family("V1");
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j)
      for (int q = 0; q < pi; ++q) {
        std::vector<Lit> cl;
        cl.push_back(-vm.e(i, j, q));
        for (int m = 0; m < mu; ++m) cl.push_back(vm.el(i, j, q, m));
        b.add(cl);
        for (int m = 0; m < mu; ++m)
          b.binary(-vm.el(i, j, q, m), vm.e(i, j, q));
      }

  // V2: active edge molecules are carried.
  b.begin_family("V2");
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j)
      for (int q = 0; q < pi; ++q)
        for (int m = 0; m < mu; ++m)
          b.binary(-vm.b(i, j, q, m), vm.el(i, j, q, m));

  // V3: active node molecules are present.
  b.begin_family("V3");
  for (int i = 0; i < nu; ++i)
    for (int m = 0; m < mu; ++m) b.binary(-vm.a(i, m), vm.n(i, m));

  // V4: an edge molecule is present at both endpoints.
  b.begin_family("V4");
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j)
      for (int q = 0; q < pi; ++q)
        for (int m = 0; m < mu; ++m) {
          b.binary(-vm.el(i, j, q, m), vm.n(i, m));
          b.binary(-vm.el(i, j, q, m), vm.n(j, m));
        }

  // V5: no self loops.
  b.begin_family("V5");
  for (int i = 0; i < nu; ++i)
    for (int q = 0; q < pi; ++q) b.unit(-vm.e(i, i, q));

  // V6: pairing only across the two molecule classes.
  b.begin_family("V6");
  for (int m = 0; m < mu; ++m)
    for (int mp = 0; mp < mu; ++mp)
      if (same_class(m, mp, mu)) b.unit(-vm.p(m, mp));

  // SB: parallel slots of a pair are interchangeable, so admit only
  // assignments that fill the lower slots first. sound: permuting slots
  // permutes e/el/b/d consistently and every family treats slots alike.
  if (pi > 1) {
    b.begin_family("SB");
    for (int i = 0; i < nu; ++i)
      for (int j = 0; j < nu; ++j)
        for (int q = 0; q + 1 < pi; ++q)
          b.binary(-vm.e(i, j, q + 1), vm.e(i, j, q));
  }

  // LX: nodes are interchangeable, as are molecules within a class, so
  // admit only presence matrices with rows and same-class columns in
  // descending lex order. sound jointly with SB: each constraint is a
  // prefix truncation of the lex-leader predicate for one transposition
  // under the fixed variable order, so the orbit's lex-greatest model
  // survives them all.
  b.begin_family("LX");
  for (int i = 0; i + 1 < nu; ++i) {
    std::vector<Lit> row, next;
    for (int m = 0; m < mu; ++m) {
      row.push_back(vm.n(i, m));
      next.push_back(vm.n(i + 1, m));
    }
    lex_ge(b, row, next);
  }
  for (int m = 0; m + 1 < mu; ++m) {
    if (!same_class(m, m + 1, mu)) continue;
    std::vector<Lit> col, next;
    for (int i = 0; i < nu; ++i) {
      col.push_back(vm.n(i, m));
      next.push_back(vm.n(i, m + 1));
    }
    lex_ge(b, col, next);
  }
}

void encode_fusion(CnfBuilder& b, const VarMap& vm) {
  const int nu = vm.num_nodes();
  const int mu = vm.num_molecules();
  const int pi = vm.max_parallel();

  // V7: every edge has an active molecule paired with an active molecule
  // of its destination node. self slots never exist, skip them.
  b.begin_family("V7");
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j) {
      if (i == j) continue;
      for (int q = 0; q < pi; ++q) {
        std::vector<Lit> cl;
        cl.push_back(-vm.e(i, j, q));
        for (int m = 0; m < mu; ++m)
          for (int mp = 0; mp < mu; ++mp) {
            Lit t = b.and_aux_fwd(
                {vm.b(i, j, q, m), vm.a(j, mp), vm.p(m, mp)});
            cl.push_back(t);
          }
        b.add(cl);
      }
    }

  // V8: no active edge molecule pairs with an active molecule of any
  // node other than the destination.
  b.begin_family("V8");
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j) {
      if (i == j) continue;
      for (int q = 0; q < pi; ++q)
        for (int m = 0; m < mu; ++m)
          for (int j2 = 0; j2 < nu; ++j2) {
            if (j2 == j) continue;
            for (int m2 = 0; m2 < mu; ++m2)
              b.ternary(-vm.b(i, j, q, m), -vm.a(j2, m2), -vm.p(m, m2));
          }
    }
}

namespace {

// congruence of an output bit family over sites with equal molecule
// vectors: if two sites carry the same set, their outputs agree.
// eq vars only occur negatively in the congruence clauses, so only the
// direction (inputs equal -> eq) is clause-encoded.
void encode_congruence(CnfBuilder& b, const VarMap& vm,
                       const std::vector<std::vector<Lit>>& site_in,
                       const std::vector<std::vector<Lit>>& site_out) {
  const int mu = vm.num_molecules();
  const int sites = static_cast<int>(site_in.size());
  for (int s = 0; s < sites; ++s)
    for (int s2 = s + 1; s2 < sites; ++s2) {
      std::vector<Lit> eqs(mu);
      for (int m = 0; m < mu; ++m)
        eqs[m] = b.equal_aux_rev(site_in[s][m], site_in[s2][m]);
      for (int m = 0; m < mu; ++m) {
        std::vector<Lit> cl;
        cl.reserve(mu + 2);
        for (int mm = 0; mm < mu; ++mm) cl.push_back(-eqs[mm]);
        cl.push_back(-site_out[s][m]);
        cl.push_back(site_out[s2][m]);
        b.add(cl);
        cl[mu] = site_out[s][m];
        cl[mu + 1] = -site_out[s2][m];
        b.add(cl);
      }
    }
}

}  // namespace

void encode_activity(CnfBuilder& b, const VarMap& vm, Variant variant) {
  const int nu = vm.num_nodes();
  const int mu = vm.num_molecules();
  const int pi = vm.max_parallel();

  switch (node_rule_of(variant)) {
    case NodeRule::AllActive:
      // Ann: every present node molecule is active.
      b.begin_family("Ann");
      for (int i = 0; i < nu; ++i)
        for (int m = 0; m < mu; ++m) {
          b.binary(-vm.n(i, m), vm.a(i, m));
          b.binary(vm.n(i, m), -vm.a(i, m));
        }
      break;
    case NodeRule::BooleanFn: {
      // Anb: node activity is a function of the node's molecule set.
      b.begin_family("Anb");
      std::vector<std::vector<Lit>> in(nu, std::vector<Lit>(mu));
      std::vector<std::vector<Lit>> out(nu, std::vector<Lit>(mu));
      for (int i = 0; i < nu; ++i)
        for (int m = 0; m < mu; ++m) {
          in[i][m] = vm.n(i, m);
          out[i][m] = vm.a(i, m);
        }
      encode_congruence(b, vm, in, out);
      break;
    }
  }

  switch (edge_rule_of(variant)) {
    case EdgeRule::AllActive:
      // Aen: every carried edge molecule is active.
      b.begin_family("Aen");
      for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nu; ++j)
          for (int q = 0; q < pi; ++q)
            for (int m = 0; m < mu; ++m) {
              b.binary(-vm.el(i, j, q, m), vm.b(i, j, q, m));
              b.binary(vm.el(i, j, q, m), -vm.b(i, j, q, m));
            }
      break;
    case EdgeRule::BooleanFn: {
      // Aeb: edge activity is a function of the carried molecule set.
      b.begin_family("Aeb");
      std::vector<std::vector<Lit>> in, out;
      for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nu; ++j) {
          if (i == j) continue;
          for (int q = 0; q < pi; ++q) {
            std::vector<Lit> vin(mu), vout(mu);
            for (int m = 0; m < mu; ++m) {
              vin[m] = vm.el(i, j, q, m);
              vout[m] = vm.b(i, j, q, m);
            }
            in.push_back(vin);
            out.push_back(vout);
          }
        }
      encode_congruence(b, vm, in, out);
      break;
    }
    case EdgeRule::PairingInhibition:
      // Aep: per edge and molecule m, "m is carried implies all its
      // pairing partners are carried too" holds exactly when m and all
      // its carried partners are inactive.
      b.begin_family("Aep");
      for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nu; ++j) {
          if (i == j) continue;
          for (int q = 0; q < pi; ++q)
            for (int m = 0; m < mu; ++m) {
              // u_mp: m pairs with mp and mp is missing from the edge
              // w_mp: m pairs with mp and mp is active on the edge
              std::vector<Lit> us, ws;
              for (int mp = 0; mp < mu; ++mp) {
                if (mp == m) continue;
                us.push_back(b.and_aux_full(
                    {vm.p(m, mp), -vm.el(i, j, q, mp)}));
                ws.push_back(
                    b.and_aux_full({vm.p(m, mp), vm.b(i, j, q, mp)}));
              }
              // lhs: m carried -> partners all carried
              std::vector<Lit> c1def;
              for (Lit u : us) c1def.push_back(-u);
              Lit c1 = b.aux(AuxDef::Kind::And, c1def);
              for (Lit u : us) b.binary(-c1, -u);
              std::vector<Lit> cl;
              cl.push_back(c1);
              for (Lit u : us) cl.push_back(u);
              b.add(cl);
              Lit lhs = b.aux(AuxDef::Kind::Or,
                              {-vm.el(i, j, q, m), c1});
              b.ternary(-lhs, -vm.el(i, j, q, m), c1);
              b.binary(lhs, vm.el(i, j, q, m));
              b.binary(lhs, -c1);
              // rhs: m inactive and all carried partners inactive
              std::vector<Lit> rdef;
              rdef.push_back(-vm.b(i, j, q, m));
              for (Lit w : ws) rdef.push_back(-w);
              Lit rhs = b.aux(AuxDef::Kind::And, rdef);
              b.binary(-rhs, -vm.b(i, j, q, m));
              for (Lit w : ws) b.binary(-rhs, -w);
              cl.clear();
              cl.push_back(rhs);
              cl.push_back(vm.b(i, j, q, m));
              for (Lit w : ws) cl.push_back(w);
              b.add(cl);
              b.binary(-lhs, rhs);
              b.binary(lhs, -rhs);
            }
        }
      break;
  }
}

void encode_stability(CnfBuilder& b, const VarMap& vm) {
  const int nu = vm.num_nodes();
  const int mu = vm.num_molecules();
  const int pi = vm.max_parallel();

  // R1: r[i][j][m][len] means molecule m can travel from i to j along
  // carried edges in at most len hops. em is the one-hop relation.
  b.begin_family("R1");
  std::vector<Lit> em(static_cast<std::size_t>(nu) * nu * mu, 0);
  auto em_at = [&](int i, int j, int m) -> Lit& {
    return em[(static_cast<std::size_t>(i) * nu + j) * mu + m];
  };
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j) {
      if (i == j) continue;
      for (int m = 0; m < mu; ++m) {
        std::vector<Lit> els;
        for (int q = 0; q < pi; ++q) els.push_back(vm.el(i, j, q, m));
        em_at(i, j, m) = or_aux_fwd(b, els);
      }
    }
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j)
      for (int m = 0; m < mu; ++m) {
        std::vector<Lit> base;
        base.push_back(-vm.r(i, j, m, 1));
        if (i != j)
          for (int q = 0; q < pi; ++q)
            base.push_back(vm.el(i, j, q, m));
        b.add(base);
        for (int len = 2; len <= nu; ++len) {
          std::vector<Lit> cl;
          cl.push_back(-vm.r(i, j, m, len));
          if (i != j)
            for (int q = 0; q < pi; ++q)
              cl.push_back(vm.el(i, j, q, m));
          for (int i2 = 0; i2 < nu; ++i2) {
            if (i2 == i) continue;
            Lit t = b.and_aux_fwd(
                {em_at(i, i2, m), vm.r(i2, j, m, len - 1)});
            cl.push_back(t);
          }
          b.add(cl);
        }
      }

  // R2: every carried molecule can flow back from the destination to
  // the source within nu hops.
  b.begin_family("R2");
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j) {
      if (i == j) continue;
      for (int q = 0; q < pi; ++q)
        for (int m = 0; m < mu; ++m)
          b.binary(-vm.el(i, j, q, m), vm.r(j, i, m, nu));
    }
}

void encode_connected(CnfBuilder& b, const VarMap& vm) {
  const int nu = vm.num_nodes();
  const int pi = vm.max_parallel();

  // BC: the base graph, edges taken undirected, is connected. level
  // variables cb[i][len] unroll a search from node 0. since every edge
  // sits on a directed cycle under R1/R2, this is equivalent to strong
  // connectivity of the directed base graph, and it rules out the empty
  // graph and isolated satellites.
  b.begin_family("BC");
  std::vector<Lit> ue(static_cast<std::size_t>(nu) * nu, 0);
  auto ue_at = [&](int i, int j) -> Lit& {
    return ue[static_cast<std::size_t>(i) * nu + j];
  };
  for (int i = 0; i < nu; ++i)
    for (int j = i + 1; j < nu; ++j) {
      std::vector<Lit> es;
      for (int q = 0; q < pi; ++q) {
        es.push_back(vm.e(i, j, q));
        es.push_back(vm.e(j, i, q));
      }
      ue_at(i, j) = or_aux_fwd(b, es);
    }
  std::vector<Lit> cb(static_cast<std::size_t>(nu) * nu, 0);
  auto cb_at = [&](int i, int len) -> Lit& {
    return cb[static_cast<std::size_t>(i) * nu + len];
  };
  for (int i = 0; i < nu; ++i) {
    if (i == 0) {
      cb_at(0, 0) = b.aux(AuxDef::Kind::And, {});
      b.unit(cb_at(0, 0));
    } else {
      cb_at(i, 0) = b.aux(AuxDef::Kind::Or, {});
      b.unit(-cb_at(i, 0));
    }
  }
  for (int len = 1; len < nu; ++len)
    for (int i = 0; i < nu; ++i) {
      std::vector<Lit> def;
      def.push_back(cb_at(i, len - 1));
      std::vector<Lit> cl;
      for (int j = 0; j < nu; ++j) {
        if (j == i) continue;
        Lit u = (i < j) ? ue_at(i, j) : ue_at(j, i);
        Lit t = b.and_aux_fwd({u, cb_at(j, len - 1)});
        def.push_back(t);
        cl.push_back(t);
      }
      cb_at(i, len) = b.aux(AuxDef::Kind::Or, def);
      cl.insert(cl.begin(), {-cb_at(i, len), cb_at(i, len - 1)});
      b.add(cl);
    }
  for (int i = 1; i < nu; ++i) b.unit(cb_at(i, nu - 1));
}

void encode_drop(CnfBuilder& b, const VarMap& vm, int delta,
                 DropSemantics semantics) {
  const int nu = vm.num_nodes();
  const int pi = vm.max_parallel();
  const int slots = nu * nu * pi;
  if (delta < 1 || delta > slots)
    throw Error("drop count must be between 1 and " +
                std::to_string(slots));

  // D1: only existing edges can be dropped.
  b.begin_family("D1");
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j)
      for (int q = 0; q < pi; ++q)
        b.binary(-vm.d(i, j, q), vm.e(i, j, q));

  // D2: exactly delta edges are dropped.
  b.begin_family("D2");
  std::vector<Lit> ds;
  ds.reserve(slots);
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j)
      for (int q = 0; q < pi; ++q) ds.push_back(vm.d(i, j, q));
  encode_exactly(b, ds, delta);

  // D3: rp upper-approximates reachability over surviving edges; a
  // surviving edge (or path) forces the rp bit.
  b.begin_family("D3");
  const bool undirected = semantics == DropSemantics::Undirected;
  std::vector<Lit> sv(static_cast<std::size_t>(nu) * nu * pi, 0);
  auto sv_at = [&](int i, int j, int q) -> Lit& {
    return sv[(static_cast<std::size_t>(i) * nu + j) * pi + q];
  };
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j) {
      if (i == j) continue;
      for (int q = 0; q < pi; ++q) {
        Lit v = b.aux(AuxDef::Kind::And, {vm.e(i, j, q), -vm.d(i, j, q)});
        b.ternary(-vm.e(i, j, q), vm.d(i, j, q), v);
        sv_at(i, j, q) = v;
      }
    }
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j) {
      if (i == j) continue;
      for (int q = 0; q < pi; ++q) {
        b.binary(-sv_at(i, j, q), vm.rp(i, j));
        if (undirected) b.binary(-sv_at(j, i, q), vm.rp(i, j));
      }
      for (int i2 = 0; i2 < nu; ++i2) {
        if (i2 == i) continue;
        for (int q = 0; q < pi; ++q) {
          b.ternary(-vm.rp(i2, j), -sv_at(i, i2, q), vm.rp(i, j));
          if (undirected)
            b.ternary(-vm.rp(i2, j), -sv_at(i2, i, q), vm.rp(i, j));
        }
      }
    }

  // D4: some ordered pair is disconnected in both directions.
  b.begin_family("D4");
  std::vector<Lit> cl;
  for (int i = 0; i < nu; ++i)
    for (int j = i + 1; j < nu; ++j) {
      Lit u = b.and_aux_fwd({-vm.rp(i, j), -vm.rp(j, i)});
      cl.push_back(u);
    }
  b.add(cl);
}

void encode_exactly(CnfBuilder& b, const std::vector<Lit>& lits, int c) {
  const int n = static_cast<int>(lits.size());
  if (c < 0 || c > n)
    throw Error("cardinality target out of range");
  if (c == 0) {
    for (Lit l : lits) b.unit(-l);
    return;
  }
  if (c == n) {
    for (Lit l : lits) b.unit(l);
    return;
  }
  // sequential counter. s[i][j] (1-based i, j<=min(i,c)) holds exactly
  // when at least j of the first i literals are true; fully defined in
  // both directions so assignments extend uniquely.
  std::vector<std::vector<Lit>> s(n + 1);
  s[0] = {};
  for (int i = 1; i <= n; ++i) {
    const Lit x = lits[i - 1];
    const int top = std::min(i, c);
    s[i].assign(top + 1, 0);
    for (int j = 1; j <= top; ++j) {
      const bool have_keep = j <= i - 1;       // s[i-1][j] exists
      const bool have_step = j - 1 >= 1;       // s[i-1][j-1] exists
      Lit v;
      if (have_keep && have_step)
        v = b.aux(AuxDef::Kind::OrAnd, {s[i - 1][j], x, s[i - 1][j - 1]});
      else if (have_keep)
        v = b.aux(AuxDef::Kind::Or, {s[i - 1][j], x});
      else if (have_step)
        v = b.aux(AuxDef::Kind::And, {x, s[i - 1][j - 1]});
      else
        v = b.aux(AuxDef::Kind::And, {x});
      s[i][j] = v;
      if (have_keep) b.binary(-s[i - 1][j], v);
      if (have_step)
        b.ternary(-x, -s[i - 1][j - 1], v);
      else
        b.binary(-x, v);
      if (have_keep) {
        b.ternary(-v, s[i - 1][j], x);
        if (have_step)
          b.ternary(-v, s[i - 1][j], s[i - 1][j - 1]);
      } else {
        b.binary(-v, x);
        if (have_step) b.binary(-v, s[i - 1][j - 1]);
      }
    }
  }
  b.unit(s[n][c]);
  for (int i = c + 1; i <= n; ++i) b.binary(-lits[i - 1], -s[i - 1][c]);
}

Encoding encode_problem(const SearchConfig& cfg) {
  cfg.validate();
  VarMap vm = allocate_variables(cfg);
  CnfBuilder b(vm.num_named());
  encode_structure(b, vm);
  encode_fusion(b, vm);
  encode_activity(b, vm, cfg.variant);
  encode_stability(b, vm);
  encode_connected(b, vm);
  if (cfg.connectivity_query)
    encode_drop(b, vm, cfg.delta, cfg.drop_semantics);
  Encoding enc{vm, b.take_cnf(), b.audit(), b.aux_defs()};
  return enc;
}

}  // namespace vts
