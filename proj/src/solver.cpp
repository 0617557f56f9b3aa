#include "vts/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>

namespace vts {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Sat: return "sat";
    case SolveStatus::Unsat: return "unsat";
    case SolveStatus::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

// internal literal: 2*var for positive, 2*var+1 for negative.
inline int neg(int l) { return l ^ 1; }
inline int lvar(int l) { return l >> 1; }

// truth values: 0 true, 1 false, >=2 unassigned. value(lit) is the
// variable value xored with the literal sign, so the undef states 2 and
// 3 coincide.
constexpr std::uint8_t kTrue = 0;
constexpr std::uint8_t kFalse = 1;
constexpr std::uint8_t kUndef = 2;

constexpr int kNoClause = -1;

struct Clause {
  std::vector<int> lits;
  float act = 0.0f;
  int lbd = 0;
  bool learnt = false;
  bool live = false;
};

struct Watch {
  int cref;
  int blocker;
};

// max-heap over variable activities with position tracking.
class VarOrder {
 public:
  explicit VarOrder(const std::vector<double>& act) : act_(act) {}

  bool contains(int v) const {
    return v < static_cast<int>(pos_.size()) && pos_[v] >= 0;
  }
  bool empty() const { return heap_.empty(); }
  int size() const { return static_cast<int>(heap_.size()); }
  int at(int i) const { return heap_[i]; }

  void insert(int v) {
    if (v >= static_cast<int>(pos_.size())) pos_.resize(v + 1, -1);
    if (pos_[v] >= 0) return;
    pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    up(pos_[v]);
  }

  void bumped(int v) {
    if (contains(v)) up(pos_[v]);
  }

  int pop() {
    int v = heap_[0];
    pos_[v] = -1;
    heap_[0] = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      pos_[heap_[0]] = 0;
      down(0);
    }
    return v;
  }

 private:
  bool before(int x, int y) const { return act_[x] > act_[y]; }

  void up(int i) {
    int v = heap_[i];
    while (i > 0) {
      int p = (i - 1) >> 1;
      if (!before(v, heap_[p])) break;
      heap_[i] = heap_[p];
      pos_[heap_[i]] = i;
      i = p;
    }
    heap_[i] = v;
    pos_[v] = i;
  }

  void down(int i) {
    int v = heap_[i];
    const int n = static_cast<int>(heap_.size());
    for (;;) {
      int c = 2 * i + 1;
      if (c >= n) break;
      if (c + 1 < n && before(heap_[c + 1], heap_[c])) ++c;
      if (!before(heap_[c], v)) break;
      heap_[i] = heap_[c];
      pos_[heap_[i]] = i;
      i = c;
    }
    heap_[i] = v;
    pos_[v] = i;
  }

  const std::vector<double>& act_;
  std::vector<int> heap_;
  std::vector<int> pos_;
};

class Cdcl {
 public:
  Cdcl(int num_vars, const SolverLimits& limits)
      : nvars_(num_vars),
        limits_(limits),
        assigns_(num_vars, kUndef),
        level_(num_vars, 0),
        reason_(num_vars, kNoClause),
        polarity_(num_vars, false),
        seen_(num_vars, 0),
        lbd_mark_(num_vars + 1, 0),
        var_act_(num_vars, 0.0),
        watches_(2 * static_cast<std::size_t>(num_vars)),
        order_(var_act_) {
    rng_ = limits.seed * 6364136223846793005ull + 1442695040888963407ull;
    for (int v = 0; v < num_vars; ++v) order_.insert(v);
    trail_.reserve(num_vars);
  }

  SolveStats stats;

  bool addClause(const std::vector<Lit>& ext) {
    if (!ok_) return false;
    std::vector<int> lits;
    lits.reserve(ext.size());
    for (Lit l : ext) {
      if (l == 0 || std::abs(l) > nvars_)
        throw Error("literal out of range in clause");
      lits.push_back(2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0));
    }
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<int> kept;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i + 1 < lits.size() && lits[i + 1] == neg(lits[i])) return true;
      if (value(lits[i]) == kTrue) return true;
      if (value(lits[i]) >= kUndef) kept.push_back(lits[i]);
    }
    if (kept.empty()) return ok_ = false;
    if (kept.size() == 1) {
      if (value(kept[0]) == kFalse) return ok_ = false;
      if (value(kept[0]) >= kUndef) enqueue(kept[0], kNoClause);
      return true;
    }
    int cref = alloc(std::move(kept), false);
    ++num_originals_;
    attach(cref);
    return true;
  }

  SolveStatus run() {
    if (!ok_) return SolveStatus::Unsat;
    if (propagate() != kNoClause) return SolveStatus::Unsat;
    start_ = Clock::now();
    std::uint64_t next_reduce = 2000;
    std::uint64_t reduce_step = 300;
    std::uint64_t last_restart_confl = 0;
    std::vector<int> learnt;
    for (;;) {
      int confl = propagate();
      if (confl != kNoClause) {
        ++stats.conflicts;
        if (decisionLevel() == 0) return SolveStatus::Unsat;

        // restart pacing: exponential moving averages of learnt clause
        // quality (lbd) and of the trail height; a burst of bad clauses
        // triggers a restart unless the trail is unusually deep, which
        // usually means the search is close to a model.
        int btlevel = 0;
        int lbd = 0;
        analyze(confl, learnt, btlevel, lbd);
        ema_fast_ += (lbd - ema_fast_) / 32.0;
        ema_slow_ += (lbd - ema_slow_) / 16384.0;
        ema_trail_ += (static_cast<double>(trail_.size()) - ema_trail_) / 512.0;
        backtrack(btlevel);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNoClause);
        } else {
          int cref = alloc(std::vector<int>(learnt), true);
          clauses_[cref].lbd = lbd;
          clauses_[cref].act = static_cast<float>(cla_inc_);
          learnts_.push_back(cref);
          attach(cref);
          enqueue(learnt[0], cref);
        }
        var_inc_ /= 0.95;
        cla_inc_ /= 0.999;

        if (stats.conflicts >= next_reduce) {
          reduceDB();
          next_reduce = stats.conflicts + 2000 + reduce_step * num_reduces_;
        }
        if ((stats.conflicts & 63) == 0 && timeUp())
          return SolveStatus::Unknown;
      } else {
        const bool quality_poor =
            stats.conflicts > last_restart_confl + 50 &&
            ema_fast_ > ema_slow_ * 1.15;
        if (quality_poor) {
          last_restart_confl = stats.conflicts;
          ema_fast_ = ema_slow_;
          const bool deep_trail =
              stats.conflicts > 5000 &&
              static_cast<double>(trail_.size()) > 1.4 * ema_trail_;
          if (!deep_trail) {
            // deep trails suggest a model is near, so those skip the restart
            backtrack(0);
            ++stats.restarts;
          }
          continue;
        }
        ++stats.decisions;
        if ((stats.decisions & 1023) == 0 && timeUp())
          return SolveStatus::Unknown;
        int v = pickBranchVar();
        if (v < 0) return SolveStatus::Sat;
        trail_lim_.push_back(static_cast<int>(trail_.size()));
        enqueue(2 * v + (polarity_[v] ? 0 : 1), kNoClause);
      }
    }
  }

  bool modelValue(int var1based) const {
    return assigns_[var1based - 1] == kTrue;
  }

 private:
  std::uint8_t value(int l) const {
    std::uint8_t a = assigns_[lvar(l)];
    return a >= kUndef ? a : static_cast<std::uint8_t>(a ^ (l & 1));
  }

  int decisionLevel() const { return static_cast<int>(trail_lim_.size()); }

  bool timeUp() {
    if (limits_.time_limit_seconds <= 0) return false;
    double secs = std::chrono::duration<double>(Clock::now() - start_).count();
    return secs > limits_.time_limit_seconds;
  }

  int alloc(std::vector<int> lits, bool learnt) {
    int cref;
    if (!free_.empty()) {
      cref = free_.back();
      free_.pop_back();
    } else {
      cref = static_cast<int>(clauses_.size());
      clauses_.emplace_back();
    }
    Clause& c = clauses_[cref];
    c.lits = std::move(lits);
    c.act = 0.0f;
    c.lbd = 0;
    c.learnt = learnt;
    c.live = true;
    return cref;
  }

  void attach(int cref) {
    const Clause& c = clauses_[cref];
    watches_[c.lits[0]].push_back({cref, c.lits[1]});
    watches_[c.lits[1]].push_back({cref, c.lits[0]});
  }

  void detach(int cref) {
    const Clause& c = clauses_[cref];
    for (int k = 0; k < 2; ++k) {
      auto& ws = watches_[c.lits[k]];
      for (std::size_t i = 0; i < ws.size(); ++i)
        if (ws[i].cref == cref) {
          ws[i] = ws.back();
          ws.pop_back();
          break;
        }
    }
  }

  void enqueue(int l, int reason) {
    int v = lvar(l);
    assigns_[v] = static_cast<std::uint8_t>(l & 1);
    level_[v] = decisionLevel();
    reason_[v] = reason;
    trail_.push_back(l);
  }

  int propagate() {
    int confl = kNoClause;
    while (qhead_ < trail_.size()) {
      const int p = trail_[qhead_++];
      ++stats.propagations;
      auto& ws = watches_[neg(p)];
      std::size_t i = 0, keep = 0;
      const int flit = neg(p);
      while (i < ws.size()) {
        Watch w = ws[i];
        if (value(w.blocker) == kTrue) {
          ws[keep++] = w;
          ++i;
          continue;
        }
        Clause& c = clauses_[w.cref];
        if (c.lits[0] == flit) std::swap(c.lits[0], c.lits[1]);
        const int first = c.lits[0];
        if (first != w.blocker && value(first) == kTrue) {
          ws[keep++] = {w.cref, first};
          ++i;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.lits.size(); ++k)
          if (value(c.lits[k]) != kFalse) {
            std::swap(c.lits[1], c.lits[k]);
            watches_[c.lits[1]].push_back({w.cref, first});
            moved = true;
            break;
          }
        if (moved) {
          ++i;
          continue;
        }
        ws[keep++] = {w.cref, first};
        ++i;
        if (value(first) == kFalse) {
          confl = w.cref;
          qhead_ = trail_.size();
          while (i < ws.size()) ws[keep++] = ws[i++];
          break;
        }
        enqueue(first, w.cref);
      }
      ws.resize(keep);
      if (confl != kNoClause) break;
    }
    return confl;
  }

  void bumpVar(int v) {
    var_act_[v] += var_inc_;
    if (var_act_[v] > 1e100) {
      for (double& a : var_act_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
    order_.bumped(v);
  }

  void bumpClause(Clause& c) {
    c.act += static_cast<float>(cla_inc_);
    if (c.act > 1e20f) {
      for (int cref : learnts_) clauses_[cref].act *= 1e-20f;
      cla_inc_ *= 1e-20;
    }
  }

  // distinct decision levels among the literals; lower is better.
  int computeLbd(const std::vector<int>& lits) {
    ++lbd_stamp_;
    int count = 0;
    for (int l : lits) {
      const int lev = level_[lvar(l)];
      if (lev > 0 && lbd_mark_[lev] != lbd_stamp_) {
        lbd_mark_[lev] = lbd_stamp_;
        ++count;
      }
    }
    return count;
  }

  // true when the literal's implication subtree is covered by the current
  // learnt clause, so the literal itself is redundant.
  bool litRedundant(int lit) {
    if (reason_[lvar(lit)] == kNoClause) return false;
    analyze_stack_.clear();
    analyze_stack_.push_back(lit);
    const std::size_t top = analyze_clear_.size();
    while (!analyze_stack_.empty()) {
      const int p = analyze_stack_.back();
      analyze_stack_.pop_back();
      const Clause& c = clauses_[reason_[lvar(p)]];
      for (std::size_t k = 1; k < c.lits.size(); ++k) {
        const int q = c.lits[k];
        const int v = lvar(q);
        if (seen_[v] || level_[v] == 0) continue;
        if (reason_[v] == kNoClause) {
          // decision reached: not redundant, undo the trial marks
          for (std::size_t j = top; j < analyze_clear_.size(); ++j)
            seen_[analyze_clear_[j]] = 0;
          analyze_clear_.resize(top);
          return false;
        }
        seen_[v] = 1;
        analyze_clear_.push_back(v);
        analyze_stack_.push_back(q);
      }
    }
    return true;
  }

  void analyze(int confl, std::vector<int>& out, int& btlevel, int& lbd) {
    out.clear();
    out.push_back(0);  // slot for the asserting literal
    int pathc = 0;
    int p = -1;
    int index = static_cast<int>(trail_.size()) - 1;
    analyze_clear_.clear();
    do {
      Clause& c = clauses_[confl];
      if (c.learnt) {
        bumpClause(c);
        // freshly relevant clause: refresh its quality score
        const int cur = computeLbd(c.lits);
        if (cur < c.lbd) c.lbd = cur;
      }
      for (std::size_t j = (p == -1 ? 0 : 1); j < c.lits.size(); ++j) {
        const int q = c.lits[j];
        const int v = lvar(q);
        if (!seen_[v] && level_[v] > 0) {
          bumpVar(v);
          seen_[v] = 1;
          analyze_clear_.push_back(v);
          if (level_[v] >= decisionLevel())
            ++pathc;
          else
            out.push_back(q);
        }
      }
      while (!seen_[lvar(trail_[index])]) --index;
      p = trail_[index--];
      confl = reason_[lvar(p)];
      seen_[lvar(p)] = 0;
      --pathc;
    } while (pathc > 0);
    out[0] = neg(p);
    seen_[lvar(p)] = 1;
    analyze_clear_.push_back(lvar(p));

    // recursive minimization: drop literals implied by the rest
    std::size_t keep = 1;
    for (std::size_t i = 1; i < out.size(); ++i) {
      if (!litRedundant(out[i])) out[keep++] = out[i];
    }
    out.resize(keep);

    btlevel = 0;
    if (out.size() > 1) {
      std::size_t maxi = 1;
      for (std::size_t i = 2; i < out.size(); ++i)
        if (level_[lvar(out[i])] > level_[lvar(out[maxi])]) maxi = i;
      std::swap(out[1], out[maxi]);
      btlevel = level_[lvar(out[1])];
    }
    lbd = computeLbd(out);
    for (int v : analyze_clear_) seen_[v] = 0;
  }

  void backtrack(int level) {
    if (decisionLevel() <= level) return;
    const int limit = trail_lim_[level];
    for (int k = static_cast<int>(trail_.size()) - 1; k >= limit; --k) {
      const int v = lvar(trail_[k]);
      polarity_[v] = assigns_[v] == kTrue;
      assigns_[v] = kUndef;
      order_.insert(v);
    }
    trail_.resize(limit);
    qhead_ = limit;
    trail_lim_.resize(level);
  }

  bool locked(int cref) const {
    const Clause& c = clauses_[cref];
    const int v = lvar(c.lits[0]);
    return assigns_[v] != kUndef && reason_[v] == cref &&
           value(c.lits[0]) == kTrue;
  }

  void reduceDB() {
    ++num_reduces_;
    // best clauses first: glue (small lbd), then active
    std::sort(learnts_.begin(), learnts_.end(), [this](int x, int y) {
      const Clause& a = clauses_[x];
      const Clause& b = clauses_[y];
      if (a.lbd != b.lbd) return a.lbd < b.lbd;
      return a.act > b.act;
    });
    std::vector<int> kept;
    kept.reserve(learnts_.size());
    const std::size_t half = learnts_.size() / 2;
    for (std::size_t i = 0; i < learnts_.size(); ++i) {
      const int cref = learnts_[i];
      Clause& c = clauses_[cref];
      const bool precious =
          c.lbd <= 2 || c.lits.size() <= 2 || locked(cref) || i < half;
      if (precious) {
        kept.push_back(cref);
      } else {
        detach(cref);
        c.live = false;
        c.lits.clear();
        c.lits.shrink_to_fit();
        free_.push_back(cref);
      }
    }
    learnts_ = std::move(kept);
  }

  std::uint64_t nextRand() {
    rng_ ^= rng_ << 13;
    rng_ ^= rng_ >> 7;
    rng_ ^= rng_ << 17;
    return rng_;
  }

  int pickBranchVar() {
    if (limits_.seed != 0 && !order_.empty() && nextRand() % 50 == 0) {
      const int v = order_.at(static_cast<int>(nextRand() % order_.size()));
      if (assigns_[v] == kUndef) return v;
    }
    while (!order_.empty()) {
      const int v = order_.pop();
      if (assigns_[v] == kUndef) return v;
    }
    return -1;
  }

  const int nvars_;
  SolverLimits limits_;
  bool ok_ = true;
  std::vector<Clause> clauses_;
  std::vector<int> free_;
  std::vector<int> learnts_;
  std::size_t num_originals_ = 0;
  std::vector<std::uint8_t> assigns_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<bool> polarity_;
  std::vector<char> seen_;
  std::vector<std::uint64_t> lbd_mark_;
  std::uint64_t lbd_stamp_ = 0;
  std::vector<int> analyze_stack_;
  std::vector<int> analyze_clear_;
  std::vector<double> var_act_;
  std::vector<std::vector<Watch>> watches_;
  std::vector<int> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  VarOrder order_;
  double var_inc_ = 1.0;
  double cla_inc_ = 1.0;
  double ema_fast_ = 0.0;
  double ema_slow_ = 0.0;
  double ema_trail_ = 0.0;
  std::uint64_t num_reduces_ = 0;
  std::uint64_t rng_ = 0;
  Clock::time_point start_;
};

}  // namespace

SolveResult solve(const Cnf& cnf, const SolverLimits& limits) {
  const auto t0 = Clock::now();
  SolveResult res;
  Cdcl solver(cnf.num_vars, limits);
  bool ok = true;
  for (const auto& cl : cnf.clauses)
    if (!solver.addClause(cl)) {
      ok = false;
      break;
    }
  res.status = ok ? solver.run() : SolveStatus::Unsat;
  res.stats = solver.stats;
  if (res.status == SolveStatus::Sat) {
    res.model.assign(cnf.num_vars + 1, false);
    for (int v = 1; v <= cnf.num_vars; ++v) res.model[v] = solver.modelValue(v);
    if (!satisfies(cnf, res.model))
      throw Error("internal: solver produced a bad model");
  }
  res.stats.wall_seconds =
      std::chrono::duration<double>(Clock::now() - t0).count();
  return res;
}

}  // namespace vts
