#pragma once

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ibex/domain.hpp"
#include "ibex/drivers.hpp"
#include "ibex/query.hpp"

namespace ibex {

enum class SelectionRule { astar, b };

struct Pathmax {
  bool child = false;   // h(c) <- max(h(c), h(p) - c(p, c))
  bool parent = false;  // h(p) <- max(h(p), min_c h(c) + c(p, c))
};

struct BestFirstOptions {
  SelectionRule rule = SelectionRule::astar;
  Pathmax pathmax;
  RunLimits limits;
  // polled after every expansion with (expansions, reexpansions); true stops the search
  std::function<bool(Count, Count)> interrupt;
};

struct BestFirstResult {
  SearchResult result;
  bool interrupted = false;
};

// A* with reopening, or Martelli's B (min g among open nodes with f below the
// largest f selected so far). f ties go to larger g, then first-in first-out.
// The selection of the goal counts as an expansion.
template <SearchDomain D>
BestFirstResult best_first(const D& domain, const BestFirstOptions& opts) {
  using State = typename D::State;
  struct Rec {
    State state;
    Cost g;
    Cost h;
    std::uint32_t parent;
    std::uint32_t action;
    std::uint64_t seq;
    std::uint32_t version = 0;
    bool open = true;
    bool expanded_before = false;
  };
  using FKey = std::tuple<Cost, Cost, std::uint64_t, std::uint32_t, std::uint32_t>;  // f, -g
  using GKey = std::tuple<Cost, std::uint64_t, std::uint32_t, std::uint32_t>;
  std::priority_queue<FKey, std::vector<FKey>, std::greater<>> fheap;
  std::priority_queue<GKey, std::vector<GKey>, std::greater<>> gheap;
  std::vector<Rec> recs;
  std::unordered_map<State, std::uint32_t, typename D::StateHash> index;
  constexpr std::uint32_t kRoot = 0xffffffffu;
  std::uint64_t seq = 0;
  const Deadline deadline = deadline_after(opts.limits.time_limit_s);

  auto push = [&](std::uint32_t id) {
    const Rec& r = recs[id];
    fheap.emplace(r.g + r.h, -r.g, r.seq, id, r.version);
  };
  auto valid = [&](std::uint32_t id, std::uint32_t version) {
    return recs[id].open && recs[id].version == version;
  };

  BestFirstResult out;
  SearchResult& res = out.result;
  {
    const State root = domain.initial_state();
    recs.push_back(Rec{root, 0, domain.heuristic(root), kRoot, 0, seq++});
    index.emplace(root, 0);
    push(0);
  }
  Cost big_f = -kInfinity;
  std::vector<Edge<State>> kids;

  try {
    for (;;) {
      std::uint32_t pick = kRoot;
      if (opts.rule == SelectionRule::b) {
        while (!fheap.empty()) {
          auto [f, ng, s, id, ver] = fheap.top();
          if (!valid(id, ver)) {
            fheap.pop();
            continue;
          }
          if (!(f < big_f)) break;
          fheap.pop();
          gheap.emplace(-ng, s, id, ver);
        }
        while (!gheap.empty() && !valid(std::get<2>(gheap.top()), std::get<3>(gheap.top())))
          gheap.pop();
        if (!gheap.empty()) {
          pick = std::get<2>(gheap.top());
          gheap.pop();
        }
      }
      if (pick == kRoot) {
        while (!fheap.empty() && !valid(std::get<3>(fheap.top()), std::get<4>(fheap.top())))
          fheap.pop();
        if (fheap.empty()) break;
        pick = std::get<3>(fheap.top());
        big_f = std::max(big_f, std::get<0>(fheap.top()));
        fheap.pop();
      }

      if (res.expansions >= opts.limits.expansion_cap) throw SearchAborted(Termination::expansion_cap);
      ++res.expansions;
      if ((res.expansions & 4095) == 0) check_deadline(deadline);
      recs[pick].open = false;
      if (domain.is_goal(recs[pick].state)) {
        Solution sol;
        sol.cost = recs[pick].g;
        for (std::uint32_t at = pick; recs[at].parent != kRoot; at = recs[at].parent)
          sol.actions.push_back(recs[at].action);
        std::reverse(sol.actions.begin(), sol.actions.end());
        res.solution = std::move(sol);
        res.termination = Termination::solved;
        return out;
      }
      if (recs[pick].expanded_before) ++res.reexpansions;
      recs[pick].expanded_before = true;

      domain.successors(recs[pick].state, kids);
      if (opts.pathmax.parent && !kids.empty()) {
        Cost best = kInfinity;
        for (const auto& e : kids) {
          auto it = index.find(e.state);
          const Cost hc = it == index.end() ? domain.heuristic(e.state) : recs[it->second].h;
          best = std::min(best, hc + e.cost);
        }
        recs[pick].h = std::max(recs[pick].h, best);
      }
      const Cost g = recs[pick].g;
      const Cost hp = recs[pick].h;
      for (std::uint32_t i = 0; i < kids.size(); ++i) {
        const Cost g2 = g + kids[i].cost;
        auto it = index.find(kids[i].state);
        if (it == index.end()) {
          Cost h = domain.heuristic(kids[i].state);
          if (opts.pathmax.child) h = std::max(h, hp - kids[i].cost);
          const auto id = static_cast<std::uint32_t>(recs.size());
          recs.push_back(Rec{kids[i].state, g2, h, pick, i, seq++});
          index.emplace(kids[i].state, id);
          push(id);
          continue;
        }
        const std::uint32_t id = it->second;
        Rec& r = recs[id];
        bool changed = false;
        if (opts.pathmax.child && hp - kids[i].cost > r.h) {
          r.h = hp - kids[i].cost;
          changed = r.open;
        }
        if (g2 < r.g) {
          r.g = g2;
          r.parent = pick;
          r.action = i;
          r.seq = seq++;
          r.open = true;
          changed = true;
        }
        if (changed) {
          ++r.version;
          push(id);
        }
      }
      if (opts.interrupt && opts.interrupt(res.expansions, res.reexpansions)) {
        out.interrupted = true;
        return out;
      }
    }
  } catch (const SearchAborted& e) {
    res.termination = e.reason;
  }
  return out;
}

template <SearchDomain D>
SearchResult astar(const D& domain, const RunLimits& limits = {}) {
  BestFirstOptions o;
  o.limits = limits;
  return best_first(domain, o).result;
}

template <SearchDomain D>
SearchResult algorithm_b(const D& domain, const RunLimits& limits = {}) {
  BestFirstOptions o;
  o.rule = SelectionRule::b;
  o.limits = limits;
  return best_first(domain, o).result;
}

// B with pathmax. The child rule alone is the default; the parent rule is opt-in.
template <SearchDomain D>
SearchResult algorithm_b_prime(const D& domain, const RunLimits& limits = {},
                               Pathmax pm = Pathmax{true, false}) {
  BestFirstOptions o;
  o.rule = SelectionRule::b;
  o.pathmax = pm;
  o.limits = limits;
  return best_first(domain, o).result;
}

}  // namespace ibex
