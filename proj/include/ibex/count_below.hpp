#pragma once

#include <optional>
#include <queue>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "ibex/domain.hpp"

namespace ibex {

enum class CountMode { tree, graph };

// Number of paths (tree) or states (graph) whose cheapest max-prefix f is
// strictly below `limit`. Goals are counted but not extended. Returns nullopt
// once more than `cap` items have been counted.
template <SearchDomain D>
std::optional<Count> count_below(const D& d, Cost limit, CountMode mode, Count cap = 100'000'000) {
  using State = typename D::State;
  const State root = d.initial_state();
  if (!(d.heuristic(root) < limit)) return Count{0};
  Count n = 0;
  std::vector<Edge<State>> kids;

  if (mode == CountMode::tree) {
    std::vector<std::pair<State, Cost>> stack{{root, 0}};
    while (!stack.empty()) {
      auto [s, g] = stack.back();
      stack.pop_back();
      if (++n > cap) return std::nullopt;
      if (d.is_goal(s)) continue;
      d.successors(s, kids);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
        const Cost g2 = g + it->cost;
        if (g2 + d.heuristic(it->state) < limit) stack.emplace_back(it->state, g2);
      }
    }
    return n;
  }

  // g-ordered search keeping only generated nodes with f < limit
  using Item = std::tuple<Cost, std::uint64_t, State>;
  auto cmp = [](const Item& a, const Item& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) > std::tie(std::get<0>(b), std::get<1>(b));
  };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> open(cmp);
  std::unordered_set<State, typename D::StateHash> seen;
  std::uint64_t seq = 0;
  open.emplace(0, seq++, root);
  while (!open.empty()) {
    auto [g, order, s] = open.top();
    open.pop();
    if (!seen.insert(s).second) continue;
    if (++n > cap) return std::nullopt;
    if (d.is_goal(s)) continue;
    d.successors(s, kids);
    for (const auto& e : kids) {
      const Cost g2 = g + e.cost;
      if (g2 + d.heuristic(e.state) < limit && !seen.count(e.state)) open.emplace(g2, seq++, e.state);
    }
  }
  return n;
}

}  // namespace ibex
