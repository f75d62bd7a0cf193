#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ibex/domain.hpp"

namespace ibex {

// Finite directed graph held in adjacency lists. Successors come out in the
// order the edges were added.
class ExplicitGraph {
 public:
  using State = std::uint32_t;
  using StateHash = std::hash<std::uint32_t>;

  explicit ExplicitGraph(std::size_t num_states, State initial = 0);

  void add_edge(State from, State to, Cost cost);
  void set_heuristic(State s, Cost h) { h_.at(s) = h; }
  void set_goal(State s, bool goal = true) { goal_.at(s) = goal; }
  void set_initial(State s) { initial_ = s; }

  std::size_t num_states() const { return adj_.size(); }
  const std::vector<Edge<State>>& edges(State s) const { return adj_[s]; }

  State initial_state() const { return initial_; }
  void successors(State s, std::vector<Edge<State>>& out) const { out = adj_[s]; }
  Cost heuristic(State s) const { return h_[s]; }
  bool is_goal(State s) const { return goal_[s] != 0; }

 private:
  State initial_;
  std::vector<std::vector<Edge<State>>> adj_;
  std::vector<Cost> h_;
  std::vector<char> goal_;
};

// states 0..depth, unit edges i -> i+1, goal = depth, h = 0
ExplicitGraph make_chain(std::size_t depth);

// Worst case for re-expansions. State ids: s = 0, t_i = i (1..d), m = d+1,
// b_j = d+1+j (1..d-1), goal = 2d+1.
ExplicitGraph make_mero(std::size_t d);

}  // namespace ibex
