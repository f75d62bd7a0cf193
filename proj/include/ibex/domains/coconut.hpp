#pragma once

#include <cstdint>
#include <vector>

#include "ibex/domain.hpp"

namespace ibex {

// Infinite ternary tree with one goal: a trunk of D identical actions
// followed by a suffix of q actions. Below depth D every action costs 1/10;
// above it, repeating the parent's action costs 1 and switching costs 2D.
// h = 1 at the root and 0 elsewhere. Actions are 1, 2, 3 in that order.
class Coconut {
 public:
  struct State {
    std::uint32_t depth = 0;
    std::uint8_t last = 0;  // 0 at the root
    bool on_goal_path = true;
    std::uint64_t path_id = 0;
    friend bool operator==(const State&, const State&) = default;
  };
  struct StateHash {
    std::size_t operator()(const State& s) const {
      return static_cast<std::size_t>(s.path_id ^ (std::uint64_t{s.depth} << 40));
    }
  };

  Coconut(int trunk_action, std::uint32_t trunk_length, std::vector<std::uint8_t> suffix);
  static Coconut from_seed(std::uint64_t seed);

  int trunk_action() const { return trunk_; }
  std::uint32_t trunk_length() const { return d_; }
  const std::vector<std::uint8_t>& suffix() const { return suffix_; }
  // D + q/10, summed the same way a search sums it
  Cost optimal_cost() const;

  State initial_state() const { return State{}; }
  void successors(const State& s, std::vector<Edge<State>>& out) const;
  Cost heuristic(const State& s) const { return s.depth == 0 ? 1 : 0; }
  bool is_goal(const State& s) const {
    return s.on_goal_path && s.depth == d_ + suffix_.size();
  }

 private:
  int goal_action(std::uint32_t depth) const;

  int trunk_;
  std::uint32_t d_;
  std::vector<std::uint8_t> suffix_;
};

}  // namespace ibex
