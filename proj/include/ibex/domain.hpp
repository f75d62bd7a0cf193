#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ibex/cost.hpp"
#include "ibex/query.hpp"

namespace ibex {

template <class State>
struct Edge {
  State state;
  Cost cost;
};

// successors() clears `out` and fills it in the domain's fixed order.
template <class D>
concept SearchDomain = requires(const D& d, const typename D::State& s,
                                std::vector<Edge<typename D::State>>& out) {
  typename D::State;
  typename D::StateHash;
  { d.initial_state() } -> std::convertible_to<typename D::State>;
  { d.successors(s, out) };
  { d.heuristic(s) } -> std::convertible_to<Cost>;
  { d.is_goal(s) } -> std::convertible_to<bool>;
  { typename D::StateHash{}(s) } -> std::convertible_to<std::size_t>;
  requires std::equality_comparable<typename D::State>;
};

// Adds an artificial root with h = 1 and an edge of cost 1 - h(init) when
// h(init) < 1, so every f-value is at least 1. Otherwise the wrapper is a
// pass-through. Action 0 of the artificial root is the shift edge.
template <SearchDomain D>
class Shifted {
 public:
  struct State {
    bool artificial = false;
    typename D::State inner{};
    friend bool operator==(const State&, const State&) = default;
  };
  struct StateHash {
    std::size_t operator()(const State& s) const {
      return typename D::StateHash{}(s.inner) * 2 + (s.artificial ? 1 : 0);
    }
  };

  explicit Shifted(const D& inner) : inner_(&inner) {
    const Cost h0 = inner.heuristic(inner.initial_state());
    if (h0 < 1) offset_ = 1 - h0;
  }

  bool active() const { return offset_ > 0; }
  Cost offset() const { return offset_; }
  const D& inner() const { return *inner_; }

  State initial_state() const { return State{active(), inner_->initial_state()}; }

  void successors(const State& s, std::vector<Edge<State>>& out) const {
    out.clear();
    if (s.artificial) {
      out.push_back({State{false, inner_->initial_state()}, offset_});
      return;
    }
    thread_local std::vector<Edge<typename D::State>> buf;
    inner_->successors(s.inner, buf);
    for (auto& e : buf) out.push_back({State{false, std::move(e.state)}, e.cost});
  }

  Cost heuristic(const State& s) const { return s.artificial ? 1 : inner_->heuristic(s.inner); }
  bool is_goal(const State& s) const { return !s.artificial && inner_->is_goal(s.inner); }

  // strip the shift edge from a solution found on the shifted domain
  Solution unshift(Solution sol) const {
    if (active() && !sol.actions.empty()) {
      sol.actions.erase(sol.actions.begin());
      sol.cost -= offset_;
    }
    return sol;
  }

 private:
  const D* inner_;
  Cost offset_ = 0;
};

// Replays an action sequence; returns the path cost, or nullopt if an index
// is out of range or the path does not end in a goal.
template <SearchDomain D>
std::optional<Cost> replay(const D& d, const std::vector<std::uint32_t>& actions) {
  using S = typename D::State;
  S s = d.initial_state();
  Cost g = 0;
  std::vector<Edge<S>> buf;
  for (auto a : actions) {
    d.successors(s, buf);
    if (a >= buf.size()) return std::nullopt;
    g += buf[a].cost;
    s = buf[a].state;
  }
  if (!d.is_goal(s)) return std::nullopt;
  return g;
}

}  // namespace ibex
