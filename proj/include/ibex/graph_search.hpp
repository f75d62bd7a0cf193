#pragma once

#include <algorithm>
#include <queue>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "ibex/best_first.hpp"
#include "ibex/domain.hpp"
#include "ibex/drivers.hpp"
#include "ibex/query.hpp"

namespace ibex {

struct GraphQueryOptions {
  Deadline deadline;
};

// Budgeted uniform-cost search with an f-limit applied when nodes are
// generated. States are popped in g order (goals first on ties, then FIFO)
// and expanded at most once per query.
template <SearchDomain D>
class GraphQuery {
 public:
  using State = typename D::State;

  explicit GraphQuery(const D& domain, GraphQueryOptions opts = {})
      : domain_(&domain), opts_(std::move(opts)) {}

  QueryOutcome operator()(Cost limit, Count budget, Cost /*lower_bound*/ = 0) {
    nodes_.clear();
    visited_.clear();
    Heap heap;
    Cost min_fringe = kInfinity;
    Cost max_visited = 0;
    Count expanded = 0;
    last_expanded_.clear();

    const State root = domain_->initial_state();
    const Cost f0 = domain_->heuristic(root);
    if (f0 > limit) return Pruned{{f0, kInfinity}, 0};
    push(heap, root, 0, kNoParent, 0);

    std::vector<Edge<State>> kids;
    while (!heap.empty()) {
      const std::uint32_t id = std::get<3>(heap.top());
      heap.pop();
      if (!visited_.insert(nodes_[id].state).second) continue;
      const Cost g = nodes_[id].g;
      max_visited = std::max(max_visited, g + domain_->heuristic(nodes_[id].state));
      if (domain_->is_goal(nodes_[id].state)) return SolutionFound{reconstruct(id), expanded};
      if (expanded >= budget) return Pruned{{1, max_visited}, expanded};
      ++expanded;
      if ((expanded & 4095) == 0) check_deadline(opts_.deadline);
      if (record_) last_expanded_.push_back(nodes_[id].state);

      domain_->successors(nodes_[id].state, kids);
      for (std::uint32_t i = 0; i < kids.size(); ++i) {
        const Cost g2 = g + kids[i].cost;
        const Cost f2 = g2 + domain_->heuristic(kids[i].state);
        if (f2 > limit) {
          min_fringe = std::min(min_fringe, f2);
          continue;
        }
        if (visited_.count(kids[i].state)) continue;
        push(heap, kids[i].state, g2, id, i);
      }
    }
    if (min_fringe == kInfinity) return Exhausted{expanded};
    return Pruned{{min_fringe, kInfinity}, expanded};
  }

  // when enabled, the states expanded by the latest query are kept in order
  void record_expansions(bool on) { record_ = on; }
  const std::vector<State>& last_expanded() const { return last_expanded_; }

 private:
  static constexpr std::uint32_t kNoParent = 0xffffffffu;

  struct Node {
    State state;
    Cost g;
    std::uint32_t parent;
    std::uint32_t action;
  };

  // (g, 0 for goals, insertion order, node id)
  using Key = std::tuple<Cost, int, std::uint64_t, std::uint32_t>;
  using Heap = std::priority_queue<Key, std::vector<Key>, std::greater<>>;

  void push(Heap& heap, const State& s, Cost g, std::uint32_t parent, std::uint32_t action) {
    const auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(Node{s, g, parent, action});
    heap.emplace(g, domain_->is_goal(s) ? 0 : 1, id, id);
  }

  Solution reconstruct(std::uint32_t id) const {
    Solution sol;
    sol.cost = nodes_[id].g;
    for (std::uint32_t at = id; nodes_[at].parent != kNoParent; at = nodes_[at].parent)
      sol.actions.push_back(nodes_[at].action);
    std::reverse(sol.actions.begin(), sol.actions.end());
    return sol;
  }

  const D* domain_;
  GraphQueryOptions opts_;
  std::vector<Node> nodes_;
  std::unordered_set<State, typename D::StateHash> visited_;
  bool record_ = false;
  std::vector<State> last_expanded_;
};

// Graph-search query composed with one of the IBEX drivers on the shifted domain.
template <SearchDomain D>
SearchResult bgs(const D& domain, const DriverConfig& cfg) {
  Shifted<D> shifted(domain);
  GraphQuery<Shifted<D>> gq(shifted, GraphQueryOptions{deadline_after(cfg.limits.time_limit_s)});
  QueryFn fn = [&gq](Cost c, Count b, Cost lb) { return gq(c, b, lb); };
  const Cost c_min = shifted.heuristic(shifted.initial_state());
  SearchResult r = run_driver(fn, c_min, cfg);
  if (r.solution) r.solution = shifted.unshift(*r.solution);
  return r;
}

// Switch rule for the A* fallback: after at least 1000 expansions, once
// re-expansions make up half of all expansions.
inline bool should_switch_to_bgs(Count expansions, Count reexpansions) {
  return expansions >= 1000 && 2 * reexpansions >= expansions;
}

struct FallbackResult {
  SearchResult result;
  bool switched = false;
  Count astar_expansions = 0;
};

// Plain A* until the switch rule fires, then BGS from scratch. Expansions of
// both phases are summed.
template <SearchDomain D>
FallbackResult astar_with_bgs_fallback(const D& domain, const DriverConfig& cfg = {}) {
  BestFirstOptions o;
  o.limits = cfg.limits;
  o.interrupt = should_switch_to_bgs;
  BestFirstResult first = best_first(domain, o);
  FallbackResult out;
  out.astar_expansions = first.result.expansions;
  if (!first.interrupted) {
    out.result = std::move(first.result);
    return out;
  }
  out.switched = true;
  DriverConfig rest = cfg;
  if (rest.limits.expansion_cap != kUnlimited)
    rest.limits.expansion_cap -= std::min(rest.limits.expansion_cap, first.result.expansions);
  out.result = bgs(domain, rest);
  out.result.expansions += first.result.expansions;
  out.result.reexpansions += first.result.reexpansions;
  return out;
}

}  // namespace ibex
