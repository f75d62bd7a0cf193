#pragma once

#include <algorithm>
#include <deque>
#include <memory>
#include <optional>
#include <vector>

#include "ibex/domain.hpp"
#include "ibex/drivers.hpp"
#include "ibex/query.hpp"

namespace ibex {

enum class DuplicateCheck { none, parent, path };

struct TreeQueryOptions {
  // keep the best goal seen across queries and use it for branch and bound
  bool use_incumbent = true;
  DuplicateCheck duplicates = DuplicateCheck::none;
  Deadline deadline;
};

// Budgeted, cost-bounded depth-first search with extended feedback.
// Memory is the current path plus one successor list per depth level.
template <SearchDomain D>
class TreeQuery {
 public:
  using State = typename D::State;

  explicit TreeQuery(const D& domain, TreeQueryOptions opts = {})
      : domain_(&domain), opts_(std::move(opts)), root_(domain.initial_state()) {}

  QueryOutcome operator()(Cost limit, Count budget, Cost lower_bound = 0) {
    limit_ = limit;
    budget_ = budget;
    lower_bound_ = lower_bound;
    min_fringe_ = kInfinity;
    max_visited_ = 0;
    expanded_ = 0;
    best_ = opts_.use_incumbent ? incumbent_ : std::nullopt;
    path_.clear();
    states_.assign(1, &root_);

    const Stop st = search();
    if (opts_.use_incumbent && best_) incumbent_ = best_;
    if (st == Stop::exceeded) return Pruned{{1, max_visited_}, expanded_};
    if (st == Stop::found) return SolutionFound{*best_, expanded_};
    if (best_ && best_->cost <= limit_) return SolutionFound{*best_, expanded_};
    if (min_fringe_ == kInfinity) return Exhausted{expanded_};
    return Pruned{{min_fringe_, kInfinity}, expanded_};
  }

  const std::optional<Solution>& incumbent() const { return incumbent_; }
  void seed_incumbent(Solution s) { incumbent_ = std::move(s); }

  // deepest path held by any query so far, and nodes generated in total
  std::size_t max_depth() const { return max_depth_; }
  Count generated() const { return generated_; }

 private:
  enum class Stop { none, exceeded, found };

  enum class Visit { leaf, expanded, stop_exceeded, stop_found };

  // Handles one node; on expansion its successors land in frames_[depth].
  Visit visit(const State& s, Cost g, std::size_t depth) {
    const Cost f = g + domain_->heuristic(s);
    if (f > limit_) {
      min_fringe_ = std::min(min_fringe_, f);
      return Visit::leaf;
    }
    max_visited_ = std::max(max_visited_, f);
    if (best_ && f >= best_->cost) return Visit::leaf;
    if (domain_->is_goal(s)) {
      best_ = Solution{g, path_};
      return g <= lower_bound_ ? Visit::stop_found : Visit::leaf;
    }
    if (expanded_ == budget_) return Visit::stop_exceeded;
    ++expanded_;
    if ((expanded_ & 4095) == 0) check_deadline(opts_.deadline);
    if (depth >= frames_.size()) frames_.emplace_back();
    domain_->successors(s, frames_[depth]);
    generated_ += frames_[depth].size();
    max_depth_ = std::max(max_depth_, depth + 1);
    return Visit::expanded;
  }

  Stop search() {
    struct Frame {
      Cost g;
      std::uint32_t next;
    };
    std::vector<Frame> stack;
    auto stop_of = [](Visit v) { return v == Visit::stop_found ? Stop::found : Stop::exceeded; };
    Visit v = visit(root_, 0, 0);
    if (v == Visit::stop_found || v == Visit::stop_exceeded) return stop_of(v);
    if (v == Visit::expanded) stack.push_back({0, 0});
    while (!stack.empty()) {
      const std::size_t depth = stack.size() - 1;
      const auto& kids = frames_[depth];
      const std::uint32_t i = stack.back().next;
      if (i == kids.size()) {
        stack.pop_back();
        if (depth > 0) {
          path_.pop_back();
          states_.pop_back();
        }
        continue;
      }
      ++stack.back().next;
      const State& child = kids[i].state;
      if (skip(child, depth)) continue;
      const Cost g = stack.back().g + kids[i].cost;
      path_.push_back(i);
      states_.push_back(&child);
      v = visit(child, g, depth + 1);
      if (v == Visit::stop_found || v == Visit::stop_exceeded) return stop_of(v);
      if (v == Visit::expanded) {
        stack.push_back({g, 0});
      } else {
        path_.pop_back();
        states_.pop_back();
      }
    }
    return Stop::none;
  }

  bool skip(const State& child, std::size_t depth) const {
    switch (opts_.duplicates) {
      case DuplicateCheck::none:
        return false;
      case DuplicateCheck::parent:
        return depth >= 1 && *states_[depth - 1] == child;
      case DuplicateCheck::path:
        for (const State* p : states_)
          if (*p == child) return true;
        return false;
    }
    return false;
  }

  const D* domain_;
  TreeQueryOptions opts_;
  State root_;

  Cost limit_ = 0;
  Count budget_ = 0;
  Cost lower_bound_ = 0;
  Cost min_fringe_ = kInfinity;
  Cost max_visited_ = 0;
  Count expanded_ = 0;
  std::optional<Solution> best_;
  std::optional<Solution> incumbent_;

  std::vector<std::uint32_t> path_;
  std::vector<const State*> states_;
  std::deque<std::vector<Edge<State>>> frames_;
  std::size_t max_depth_ = 0;
  Count generated_ = 0;
};

// Tree-search query composed with one of the IBEX drivers, run on the
// unit-floor-shifted domain. Solution costs are reported unshifted.
template <SearchDomain D>
SearchResult bts(const D& domain, const DriverConfig& cfg, TreeQueryOptions opts = {}) {
  Shifted<D> shifted(domain);
  opts.deadline = deadline_after(cfg.limits.time_limit_s);
  TreeQuery<Shifted<D>> tq(shifted, opts);
  QueryFn fn = [&tq](Cost c, Count b, Cost lb) { return tq(c, b, lb); };
  const Cost c_min = shifted.heuristic(shifted.initial_state());
  SearchResult r = run_driver(fn, c_min, cfg);
  if (r.solution) r.solution = shifted.unshift(*r.solution);
  return r;
}

}  // namespace ibex
