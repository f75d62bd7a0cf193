#pragma once

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <vector>

#include "ibex/best_first.hpp"
#include "ibex/domain.hpp"
#include "ibex/drivers.hpp"
#include "ibex/tree_search.hpp"

namespace ibex {

namespace detail {

// One cost-bounded depth-first iteration. In first-goal mode it stops at the
// first goal with f <= threshold; otherwise it keeps the best goal and prunes
// f >= best (branch and bound). Expansions are charged to a run-wide counter.
template <SearchDomain D>
class ThresholdDfs {
 public:
  using State = typename D::State;

  ThresholdDfs(const D& d, const RunLimits& limits, DuplicateCheck dup)
      : d_(&d), cap_(limits.expansion_cap), dup_(dup), deadline_(deadline_after(limits.time_limit_s)) {}

  struct Iteration {
    std::optional<Solution> best;
    Cost min_fringe = kInfinity;
  };

  Iteration run(Cost threshold, bool first_goal,
                const std::function<void(Cost)>& on_fringe = nullptr) {
    threshold_ = threshold;
    first_goal_ = first_goal;
    on_fringe_ = on_fringe ? &on_fringe : nullptr;
    it_ = Iteration{};
    path_.clear();
    const State root = d_->initial_state();
    states_.assign(1, &root);
    search(root);
    return std::move(it_);
  }

  Count expansions() const { return expansions_; }

 private:
  enum class Visit { leaf, expanded, stop };

  Visit visit(const State& s, Cost g, std::size_t depth) {
    const Cost f = g + d_->heuristic(s);
    if (f > threshold_) {
      it_.min_fringe = std::min(it_.min_fringe, f);
      if (on_fringe_) (*on_fringe_)(f);
      return Visit::leaf;
    }
    if (it_.best && f >= it_.best->cost) return Visit::leaf;
    if (d_->is_goal(s)) {
      it_.best = Solution{g, path_};
      return first_goal_ ? Visit::stop : Visit::leaf;
    }
    if (expansions_ >= cap_) throw SearchAborted(Termination::expansion_cap);
    ++expansions_;
    if ((expansions_ & 4095) == 0) check_deadline(deadline_);
    if (depth >= frames_.size()) frames_.emplace_back();
    d_->successors(s, frames_[depth]);
    return Visit::expanded;
  }

  bool skip(const State& child, std::size_t depth) const {
    if (dup_ == DuplicateCheck::parent) return depth >= 1 && *states_[depth - 1] == child;
    if (dup_ == DuplicateCheck::path)
      return std::any_of(states_.begin(), states_.end(), [&](const State* p) { return *p == child; });
    return false;
  }

  void search(const State& root) {
    struct Frame {
      Cost g;
      std::uint32_t next;
    };
    std::vector<Frame> stack;
    Visit v = visit(root, 0, 0);
    if (v != Visit::expanded) return;
    stack.push_back({0, 0});
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
      if (v == Visit::stop) return;
      if (v == Visit::expanded) {
        stack.push_back({g, 0});
      } else {
        path_.pop_back();
        states_.pop_back();
      }
    }
  }

  const D* d_;
  Count cap_;
  DuplicateCheck dup_;
  Deadline deadline_;
  Cost threshold_ = 0;
  bool first_goal_ = true;
  const std::function<void(Cost)>* on_fringe_ = nullptr;
  Iteration it_;
  Count expansions_ = 0;
  std::vector<std::uint32_t> path_;
  std::vector<const State*> states_;
  std::deque<std::vector<Edge<State>>> frames_;
};

}  // namespace detail

// Thresholds start at f(init); each next one is the smallest pruned f.
template <SearchDomain D>
SearchResult ida_star(const D& domain, const RunLimits& limits = {},
                      DuplicateCheck dup = DuplicateCheck::none) {
  detail::ThresholdDfs<D> dfs(domain, limits, dup);
  SearchResult r;
  Cost t = domain.heuristic(domain.initial_state());
  try {
    for (;;) {
      r.thresholds.push_back(t);
      auto it = dfs.run(t, true);
      if (it.best) {
        r.solution = std::move(it.best);
        r.termination = Termination::solved;
        break;
      }
      if (it.min_fringe == kInfinity) break;
      t = it.min_fringe;
    }
  } catch (const SearchAborted& e) {
    r.termination = e.reason;
  }
  r.expansions = dfs.expansions();
  return r;
}

// Thresholds gamma^k; thresholds that cannot admit a new node are skipped.
// Every iteration is branch and bound, so the first one with a goal is optimal.
template <SearchDomain D>
SearchResult eda_star(const D& domain, double gamma, const RunLimits& limits = {},
                      DuplicateCheck dup = DuplicateCheck::none) {
  if (!(gamma > 1)) throw std::invalid_argument("gamma must be > 1");
  detail::ThresholdDfs<D> dfs(domain, limits, dup);
  SearchResult r;
  Cost floor = domain.heuristic(domain.initial_state());
  double t = gamma;
  try {
    for (;;) {
      while (t < floor) t *= gamma;
      r.thresholds.push_back(t);
      auto it = dfs.run(t, false);
      if (it.best) {
        r.solution = std::move(it.best);
        r.termination = Termination::solved;
        break;
      }
      if (it.min_fringe == kInfinity) break;
      floor = it.min_fringe;
      t *= gamma;
    }
  } catch (const SearchAborted& e) {
    r.termination = e.reason;
  }
  r.expansions = dfs.expansions();
  return r;
}

// Threshold estimator for IDA*_CR. Pruned f-values in (t, 10t] fall into
// geometric ranges; larger values go to the last one. next() returns the upper
// edge of the first range whose running count reaches `target`, or of the
// highest occupied range if none does. The last range's edge is its largest value.
class CrHistogram {
 public:
  CrHistogram(Cost t, std::size_t buckets);
  void add(Cost f);
  Cost next(double target) const;

 private:
  Cost t_;
  std::vector<Count> count_;
  std::vector<Cost> top_;
  Cost max_seen_ = 0;
};

template <SearchDomain D>
SearchResult ida_star_cr(const D& domain, std::size_t buckets = 50, double growth = 2,
                         const RunLimits& limits = {},
                         DuplicateCheck dup = DuplicateCheck::none) {
  detail::ThresholdDfs<D> dfs(domain, limits, dup);
  SearchResult r;
  Cost t = domain.heuristic(domain.initial_state());
  try {
    for (;;) {
      r.thresholds.push_back(t);
      CrHistogram hist(t, buckets);
      const std::function<void(Cost)> collect = [&hist](Cost f) { hist.add(f); };
      const Count before = dfs.expansions();
      auto it = dfs.run(t, false, collect);
      if (it.best) {
        r.solution = std::move(it.best);
        r.termination = Termination::solved;
        break;
      }
      if (it.min_fringe == kInfinity) break;
      const double target = growth * static_cast<double>(dfs.expansions() - before);
      t = std::max(it.min_fringe, hist.next(target));
    }
  } catch (const SearchAborted& e) {
    r.termination = e.reason;
  }
  r.expansions = dfs.expansions();
  return r;
}

}  // namespace ibex
