#include "ibex/dovibex.hpp"

#include <cmath>
#include <vector>

#include "ibex/ubs.hpp"

namespace ibex {

namespace {

template <class T>
T& slot(std::vector<T>& v, Count k, const T& init) {
  if (v.size() <= k) v.resize(k + 1, init);
  return v[k];
}

// returns true when the run is over
bool settle(const QueryOutcome& out, SearchResult& r) {
  if (auto* s = std::get_if<SolutionFound>(&out)) {
    r.termination = Termination::solved;
    r.solution = s->solution;
    return true;
  }
  return std::holds_alternative<Exhausted>(out);
}

}  // namespace

SearchResult dovibex(const QueryFn& query, Cost c_min, const DovibexOptions& opts) {
  CappedQuery q(query, opts.expansion_cap);
  SearchResult r;
  std::vector<CostInterval> state;
  const CostInterval fresh{c_min, kInfinity};

  auto run_prog = [&](Count k, Count budget) {
    CostInterval& st = slot(state, k, fresh);
    if (st.determined()) return SegmentStatus::halted;
    const Cost c = st.high == kInfinity ? 2 * st.low : (st.low + st.high) / 2;
    QueryOutcome out = q(c, budget, st.low);
    if (settle(out, r)) return SegmentStatus::stop;
    const CostInterval got = std::get<Pruned>(out).interval;
    CostInterval& now = slot(state, k, fresh);
    now = now.intersect(got);
    if (opts.propagate_upper_bounds && got.high < kInfinity) {
      for (Count j = 1; j < k; ++j) {
        CostInterval& other = slot(state, j, fresh);
        other.high = std::min(other.high, got.high);
      }
    }
    return state[k].determined() ? SegmentStatus::halted : SegmentStatus::running;
  };

  try {
    ubs(default_cost, run_prog);
  } catch (const SearchAborted& e) {
    r.termination = e.reason;
  }
  r.expansions = q.expansions();
  r.queries = q.queries();
  return r;
}

SearchResult dovibex_enhanced(const QueryFn& query, Cost c_min,
                              const DovibexEnhancedOptions& opts) {
  if (!(opts.alpha >= 2)) throw std::invalid_argument("alpha must be >= 2");
  CappedQuery q(query, opts.expansion_cap);
  SearchResult r;
  Cost c_low = c_min;
  Count b_low = 0;
  std::vector<Cost> c_high;
  std::vector<Count> segment;

  auto run_prog = [&](Count k, Count) {
    const Count r_k = ++slot(segment, k, Count{0});
    Count b = budget_power(opts.alpha, k);
    Cost& hi = slot(c_high, k, kInfinity);
    if (b <= b_low || hi <= c_low) {
      if (opts.on_prune) opts.on_prune(PruneEvent{k, b, b_low, c_low, hi});
      return SegmentStatus::halted;
    }
    Cost c;
    if (r_k == 1 && opts.probe) {
      c = c_low;
      b = kUnlimited;
    } else if (hi == kInfinity) {
      c = opts.additive ? c_low + std::ldexp(1.0, static_cast<int>(r_k) - 1) : 2 * c_low;
    } else {
      c = (c_low + hi) / 2;
    }
    QueryOutcome out = q(c, b, c_low);
    if (settle(out, r)) return SegmentStatus::stop;
    const CostInterval got = std::get<Pruned>(out).interval;
    c_low = std::max(c_low, got.low);
    Cost& hi_now = slot(c_high, k, kInfinity);
    hi_now = std::min(hi_now, got.high);
    if (got.high == kInfinity) b_low = std::max(b_low, used_of(out));
    if (opts.propagate_upper_bounds && got.high < kInfinity) {
      for (Count j = 1; j < k; ++j) {
        Cost& other = slot(c_high, j, kInfinity);
        other = std::min(other, got.high);
      }
    }
    return SegmentStatus::running;
  };

  try {
    ubs(default_cost, run_prog);
  } catch (const SearchAborted& e) {
    r.termination = e.reason;
  }
  r.expansions = q.expansions();
  r.queries = q.queries();
  return r;
}

}  // namespace ibex
