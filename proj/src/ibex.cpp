#include "ibex/ibex.hpp"

#include <cmath>

#include "ibex/exp_search.hpp"

namespace ibex {

namespace {

QueryFn forward(CappedQuery& q) {
  return [&q](Cost c, Count b, Cost lb) { return q(c, b, lb); };
}

void finish(SearchResult& r, const CappedQuery& q) {
  r.expansions = q.expansions();
  r.queries = q.queries();
}

Count scaled_budget(double alpha, Count b) {
  const double v = alpha * static_cast<double>(b);
  return v >= 1.8e19 ? kUnlimited : static_cast<Count>(v);
}

}  // namespace

SearchResult ibex_simple(const QueryFn& query, Cost c_min, Count expansion_cap) {
  CappedQuery capped(query, expansion_cap);
  const QueryFn q = forward(capped);
  SearchResult r;
  try {
    Cost c = c_min;
    for (Count k = 1;; ++k) {
      const Count b = shift_left_saturating(1, k);
      ExpSearchOutcome out = exp_search(c, b, q);
      if (auto* s = std::get_if<SolutionFound>(&out)) {
        r.termination = Termination::solved;
        r.solution = s->solution;
        break;
      }
      if (std::holds_alternative<Exhausted>(out)) break;
      c = std::get<Critical>(out).value;
      if (c == kInfinity) break;
    }
  } catch (const SearchAborted& e) {
    r.termination = e.reason;
  }
  finish(r, capped);
  return r;
}

SearchResult ibex_enhanced(const QueryFn& query, Cost c_min, const IbexOptions& opts) {
  if (!(opts.alpha >= 2)) throw std::invalid_argument("alpha must be >= 2");
  CappedQuery q(query, opts.expansion_cap);
  SearchResult r;

  auto solved = [&](const QueryOutcome& out) {
    if (auto* s = std::get_if<SolutionFound>(&out)) {
      r.termination = Termination::solved;
      r.solution = s->solution;
      return true;
    }
    return false;
  };

  try {
    Cost c_low = c_min;
    Count b = 1;
    bool stop = false;
    while (!stop) {
      if (opts.on_iteration) opts.on_iteration(b);
      QueryOutcome out = q(c_low, kUnlimited, c_low);
      if (solved(out)) break;
      if (std::holds_alternative<Exhausted>(out)) break;
      CostInterval iv = std::get<Pruned>(out).interval;
      iv.low = std::max(iv.low, c_low);
      c_low = iv.low;
      Cost c_high = iv.high;
      Count n_used = used_of(out);

      if (n_used < saturating_mul(2, b)) {
        for (int j = 1;; ++j) {
          Cost c;
          if (c_high == kInfinity)
            c = opts.additive ? c_low + std::ldexp(1.0, j) : 2 * c_low;
          else
            c = (c_low + c_high) / 2;
          out = q(c, scaled_budget(opts.alpha, b), c_low);
          if (solved(out) || std::holds_alternative<Exhausted>(out)) {
            stop = true;
            break;
          }
          const CostInterval got = std::get<Pruned>(out).interval;
          c_low = std::max(c_low, got.low);
          c_high = std::min(c_high, got.high);
          n_used = used_of(out);
          if ((got.high == kInfinity && n_used >= saturating_mul(2, b)) || c_low >= c_high) break;
        }
      }
      b = std::max(saturating_mul(2, b), n_used);
    }
  } catch (const SearchAborted& e) {
    r.termination = e.reason;
  }
  finish(r, q);
  return r;
}

}  // namespace ibex
