#pragma once

#include <functional>

#include "ibex/query.hpp"

namespace ibex {

struct IbexOptions {
  double alpha = 8;
  bool additive = false;
  Count expansion_cap = kUnlimited;
  // called with the budget b at the start of every outer iteration
  std::function<void(Count)> on_iteration;
};

// Budgets 2, 4, 8, ... each handed to exp_search starting from the last critical value.
SearchResult ibex_simple(const QueryFn& query, Cost c_min, Count expansion_cap = kUnlimited);

// Unbounded probe at C_low, then exponential search only while the probe stays
// under 2b; an iteration also ends once a sufficient query uses [2b, alpha*b].
SearchResult ibex_enhanced(const QueryFn& query, Cost c_min, const IbexOptions& opts = {});

}  // namespace ibex
