#pragma once

#include <functional>

#include "ibex/query.hpp"

namespace ibex {

struct DovibexOptions {
  Count expansion_cap = kUnlimited;
  // a budget-exceeded query of program k also caps C_high of every program k' < k
  bool propagate_upper_bounds = false;
};

// One exponential-search step of program k per UBS segment, budget 2^k.
// Works with all three feedback modes.
SearchResult dovibex(const QueryFn& query, Cost c_min, const DovibexOptions& opts = {});

struct PruneEvent {
  Count k;
  Count budget;
  Count b_low;
  Cost c_low;
  Cost c_high;
};

struct DovibexEnhancedOptions {
  double alpha = 8;
  bool additive = false;
  bool probe = true;  // unbounded query at the global C_low on a program's first segment
  bool propagate_upper_bounds = false;
  Count expansion_cap = kUnlimited;
  std::function<void(const PruneEvent&)> on_prune;
};

// Budgets alpha^k, shared lower bounds C_low and b_low, per-program C_high.
SearchResult dovibex_enhanced(const QueryFn& query, Cost c_min,
                              const DovibexEnhancedOptions& opts = {});

}  // namespace ibex
