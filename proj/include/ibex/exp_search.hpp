#pragma once

#include <variant>

#include "ibex/query.hpp"

namespace ibex {

struct Critical {
  Cost value;
};

// the query loop was cut off by max_queries (limited feedback need not converge)
struct QueryLimitReached {
  CostInterval bracket;
};

using ExpSearchOutcome = std::variant<Critical, SolutionFound, Exhausted, QueryLimitReached>;

// Brackets C_crit(budget) by doubling from `start`, then bisects.
// Each query receives the current low end as a known lower bound.
ExpSearchOutcome exp_search(Cost start, Count budget, const QueryFn& query,
                            Count max_queries = kUnlimited);

}  // namespace ibex
