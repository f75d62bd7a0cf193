#include "ibex/exp_search.hpp"

#include <stdexcept>

namespace ibex {

ExpSearchOutcome exp_search(Cost start, Count budget, const QueryFn& query, Count max_queries) {
  if (!(start >= 1)) throw std::invalid_argument("exp_search start must be >= 1");
  CostInterval bracket{start, kInfinity};
  for (Count issued = 0;; ++issued) {
    if (issued >= max_queries) return QueryLimitReached{bracket};
    const Cost c = bracket.high == kInfinity ? 2 * bracket.low
                                              : (bracket.low + bracket.high) / 2;
    QueryOutcome out = query(c, budget, bracket.low);
    if (auto* s = std::get_if<SolutionFound>(&out)) return *s;
    if (auto* e = std::get_if<Exhausted>(&out)) return *e;
    bracket = bracket.intersect(std::get<Pruned>(out).interval);
    if (bracket.determined()) return Critical{bracket.low};
  }
}

}  // namespace ibex
