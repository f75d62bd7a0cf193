#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ibex/cost.hpp"

namespace ibex {

// A path is stored as the index of the chosen successor at every step, so it
// can be replayed against the domain that produced it.
struct Solution {
  Cost cost = kInfinity;
  std::vector<std::uint32_t> actions;
};

struct Pruned {
  CostInterval interval;
  Count n_used = 0;
};

struct SolutionFound {
  Solution solution;
  Count n_used = 0;
};

// nothing left to search under any bound
struct Exhausted {
  Count n_used = 0;
};

using QueryOutcome = std::variant<Pruned, SolutionFound, Exhausted>;

inline Count used_of(const QueryOutcome& o) {
  return std::visit([](const auto& v) { return v.n_used; }, o);
}

// A finite upper end means the budget ran out before the bound was covered.
inline bool budget_exceeded(const QueryOutcome& o) {
  auto* p = std::get_if<Pruned>(&o);
  return p && p->interval.high < kInfinity;
}

using QueryFn = std::function<QueryOutcome(Cost limit, Count budget, Cost lower_bound)>;

enum class Termination { solved, no_solution, expansion_cap, time_limit };

std::string to_string(Termination t);

// Thrown to unwind a whole run when a global cap fires.
class SearchAborted : public std::runtime_error {
 public:
  explicit SearchAborted(Termination why)
      : std::runtime_error(why == Termination::time_limit ? "time limit" : "expansion cap"),
        reason(why) {}
  Termination reason;
};

struct SearchResult {
  Termination termination = Termination::no_solution;
  std::optional<Solution> solution;
  Count expansions = 0;
  Count reexpansions = 0;
  Count queries = 0;
  std::vector<Cost> thresholds;

  bool solved() const { return termination == Termination::solved; }
};

// Hard limits shared by every algorithm run.
struct RunLimits {
  Count expansion_cap = kUnlimited;
  double time_limit_s = 0;  // 0 disables
};

// Wraps a query so the total expansion count of a run stays under a cap.
// Budgets are clamped to what remains; a clamped query that runs out aborts.
class CappedQuery {
 public:
  CappedQuery(QueryFn inner, Count cap) : inner_(std::move(inner)), cap_(cap) {}

  QueryOutcome operator()(Cost limit, Count budget, Cost lower_bound);

  Count expansions() const { return spent_; }
  Count queries() const { return queries_; }

 private:
  QueryFn inner_;
  Count cap_;
  Count spent_ = 0;
  Count queries_ = 0;
};

}  // namespace ibex
