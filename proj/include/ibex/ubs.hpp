#pragma once

#include <functional>

#include "ibex/cost.hpp"

namespace ibex {

enum class SegmentStatus { running, halted, stop };

// Cumulative steps granted to program k after r segments. T(k, 0) must be 0.
using CostFunction = std::function<Count(Count k, Count r)>;

// Runs one segment of program k with the given step budget.
// `stop` ends the whole schedule (a program found the answer).
using ProgramRunner = std::function<SegmentStatus(Count k, Count budget)>;

// r * 2^k, saturating
Count default_cost(Count k, Count r);

struct UbsStats {
  Count segments = 0;
  bool stopped = false;  // false: every program halted
};

// Executes pairs (k, r) in order of T(k, r), ties toward smaller k then r.
// Program k + 1 is spawned when program k starts its first segment.
UbsStats ubs(const CostFunction& cost, const ProgramRunner& run_prog);

}  // namespace ibex
