#include "ibex/ubs.hpp"

#include <queue>
#include <tuple>
#include <vector>

namespace ibex {

Count default_cost(Count k, Count r) { return shift_left_saturating(r, k); }

UbsStats ubs(const CostFunction& cost, const ProgramRunner& run_prog) {
  using Entry = std::tuple<Count, Count, Count>;  // (T(k,r), k, r)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  queue.emplace(cost(1, 1), 1, 1);
  UbsStats stats;
  while (!queue.empty()) {
    auto [t, k, r] = queue.top();
    queue.pop();
    if (r == 1) queue.emplace(cost(k + 1, 1), k + 1, 1);
    const Count budget = t - cost(k, r - 1);
    ++stats.segments;
    SegmentStatus st = run_prog(k, budget);
    if (st == SegmentStatus::stop) {
      stats.stopped = true;
      return stats;
    }
    if (st == SegmentStatus::running) queue.emplace(cost(k, r + 1), k, r + 1);
  }
  return stats;
}

}  // namespace ibex
