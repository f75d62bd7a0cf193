#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace ibex {

using Cost = double;
using Count = std::uint64_t;

inline constexpr Cost kInfinity = std::numeric_limits<Cost>::infinity();
// budgets are expansion counts; this value stands for an unbounded budget
inline constexpr Count kUnlimited = std::numeric_limits<Count>::max();

struct CostInterval {
  Cost low = 0;
  Cost high = kInfinity;

  bool determined() const { return low >= high; }
  bool contains(Cost c) const { return low <= c && c <= high; }

  CostInterval intersect(const CostInterval& o) const {
    return {std::max(low, o.low), std::min(high, o.high)};
  }
  friend bool operator==(const CostInterval&, const CostInterval&) = default;
};

inline bool valid_cost(Cost c) { return !std::isnan(c) && c >= 0; }

inline Count saturating_add(Count a, Count b) {
  return a > kUnlimited - b ? kUnlimited : a + b;
}

inline Count saturating_mul(Count a, Count b) {
  if (a == 0 || b == 0) return 0;
  return a > kUnlimited / b ? kUnlimited : a * b;
}

// floor(alpha^k) clamped to kUnlimited
inline Count budget_power(double alpha, Count k) {
  double v = std::pow(alpha, static_cast<double>(k));
  if (!(v < 1.8e19)) return kUnlimited;
  return static_cast<Count>(v);
}

inline Count shift_left_saturating(Count r, Count k) {
  if (k >= 64) return r == 0 ? 0 : kUnlimited;
  if (r > (kUnlimited >> k)) return kUnlimited;
  return r << k;
}

}  // namespace ibex
