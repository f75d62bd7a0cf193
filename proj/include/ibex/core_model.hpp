#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ibex/cost.hpp"
#include "ibex/query.hpp"

namespace ibex {

// Sorted multiset of costs, every element >= 1.
class ValueList {
 public:
  ValueList() = default;
  explicit ValueList(std::vector<Cost> values);  // sorts; throws on values < 1 or NaN

  const std::vector<Cost>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  Cost min() const { return values_.front(); }
  Cost max() const { return values_.back(); }
  bool contains(Cost c) const;

  // one value per line, shortest round-trip decimal form
  std::string serialize() const;
  static ValueList parse(const std::string& text);

 private:
  std::vector<Cost> values_;
};

enum class FeedbackMode { limited, integer, extended };

std::string to_string(FeedbackMode m);

// n(C): elements <= C, with multiplicity
Count count_leq(const ValueList& a, Cost c);

// smallest v in A with n(v) > b, or +inf
Cost c_crit(const ValueList& a, Count b);

struct GapBounds {
  Cost floor;  // 0 when C < min A
  Cost ceil;   // +inf when C >= max A
  Cost delta() const { return ceil - floor; }
};

GapBounds gap_bounds(const ValueList& a, Cost c);

// min of delta(C) over distinct C in A with C <= c_star and a finite successor;
// +inf when no such C exists
Cost delta_min(const ValueList& a, Cost c_star);

// 1 + ceil(log2(x/eps)) clamped to >= 1, + floor(log2(x/delta)) clamped to >= 0
Count n_exp(Cost eps, Cost x, Cost delta);

QueryOutcome synthetic_query(FeedbackMode mode, const ValueList& a, Cost c_star, Cost c,
                             Count b);

// Binds the oracle to a list so it can be handed to the search loops.
QueryFn make_synthetic_query(FeedbackMode mode, ValueList a, Cost c_star);

}  // namespace ibex
