#include "ibex/core_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace ibex {

std::string to_string(Termination t) {
  switch (t) {
    case Termination::solved: return "solved";
    case Termination::no_solution: return "no_solution";
    case Termination::expansion_cap: return "expansion_cap";
    case Termination::time_limit: return "time_limit";
  }
  return "?";
}

std::string to_string(FeedbackMode m) {
  switch (m) {
    case FeedbackMode::limited: return "limited";
    case FeedbackMode::integer: return "integer";
    case FeedbackMode::extended: return "extended";
  }
  return "?";
}

ValueList::ValueList(std::vector<Cost> values) : values_(std::move(values)) {
  for (Cost v : values_) {
    if (std::isnan(v) || v < 1) throw std::invalid_argument("value list entries must be >= 1");
  }
  std::sort(values_.begin(), values_.end());
}

bool ValueList::contains(Cost c) const {
  return std::binary_search(values_.begin(), values_.end(), c);
}

std::string ValueList::serialize() const {
  std::string out;
  char buf[64];
  for (Cost v : values_) {
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, end);
    out.push_back('\n');
  }
  return out;
}

ValueList ValueList::parse(const std::string& text) {
  std::vector<Cost> vals;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    Cost v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + first, line.data() + last + 1, v);
    if (ec != std::errc() || ptr != line.data() + last + 1)
      throw std::invalid_argument("bad value list line: " + line);
    vals.push_back(v);
  }
  return ValueList(std::move(vals));
}

Count count_leq(const ValueList& a, Cost c) {
  const auto& v = a.values();
  return static_cast<Count>(std::upper_bound(v.begin(), v.end(), c) - v.begin());
}

Cost c_crit(const ValueList& a, Count b) {
  // n(v) > b first happens at the element with sorted index b
  if (b >= a.size()) return kInfinity;
  return a.values()[b];
}

GapBounds gap_bounds(const ValueList& a, Cost c) {
  const auto& v = a.values();
  auto it = std::upper_bound(v.begin(), v.end(), c);
  GapBounds g;
  g.ceil = it == v.end() ? kInfinity : *it;
  g.floor = it == v.begin() ? 0 : *(it - 1);
  return g;
}

Cost delta_min(const ValueList& a, Cost c_star) {
  const auto& v = a.values();
  Cost best = kInfinity;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] > c_star) break;
    if (v[i + 1] > v[i]) best = std::min(best, v[i + 1] - v[i]);
  }
  return best;
}

Count n_exp(Cost eps, Cost x, Cost delta) {
  if (!(eps > 0) || !(delta > 0)) throw std::invalid_argument("n_exp needs eps > 0 and delta > 0");
  // smallest m >= 1 with eps * 2^m >= x; scaling by powers of two is exact
  Count up = 1;
  while (std::ldexp(eps, static_cast<int>(up)) < x) ++up;
  // largest m >= 0 with delta * 2^m <= x, or 0 when none
  Count down = 0;
  if (delta < kInfinity) {
    while (std::ldexp(delta, static_cast<int>(down) + 1) <= x) ++down;
  }
  return 1 + up + down;
}

QueryOutcome synthetic_query(FeedbackMode mode, const ValueList& a, Cost c_star, Cost c,
                             Count b) {
  if (!a.contains(c_star)) throw std::invalid_argument("C* must be an element of A");
  const Count n = count_leq(a, c);
  const Count n_star = count_leq(a, c_star);
  if (n_star <= n && n <= b) return SolutionFound{Solution{c_star, {}}, n};

  const bool sufficient = n <= b;
  const Count used = std::min(b, n);
  CostInterval iv;
  switch (mode) {
    case FeedbackMode::limited:
      iv = sufficient ? CostInterval{c, kInfinity} : CostInterval{1, c};
      break;
    case FeedbackMode::integer:
      iv = sufficient ? CostInterval{std::floor(c) + 1, kInfinity}
                      : CostInterval{1, std::floor(c)};
      break;
    case FeedbackMode::extended: {
      auto g = gap_bounds(a, c);
      iv = sufficient ? CostInterval{g.ceil, kInfinity} : CostInterval{1, g.floor};
      break;
    }
  }
  return Pruned{iv, used};
}

QueryFn make_synthetic_query(FeedbackMode mode, ValueList a, Cost c_star) {
  return [mode, a = std::move(a), c_star](Cost c, Count b, Cost) {
    return synthetic_query(mode, a, c_star, c, b);
  };
}

QueryOutcome CappedQuery::operator()(Cost limit, Count budget, Cost lower_bound) {
  if (spent_ >= cap_) throw SearchAborted(Termination::expansion_cap);
  const Count remaining = cap_ - spent_;
  const Count granted = std::min(budget, remaining);
  ++queries_;
  QueryOutcome out = inner_(limit, granted, lower_bound);
  spent_ = saturating_add(spent_, used_of(out));
  if (granted < budget && budget_exceeded(out)) throw SearchAborted(Termination::expansion_cap);
  return out;
}

}  // namespace ibex
