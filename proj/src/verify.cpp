#include "ibex/verify.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ibex/dovibex.hpp"
#include "ibex/exp_search.hpp"
#include "ibex/ibex.hpp"
#include "ibex/ubs.hpp"

namespace ibex {

namespace {

constexpr ValueLaw kLaws[] = {ValueLaw::uniform, ValueLaw::geometric_gap, ValueLaw::heavy_duplicate};

Count floor_log2(Count z) { return z == 0 ? 0 : static_cast<Count>(std::bit_width(z) - 1); }

Cost pick(SplitMix64& rng, const ValueList& a) { return a.values()[rng.below(a.size())]; }

std::string describe(const std::string& what, Cost c_star, Count got, Count bound) {
  std::ostringstream os;
  os.precision(17);
  os << what << ": C*=" << c_star << " measured=" << got << " bound=" << bound;
  return os.str();
}

struct Trial {
  VerifyReport& report;
  void check(bool ok, const std::string& what, const ValueList* list = nullptr) {
    ++report.checks;
    if (!ok) report.violations.push_back({what, list ? list->serialize() : std::string()});
  }
};

ValueList with_sentinel(const ValueList& a, Cost c_star) {
  if (c_star < a.max()) return a;
  std::vector<Cost> v = a.values();
  v.push_back(c_star + 1);
  return ValueList(std::move(v));
}

void thm1_trial(SplitMix64& rng, ValueLaw law, Trial& t) {
  for (bool integral : {false, true}) {
    const ValueList a = random_value_list(rng, law, integral);
    const Cost c_star = pick(rng, a);
    const FeedbackMode mode = integral ? FeedbackMode::integer : FeedbackMode::extended;
    SearchResult r = ibex_simple(make_synthetic_query(mode, a, c_star), a.min());
    const Count n_star = count_leq(a, c_star);
    const Cost gap = integral ? 1.0 : delta_min(a, c_star);
    const Count bound = 4 * n_star * n_exp(a.min(), c_star, gap);
    t.check(r.solved() && r.solution->cost == c_star, "ibex_simple " + to_string(mode) + " not optimal", &a);
    t.check(r.expansions <= bound,
            describe("ibex_simple " + to_string(mode) + " expansions", c_star, r.expansions, bound), &a);
  }
}

void prop12_trial(SplitMix64& rng, ValueLaw law, Trial& t) {
  const ValueList a = random_value_list(rng, law);
  const Cost c_star = pick(rng, a);
  const Count n_star = count_leq(a, c_star);
  const Count b = 1 + rng.below(2 * a.size());
  const Cost crit = c_crit(a, b);
  Count queries = 0;
  const QueryFn inner = make_synthetic_query(FeedbackMode::extended, a, c_star);
  const QueryFn counted = [&](Cost c, Count budget, Cost lb) {
    ++queries;
    return inner(c, budget, lb);
  };
  if (b >= n_star) {
    const Cost start = 1 + rng.uniform() * (c_star - 1);
    auto out = exp_search(start, b, counted);
    const Count bound = n_exp(start, c_star, crit - c_star);
    t.check(std::holds_alternative<SolutionFound>(out), "exp_search with b >= n* did not find the solution", &a);
    t.check(queries <= bound, describe("prop1 queries", c_star, queries, bound), &a);
  } else {
    const Cost start = 1 + rng.uniform() * (crit - 1);
    auto out = exp_search(start, b, counted);
    const Count bound = n_exp(start, crit, delta_min(a, c_star));
    auto* c = std::get_if<Critical>(&out);
    t.check(c && c->value == crit, "exp_search with b < n* did not return C_crit(b)", &a);
    t.check(queries <= bound, describe("prop2 queries", c_star, queries, bound), &a);
  }
}

void thm2_trial(SplitMix64& rng, Trial& t) {
  std::vector<Count> tau(64, kUnlimited);
  for (std::size_t j = 1; j < tau.size(); ++j)
    if (rng.uniform() < 0.7) tau[j] = 1 + rng.below(Count{1} << std::min<std::size_t>(j + 6, 40));
  const Count stop_at = 1 + rng.below(Count{1} << 18);
  std::vector<Count> used(64, 0), segment(64, 0);
  Count total = 0;
  Count last_t = 0;
  bool ordered = true;
  bool ok = true;
  bool corollary = true;
  auto run = [&](Count k, Count budget) {
    const Count r = ++segment[k];
    const Count tk = default_cost(k, r);
    if (tk < last_t) ordered = false;
    last_t = tk;
    const Count step = std::min(budget, tau[k] - used[k]);
    used[k] += step;
    total += step;
    Count sum = 0;
    Count top = 0;
    for (Count j = 1; j < 64 && (Count{1} << j) <= tk; ++j) {
      const Count tj = (tk >> j) << j;
      sum += std::min(tau[j], tj);
      top = j;
    }
    if (total > sum) ok = false;
    if (total > tk * top) corollary = false;
    if (total >= stop_at) return SegmentStatus::stop;
    return used[k] == tau[k] ? SegmentStatus::halted : SegmentStatus::running;
  };
  ubs(default_cost, run);
  t.check(ordered, "ubs executed pairs out of T order");
  t.check(ok, "ubs step total exceeded the sum of min(tau_j, T_j(k,r))");
  t.check(corollary, "ubs step total exceeded T(k,r) * max j");
}

void thm3_trial(SplitMix64& rng, ValueLaw law, Trial& t) {
  for (FeedbackMode mode : {FeedbackMode::limited, FeedbackMode::integer, FeedbackMode::extended}) {
    ValueList a = random_value_list(rng, law, mode == FeedbackMode::integer);
    const Cost c_star = pick(rng, a);
    a = with_sentinel(a, c_star);
    const Count n_star = count_leq(a, c_star);
    const Count z = 2 * n_star * n_exp(a.min(), c_star, gap_bounds(a, c_star).delta());
    const Count bound = z * floor_log2(z);
    SearchResult r = dovibex(make_synthetic_query(mode, a, c_star), a.min());
    t.check(r.solved() && r.solution->cost == c_star, "dovibex " + to_string(mode) + " not optimal", &a);
    t.check(r.expansions <= bound,
            describe("dovibex " + to_string(mode) + " expansions", c_star, r.expansions, bound), &a);
  }
}

void thm4_trial(SplitMix64& rng, ValueLaw law, Trial& t) {
  const ValueList a = random_value_list(rng, law);
  const Cost c_star = pick(rng, a);
  const Count n_star = count_leq(a, c_star);
  const Count r1 = n_exp(a.min(), c_star, delta_min(a, c_star));
  const Count r2 = n_exp(a.min(), c_star, gap_bounds(a, c_star).delta());
  const Count bound = 2 * n_star * (r1 + r2 * (1 + floor_log2(r2)));
  SearchResult r = dovibex(make_synthetic_query(FeedbackMode::extended, a, c_star), a.min());
  t.check(r.solved() && r.solution->cost == c_star, "dovibex extended not optimal", &a);
  t.check(r.expansions <= bound, describe("dovibex extended expansions", c_star, r.expansions, bound), &a);
}

}  // namespace

ValueList random_value_list(SplitMix64& rng, ValueLaw law, bool integral) {
  const auto n = static_cast<std::size_t>(rng.range(1, 500));
  std::vector<Cost> v;
  v.reserve(n);
  switch (law) {
    case ValueLaw::uniform: {
      const double hi = std::pow(10.0, 3 * rng.uniform());
      for (std::size_t i = 0; i < n; ++i) v.push_back(1 + hi * rng.uniform());
      break;
    }
    case ValueLaw::geometric_gap: {
      double x = 1 + 3 * rng.uniform();
      for (std::size_t i = 0; i < n; ++i) {
        v.push_back(x);
        if (rng.uniform() >= 0.1) x += 0.01 * std::pow(1000.0, rng.uniform());
      }
      break;
    }
    case ValueLaw::heavy_duplicate: {
      std::vector<Cost> distinct(static_cast<std::size_t>(rng.range(1, 10)));
      for (auto& d : distinct) d = 1 + 50 * rng.uniform();
      for (std::size_t i = 0; i < n; ++i) v.push_back(distinct[rng.below(distinct.size())]);
      break;
    }
  }
  if (integral)
    for (auto& x : v) x = std::ceil(x);
  return ValueList(std::move(v));
}

BoundSuite parse_suite(const std::string& name) {
  if (name == "thm1") return BoundSuite::thm1;
  if (name == "prop12") return BoundSuite::prop12;
  if (name == "thm2") return BoundSuite::thm2;
  if (name == "thm3") return BoundSuite::thm3;
  if (name == "thm4") return BoundSuite::thm4;
  throw std::invalid_argument("unknown suite: " + name);
}

std::string to_string(BoundSuite s) {
  switch (s) {
    case BoundSuite::thm1: return "thm1";
    case BoundSuite::prop12: return "prop12";
    case BoundSuite::thm2: return "thm2";
    case BoundSuite::thm3: return "thm3";
    case BoundSuite::thm4: return "thm4";
  }
  return "?";
}

VerifyReport verify_bounds(BoundSuite suite, Count trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  VerifyReport report{suite, trials, 0, {}};
  Trial t{report};
  for (Count i = 0; i < trials; ++i) {
    SplitMix64 rng(derive_seed(seed, i));
    const ValueLaw law = kLaws[i % 3];
    switch (suite) {
      case BoundSuite::thm1: thm1_trial(rng, law, t); break;
      case BoundSuite::prop12: prop12_trial(rng, law, t); break;
      case BoundSuite::thm2: thm2_trial(rng, t); break;
      case BoundSuite::thm3: thm3_trial(rng, law, t); break;
      case BoundSuite::thm4: thm4_trial(rng, law, t); break;
    }
  }
  return report;
}

}  // namespace ibex
