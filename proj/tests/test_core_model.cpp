#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ibex/core_model.hpp"
#include "ibex/rng.hpp"

using namespace ibex;

namespace {

const ValueList kFig1({1, 3, 5, 5, 8, 12, 13, 13, 15});

// brute-force n_exp: enumerate powers of two directly
Count n_exp_oracle(Cost eps, Cost x, Cost delta) {
  Count up = 1;
  for (Cost v = eps * 2; v < x; v *= 2) ++up;
  Count down = 0;
  for (Cost v = delta * 2; v <= x; v *= 2) ++down;
  return 1 + up + down;
}

}  // namespace

TEST_CASE("count_leq") {
  CHECK(count_leq(kFig1, 10.2) == 5);
  CHECK(count_leq(kFig1, 5) == 4);
  CHECK(count_leq(ValueList{}, 7) == 0);
  CHECK(count_leq(kFig1, 0.5) == 0);
  CHECK(count_leq(kFig1, 100) == 9);
}

TEST_CASE("c_crit") {
  CHECK(c_crit(kFig1, 3) == 5);
  CHECK(c_crit(kFig1, 100) == kInfinity);
  CHECK(c_crit(kFig1, 9) == kInfinity);
  CHECK(c_crit(ValueList({1.4, 1.5, 1.8, 2.9, 3.5, 3.6, 3.9, 4.5, 5, 6}), 7) == 4.5);
  // definition check against count_leq on every budget
  for (Count b = 0; b < 10; ++b) {
    Cost c = c_crit(kFig1, b);
    if (c == kInfinity) {
      CHECK(b >= kFig1.size());
      continue;
    }
    CHECK(count_leq(kFig1, c) > b);
    for (Cost v : kFig1.values())
      if (v < c) CHECK(count_leq(kFig1, v) <= b);
  }
}

TEST_CASE("gap bounds and delta") {
  auto g = gap_bounds(kFig1, 10.2);
  CHECK(g.floor == 8);
  CHECK(g.ceil == 12);
  CHECK(g.delta() == 4);
  g = gap_bounds(kFig1, 15);
  CHECK(g.floor == 15);
  CHECK(g.ceil == kInfinity);
  g = gap_bounds(kFig1, 0.5);
  CHECK(g.floor == 0);
  CHECK(g.ceil == 1);
  CHECK(delta_min(kFig1, 15) == 1);
  CHECK(delta_min(kFig1, 8) == 2);
  CHECK(delta_min(ValueList({4}), 4) == kInfinity);
}

TEST_CASE("n_exp") {
  CHECK(n_exp(1, 1, 1) == 2);
  CHECK(n_exp(1, 8, 2) == 6);
  CHECK(n_exp(1, 15, 1) == 8);
  CHECK(n_exp(1, 15, kInfinity) == 5);
  SplitMix64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Cost eps = 1 + rng.uniform() * 10;
    Cost x = eps + rng.uniform() * 1000;
    Cost delta = 0.01 + rng.uniform() * 50;
    CHECK(n_exp(eps, x, delta) == n_exp_oracle(eps, x, delta));
  }
  CHECK_THROWS_AS(n_exp(0, 1, 1), std::invalid_argument);
}

TEST_CASE("synthetic queries on the small list") {
  auto lim = synthetic_query(FeedbackMode::limited, kFig1, 15, 4, 3);
  REQUIRE(std::holds_alternative<Pruned>(lim));
  CHECK(std::get<Pruned>(lim).interval == CostInterval{4, kInfinity});
  CHECK(std::get<Pruned>(lim).n_used == 2);

  auto ext = synthetic_query(FeedbackMode::extended, kFig1, 15, 4, 3);
  REQUIRE(std::holds_alternative<Pruned>(ext));
  CHECK(std::get<Pruned>(ext).interval == CostInterval{5, kInfinity});
  CHECK(std::get<Pruned>(ext).n_used == 2);

  auto over = synthetic_query(FeedbackMode::extended, kFig1, 15, 9, 3);
  REQUIRE(std::holds_alternative<Pruned>(over));
  CHECK(std::get<Pruned>(over).interval == CostInterval{1, 8});
  CHECK(std::get<Pruned>(over).n_used == 3);
  CHECK(budget_exceeded(over));

  auto in = synthetic_query(FeedbackMode::integer, kFig1, 15, 4.5, 3);
  CHECK(std::get<Pruned>(in).interval == CostInterval{5, kInfinity});
  auto in_over = synthetic_query(FeedbackMode::integer, kFig1, 15, 9.5, 3);
  CHECK(std::get<Pruned>(in_over).interval == CostInterval{1, 9});

  auto done = synthetic_query(FeedbackMode::limited, kFig1, 15, 20, 9);
  REQUIRE(std::holds_alternative<SolutionFound>(done));
  CHECK(std::get<SolutionFound>(done).solution.cost == 15);
  CHECK(std::get<SolutionFound>(done).n_used == 9);

  CHECK_THROWS_AS(synthetic_query(FeedbackMode::limited, kFig1, 14, 4, 3), std::invalid_argument);
}

TEST_CASE("returned intervals contain c_crit") {
  SplitMix64 rng(11);
  for (int t = 0; t < 300; ++t) {
    std::vector<Cost> v;
    const int n = 1 + static_cast<int>(rng.below(30));
    for (int i = 0; i < n; ++i) v.push_back(1 + std::floor(rng.uniform() * 200) / 4);
    const Count pick = rng.below(v.size());
    const Count b = rng.below(v.size() + 2);
    const Cost c = 1 + rng.uniform() * 60;
    for (auto mode : {FeedbackMode::limited, FeedbackMode::integer, FeedbackMode::extended}) {
      // integer feedback presumes integral costs
      std::vector<Cost> w = v;
      if (mode == FeedbackMode::integer)
        for (Cost& x : w) x = std::ceil(x);
      ValueList a(w);
      const Cost c_star = a.values()[pick];
      const Cost crit = c_crit(a, b);
      auto out = synthetic_query(mode, a, c_star, c, b);
      CHECK(used_of(out) <= std::min<Count>(b, count_leq(a, c)));
      if (auto* p = std::get_if<Pruned>(&out)) {
        INFO(to_string(mode), " c=", c, " b=", b, " crit=", crit);
        if (crit < kInfinity) CHECK(p->interval.contains(crit));
      }
    }
  }
}

TEST_CASE("value list round trip and validation") {
  ValueList a({3.25, 1, 0.1 + 1.2, 7});
  CHECK(a.min() == 1);
  CHECK(ValueList::parse(a.serialize()).values() == a.values());
  CHECK_THROWS_AS(ValueList({0.5}), std::invalid_argument);
  CHECK_THROWS_AS(ValueList({std::nan("")}), std::invalid_argument);
  CHECK_THROWS(ValueList::parse("1\nabc\n"));
}

TEST_CASE("capped query") {
  QueryFn inner = make_synthetic_query(FeedbackMode::extended, kFig1, 15);
  CappedQuery q(inner, 5);
  auto first = q(4, 100, 1);  // n(4) = 2
  CHECK(used_of(first) == 2);
  CHECK(q.expansions() == 2);
  // only 3 left: a query needing 4 is clamped and the run aborts
  try {
    q(5, 100, 1);
    FAIL("expected abort");
  } catch (const SearchAborted& e) {
    CHECK(e.reason == Termination::expansion_cap);
  }
}

TEST_CASE("splitmix64 vectors") {
  SplitMix64 a(0);
  CHECK(a.next() == 0xe220a8397b1dcdafULL);
  CHECK(a.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(a.next() == 0x06c45d188009454fULL);
  SplitMix64 b(1234567);
  CHECK(b.next() == 0x599ed017fb08fc85ULL);
  CHECK(b.next() == 0x2c73f08458540fa5ULL);
  CHECK(derive_seed(1, 3) == 0x88bdd3fe783bb94dULL);
  SplitMix64 c(5);
  for (int i = 0; i < 1000; ++i) {
    auto v = c.range(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    double u = c.uniform();
    CHECK(u >= 0);
    CHECK(u < 1);
  }
}
