#include <doctest.h>

#include <cmath>

#include "ibex/baselines.hpp"
#include "ibex/best_first.hpp"
#include "ibex/domains/coconut.hpp"
#include "ibex/domains/explicit_graph.hpp"
#include "oracles.hpp"

using namespace ibex;

namespace {

Count mero_closed_form(Count d) { return 3 * d * d / 4 + 3 * d / 2 + 2; }

}  // namespace

TEST_CASE("best-first counts on the re-expansion worst case") {
  for (Count d : {100, 1000}) {
    auto m = make_mero(d);
    const Count want = d == 100 ? 7652 : 751502;
    CHECK(mero_closed_form(d) == want);
    auto a = astar(m);
    auto b = algorithm_b(m);
    auto bp = algorithm_b_prime(m);
    for (const auto* r : {&a, &b, &bp}) {
      REQUIRE(r->solved());
      CHECK(r->solution->cost == 2.0 * d);
      CHECK(r->expansions == want);
    }
    CHECK(a.reexpansions > 0);
  }
}

TEST_CASE("B prime with both pathmax rules") {
  auto m = make_mero(100);
  auto both = algorithm_b_prime(m, {}, Pathmax{true, true});
  REQUIRE(both.solved());
  CHECK(both.solution->cost == 200);
  CHECK(both.expansions == 6427);
}

TEST_CASE("threshold deepening on the chain") {
  for (Count n : {1, 5, 100, 1000}) {
    auto r = ida_star(make_chain(n));
    REQUIRE(r.solved());
    CHECK(r.expansions == n * (n + 1) / 2 + n);
    CHECK(r.solution->cost == static_cast<Cost>(n));
  }
}

TEST_CASE("EDA* thresholds on a short chain") {
  auto r = eda_star(make_chain(10), 2);
  REQUIRE(r.solved());
  CHECK(r.solution->cost == 10);
  CHECK(r.thresholds == std::vector<Cost>{2, 4, 8, 16});
  CHECK_THROWS_AS(eda_star(make_chain(3), 1.0), std::invalid_argument);
}

TEST_CASE("EDA* skips thresholds that admit nothing new") {
  // h(init) = 9 puts the first useful threshold at 16
  ExplicitGraph g(2, 0);
  g.add_edge(0, 1, 20);
  g.set_heuristic(0, 9);
  g.set_goal(1);
  auto r = eda_star(g, 2);
  REQUIRE(r.solved());
  CHECK(r.thresholds == std::vector<Cost>{16, 32});
}

TEST_CASE("cost-ratio histogram") {
  CrHistogram h(10, 10);
  // ranges are (10 * 10^(i/10), 10 * 10^((i+1)/10)]
  h.add(11);
  h.add(11.5);
  h.add(30);
  h.add(500);
  CHECK(h.next(1) == doctest::Approx(10 * std::pow(10.0, 0.1)));
  CHECK(h.next(3) == doctest::Approx(10 * std::pow(10.0, 0.5)));
  CHECK(h.next(4) == 500);  // overflow lands in the last range
  CHECK(h.next(100) == 500);
  CrHistogram sparse(10, 10);
  sparse.add(12);
  CHECK(sparse.next(50) == doctest::Approx(10 * std::pow(10.0, 0.1)));
  CrHistogram zero(0, 10);
  zero.add(3);
  CHECK(zero.next(1) == 0);
}

TEST_CASE("IDA*_CR grows its thresholds") {
  auto r = ida_star_cr(make_chain(2000));
  REQUIRE(r.solved());
  CHECK(r.solution->cost == 2000);
  CHECK(r.thresholds.size() < 200);
  for (std::size_t i = 1; i < r.thresholds.size(); ++i) CHECK(r.thresholds[i] > r.thresholds[i - 1]);
}

TEST_CASE("every baseline returns the brute-force optimum") {
  SplitMix64 rng(303);
  for (int t = 0; t < 200; ++t) {
    const auto g = t % 2 ? oracle::random_graph(rng) : oracle::random_tree(rng);
    const auto best = oracle::optimal_cost(g);
    if (!best) continue;
    std::vector<SearchResult> runs{ida_star(g),       eda_star(g, 2),       ida_star_cr(g),
                                   astar(g),          algorithm_b(g),       algorithm_b_prime(g),
                                   ida_star(g, {}, DuplicateCheck::path)};
    for (const auto& r : runs) {
      REQUIRE(r.solved());
      CHECK(r.solution->cost == doctest::Approx(*best));
      CHECK(replay(g, r.solution->actions) == doctest::Approx(*best));
    }
  }
}

TEST_CASE("caps stop the baselines") {
  RunLimits lim;
  lim.expansion_cap = 500;
  auto chain = make_chain(1000);
  for (const auto& r : {ida_star(chain, lim), eda_star(chain, 2, lim), ida_star_cr(chain, 50, 2, lim)}) {
    CHECK(r.termination == Termination::expansion_cap);
    CHECK(r.expansions <= 500);
  }
  lim.expansion_cap = 100;
  auto a = astar(make_mero(100), lim);
  CHECK(a.termination == Termination::expansion_cap);
  CHECK(a.expansions <= 100);

  Coconut c(1, 3000, {});
  RunLimits t;
  t.time_limit_s = 0.01;
  CHECK(ida_star(c, t).termination == Termination::time_limit);
}
