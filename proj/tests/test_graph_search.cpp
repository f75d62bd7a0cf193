#include <doctest.h>

#include "ibex/domains/explicit_graph.hpp"
#include "ibex/graph_search.hpp"
#include "oracles.hpp"

using namespace ibex;

namespace {

// w x w grid, unit moves right/down/left/up, Manhattan heuristic to the far corner
ExplicitGraph grid(std::uint32_t w) {
  ExplicitGraph g(w * w, 0);
  auto id = [w](std::uint32_t x, std::uint32_t y) { return y * w + x; };
  for (std::uint32_t y = 0; y < w; ++y)
    for (std::uint32_t x = 0; x < w; ++x) {
      if (x + 1 < w) g.add_edge(id(x, y), id(x + 1, y), 1);
      if (y + 1 < w) g.add_edge(id(x, y), id(x, y + 1), 1);
      if (x > 0) g.add_edge(id(x, y), id(x - 1, y), 1);
      if (y > 0) g.add_edge(id(x, y), id(x, y - 1), 1);
      g.set_heuristic(id(x, y), (w - 1 - x) + (w - 1 - y));
    }
  g.set_goal(id(w - 1, w - 1));
  return g;
}

}  // namespace

TEST_CASE("small Mero graph queries") {
  auto m = make_mero(4);
  CHECK(oracle::optimal_cost(m) == 8);
  GraphQuery<ExplicitGraph> q(m);
  auto all = q(1e9, kUnlimited);
  REQUIRE(std::holds_alternative<SolutionFound>(all));
  CHECK(std::get<SolutionFound>(all).solution.cost == 8);
  CHECK(replay(m, std::get<SolutionFound>(all).solution.actions) == 8);

  auto cut = q(4, kUnlimited);
  REQUIRE(std::holds_alternative<Pruned>(cut));
  CHECK(std::get<Pruned>(cut).interval == CostInterval{5, kInfinity});
  CHECK(std::get<Pruned>(cut).n_used == 1);
}

TEST_CASE("initial goal and the uncounted goal pop") {
  ExplicitGraph g(2, 0);
  g.add_edge(0, 1, 1);
  g.set_goal(0);
  GraphQuery<ExplicitGraph> q(g);
  auto out = q(5, kUnlimited);
  REQUIRE(std::holds_alternative<SolutionFound>(out));
  CHECK(std::get<SolutionFound>(out).solution.cost == 0);
  CHECK(std::get<SolutionFound>(out).n_used == 0);

  auto chain = make_chain(3);
  GraphQuery<ExplicitGraph> c(chain);
  auto found = c(100, kUnlimited);
  REQUIRE(std::holds_alternative<SolutionFound>(found));
  CHECK(std::get<SolutionFound>(found).n_used == 3);
  // budget 3 is enough: the goal is checked before the budget
  CHECK(std::holds_alternative<SolutionFound>(c(100, 3)));
  auto over = c(100, 2);
  REQUIRE(budget_exceeded(over));
  CHECK(std::get<Pruned>(over).interval == CostInterval{1, 2});
}

TEST_CASE("states are expanded at most once per query") {
  auto m = make_mero(30);
  GraphQuery<ExplicitGraph> q(m);
  q.record_expansions(true);
  auto out = q(1e9, kUnlimited);
  REQUIRE(std::holds_alternative<SolutionFound>(out));
  std::vector<std::uint32_t> seen = q.last_expanded();
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("BGS on random graphs matches the brute-force optimum") {
  SplitMix64 rng(77);
  for (int t = 0; t < 150; ++t) {
    const auto g = t % 2 ? oracle::random_graph(rng) : oracle::random_tree(rng);
    const auto best = oracle::optimal_cost(g);
    if (!best) continue;
    for (auto drv : {Driver::simple, Driver::enhanced, Driver::dovetail, Driver::dovetail_enhanced})
      for (bool add : {false, true}) {
        DriverConfig c;
        c.driver = drv;
        c.additive = add;
        auto r = bgs(g, c);
        REQUIRE(r.solved());
        CHECK(r.solution->cost == doctest::Approx(*best));
        CHECK(replay(g, r.solution->actions) == doctest::Approx(*best));
      }
  }
}

TEST_CASE("no reachable goal ends without a solution") {
  ExplicitGraph g(3, 0);
  g.add_edge(0, 1, 1);
  g.add_edge(1, 0, 1);
  g.set_goal(2);
  DriverConfig c;
  auto r = bgs(g, c);
  CHECK(r.termination == Termination::no_solution);
}

TEST_CASE("Mero expansions stay near linear") {
  DriverConfig c;
  const Count e100 = bgs(make_mero(100), c).expansions;
  const Count e1000 = bgs(make_mero(1000), c).expansions;
  const Count e10000 = bgs(make_mero(10000), c).expansions;
  CHECK(e100 <= 2 * 513);
  CHECK(e1000 <= 2 * 8821);
  CHECK(e10000 <= 2 * 84434);
  CHECK(static_cast<double>(e10000) / static_cast<double>(e1000) <= 15);

  DriverConfig d;
  d.driver = Driver::dovetail_enhanced;
  auto dov = bgs(make_mero(100), d);
  REQUIRE(dov.solved());
  CHECK(dov.solution->cost == 200);
  CHECK(dov.expansions <= 2 * 449);
  CHECK(2 * dov.expansions >= 449);
}

TEST_CASE("switch rule boundaries") {
  CHECK(should_switch_to_bgs(1000, 500));
  CHECK_FALSE(should_switch_to_bgs(1000, 499));
  CHECK_FALSE(should_switch_to_bgs(999, 999));
}

TEST_CASE("fallback leaves consistent problems to A*") {
  auto g = grid(40);
  auto plain = astar(g);
  auto fb = astar_with_bgs_fallback(g);
  CHECK_FALSE(fb.switched);
  CHECK(fb.result.expansions == plain.expansions);
  CHECK(fb.result.solution->cost == plain.solution->cost);
  CHECK(plain.reexpansions == 0);
}

TEST_CASE("fallback switches on the re-expansion worst case") {
  auto m = make_mero(1000);
  auto fb = astar_with_bgs_fallback(m);
  REQUIRE(fb.switched);
  REQUIRE(fb.result.solved());
  CHECK(fb.result.solution->cost == 2000);
  DriverConfig c;
  const Count scratch = bgs(m, c).expansions;
  CHECK(fb.result.expansions == fb.astar_expansions + scratch);
  CHECK(fb.astar_expansions >= 1000);
  CHECK(fb.astar_expansions <= 2000);
}
