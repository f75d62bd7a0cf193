#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <map>
#include <queue>
#include <unordered_map>

#include "ibex/baselines.hpp"
#include "ibex/count_below.hpp"
#include "ibex/domains/coconut.hpp"
#include "ibex/domains/explicit_graph.hpp"
#include "ibex/domains/sliding_tile.hpp"
#include "ibex/domains/topspin.hpp"
#include "ibex/graph_search.hpp"
#include "ibex/ibex.hpp"
#include "ibex/tree_search.hpp"
#include "oracles.hpp"

using namespace ibex;

namespace {

// exact cost-to-goal for every state within `bound`, by Dijkstra outward from
// the goal; valid because every move here is its own inverse at the same price
template <class D>
std::unordered_map<std::uint64_t, Cost> ball(const D& d, typename D::State goal, Cost bound,
                                             std::uint64_t (*key)(const typename D::State&)) {
  using S = typename D::State;
  using Item = std::pair<Cost, S>;
  auto cmp = [](const Item& a, const Item& b) { return a.first > b.first; };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> open(cmp);
  std::unordered_map<std::uint64_t, Cost> dist;
  open.emplace(0, goal);
  std::vector<Edge<S>> kids;
  while (!open.empty()) {
    auto [g, s] = open.top();
    open.pop();
    if (dist.count(key(s))) continue;
    dist[key(s)] = g;
    d.successors(s, kids);
    for (auto& e : kids)
      if (g + e.cost <= bound && !dist.count(key(e.state))) open.emplace(g + e.cost, e.state);
  }
  return dist;
}

std::uint64_t tile_key(const FifteenPuzzle::State& s) { return s.tiles; }
std::uint64_t spin_key(const TopSpin::State& s) { return s.packed; }

std::array<int, 16> goal_cells() {
  std::array<int, 16> c{};
  for (int i = 0; i < 16; ++i) c[i] = i;
  return c;
}

}  // namespace

TEST_CASE("shift transform") {
  auto chain = make_chain(6);
  Shifted<ExplicitGraph> sh(chain);
  CHECK(sh.active());
  CHECK(sh.offset() == 1);
  std::vector<Edge<Shifted<ExplicitGraph>::State>> out;
  sh.successors(sh.initial_state(), out);
  REQUIRE(out.size() == 1);
  CHECK(out[0].cost == 1);
  CHECK(sh.heuristic(sh.initial_state()) == 1);

  ExplicitGraph g(2, 0);
  g.add_edge(0, 1, 3);
  g.set_heuristic(0, 0.25);
  g.set_goal(1);
  Shifted<ExplicitGraph> partial(g);
  CHECK(partial.offset() == 0.75);
  TreeQuery<Shifted<ExplicitGraph>> q(partial);
  auto r = ibex_simple([&](Cost c, Count b, Cost lb) { return q(c, b, lb); }, 1);
  REQUIRE(r.solved());
  CHECK(r.solution->cost == 3.75);
  CHECK(partial.unshift(*r.solution).cost == 3);

  ExplicitGraph high(2, 0);
  high.set_heuristic(0, 2);
  Shifted<ExplicitGraph> none(high);
  CHECK_FALSE(none.active());
  CHECK_FALSE(none.initial_state().artificial);
}

TEST_CASE("chain") {
  auto one = make_chain(1);
  CHECK(oracle::optimal_cost(one) == 1);
  auto five = ida_star(make_chain(5));
  REQUIRE(five.solved());
  CHECK(five.expansions == 20);
  CHECK(five.thresholds.size() == 6);
  DriverConfig c;
  auto r = bts(make_chain(8), c);
  CHECK(r.solution->cost == 8);
}

TEST_CASE("Mero structure") {
  for (std::size_t d : {2, 3, 7}) {
    auto m = make_mero(d);
    CHECK(m.num_states() == 2 * d + 2);
    CHECK(oracle::optimal_cost(m) == 2.0 * d);
    // heuristic is admissible
    auto hstar = oracle::distance_to_goal(m);
    for (std::uint32_t s = 0; s < m.num_states(); ++s) CHECK(m.heuristic(s) <= hstar[s]);
    CHECK(astar(m).solution->cost == 2.0 * d);
  }
  auto m = make_mero(5);
  CHECK(m.heuristic(3) == 5 + 3 - 1);
  CHECK(m.edges(0).size() == 5);
}

TEST_CASE("count below") {
  CHECK(count_below(make_mero(100), 200, CountMode::graph) == 200);
  for (std::size_t n : {1, 4, 30}) {
    auto chain = make_chain(n);
    Shifted<ExplicitGraph> sh(chain);
    CHECK(count_below(sh, static_cast<Cost>(n) + 1, CountMode::tree) == n + 1);
    CHECK(count_below(sh, 0, CountMode::tree) == 0);
  }
  CHECK_FALSE(count_below(make_chain(100), 1000, CountMode::tree, 10).has_value());
}

TEST_CASE("fifteen puzzle basics") {
  auto goal = goal_cells();
  FifteenPuzzle p(goal);
  CHECK(p.is_goal(p.initial_state()));
  CHECK(p.heuristic(p.initial_state()) == 0);
  CHECK(FifteenPuzzle::unpack(FifteenPuzzle::pack(goal)) == goal);
  CHECK(FifteenPuzzle::solvable(goal));
  auto swapped = goal;
  std::swap(swapped[1], swapped[2]);
  CHECK_FALSE(FifteenPuzzle::solvable(swapped));
  CHECK_THROWS(FifteenPuzzle(swapped));
  auto r = ida_star(p);
  CHECK(r.solved());
  CHECK(r.solution->cost == 0);
  CHECK(r.expansions == 0);

  std::vector<Edge<FifteenPuzzle::State>> kids;
  p.successors(p.initial_state(), kids);
  CHECK(kids.size() == 2);  // blank in a corner
  CHECK(FifteenPuzzle::move_cost(3, TileCost::unit) == 1);
  CHECK(FifteenPuzzle::move_cost(3, TileCost::real) == doctest::Approx(1.25));

  auto corpus = read_puzzle_instances(IBEX_DATA_DIR "/fifteen_puzzle_100.txt");
  CHECK(corpus.size() == 100);
  for (const auto& c : corpus) CHECK(FifteenPuzzle::solvable(c));
}

TEST_CASE("puzzle heuristics are admissible near the goal") {
  for (auto model : {TileCost::unit, TileCost::real}) {
    FifteenPuzzle p(goal_cells(), model);
    const Cost bound = model == TileCost::unit ? 10 : 16;
    auto dist = ball(p, p.initial_state(), bound, tile_key);
    CHECK(dist.size() > 1000);
    // walk outward and check every state seen
    SplitMix64 rng(4);
    std::vector<Edge<FifteenPuzzle::State>> kids;
    for (int t = 0; t < 300; ++t) {
      FifteenPuzzle::State s = p.initial_state();
      for (int i = 0; i < 8; ++i) {
        p.successors(s, kids);
        s = kids[rng.below(kids.size())].state;
      }
      auto it = dist.find(s.tiles);
      REQUIRE(it != dist.end());
      CHECK(p.heuristic(s) <= it->second + 1e-9);
    }
  }
}

TEST_CASE("puzzle search matches uniform-cost search") {
  SplitMix64 rng(10);
  FifteenPuzzle base(goal_cells());
  auto dist = ball(base, base.initial_state(), 14, tile_key);
  std::vector<Edge<FifteenPuzzle::State>> kids;
  for (int t = 0; t < 20; ++t) {
    FifteenPuzzle::State s = base.initial_state();
    for (int i = 0; i < 14; ++i) {
      base.successors(s, kids);
      s = kids[rng.below(kids.size())].state;
    }
    FifteenPuzzle p(FifteenPuzzle::unpack(s));
    const Cost want = dist.at(s.tiles);
    CHECK(ida_star(p).solution->cost == want);
    CHECK(astar(p).solution->cost == want);
    DriverConfig c;
    CHECK(bts(p, c).solution->cost == want);
    CHECK(bgs(p, c).solution->cost == want);
  }
}

TEST_CASE("coconut") {
  Coconut c(2, 4, {1, 3});
  CHECK(c.optimal_cost() == doctest::Approx(4.2));
  CHECK(c.heuristic(c.initial_state()) == 1);
  std::vector<Edge<Coconut::State>> kids;
  c.successors(c.initial_state(), kids);
  REQUIRE(kids.size() == 3);
  for (auto& e : kids) CHECK(e.cost == 1);
  auto on_trunk = kids[1].state;
  CHECK(on_trunk.on_goal_path);
  CHECK_FALSE(kids[0].state.on_goal_path);
  c.successors(on_trunk, kids);
  CHECK(kids[0].cost == 8);
  CHECK(kids[1].cost == 1);
  CHECK(kids[2].cost == 8);

  DriverConfig cfg;
  auto r = bts(c, cfg);
  REQUIRE(r.solved());
  CHECK(r.solution->cost == doctest::Approx(4.2));
  CHECK(replay(c, r.solution->actions) == doctest::Approx(4.2));
  CHECK(ida_star(c).solution->cost == doctest::Approx(4.2));

  auto a = Coconut::from_seed(99);
  auto b = Coconut::from_seed(99);
  CHECK(a.trunk_length() == b.trunk_length());
  CHECK(a.suffix() == b.suffix());
  CHECK(a.trunk_length() >= 1);
  CHECK(a.trunk_length() <= 10000);
  CHECK_THROWS(Coconut(4, 3, {}));
}

TEST_CASE("topspin moves and pattern databases") {
  auto goal = TopSpin::goal();
  for (int a = 0; a < kTopSpinSize; ++a) CHECK(TopSpin::apply(TopSpin::apply(goal, a), a) == goal);
  auto t = TopSpin::unpack(TopSpin::apply(goal, 10));
  CHECK(t[10] == 1);
  CHECK(t[11] == 0);
  CHECK(t[0] == 11);
  CHECK(t[1] == 10);

  auto costs = TopSpin::costs_from_seed(3);
  for (Cost c : costs) {
    CHECK(c >= 40);
    CHECK(c <= 60);
    CHECK(c == std::floor(c));
  }
  const auto dir = std::filesystem::temp_directory_path() / "ibex_pdb_test";
  std::filesystem::remove_all(dir);
  auto fresh = TopSpin::from_seed(3, dir.string());
  auto cached = TopSpin::from_seed(3, dir.string());
  CHECK(fresh.initial_state() == cached.initial_state());
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < kPdbEntries; i += 97)
      CHECK(fresh.pdbs()[k].at(i) == cached.pdbs()[k].at(i));
  CHECK_FALSE(PatternDatabase::load((dir / "missing.pdb").string(), 3, {0, 1, 2, 3}).has_value());
  std::filesystem::remove_all(dir);

  auto at_goal = fresh.with_start(goal);
  CHECK(at_goal.heuristic(goal) == 0);
  CHECK(astar(at_goal).expansions == 1);

  auto dist = ball(fresh, goal, 3 * 40, spin_key);
  for (const auto& [key, d] : dist) CHECK(fresh.heuristic(TopSpin::State{key}) <= d);
}

TEST_CASE("topspin searches agree") {
  auto ts = TopSpin::from_seed(derive_seed(1, 3));
  auto ref = astar(ts);
  REQUIRE(ref.solved());
  DriverConfig c;
  TreeQueryOptions o;
  o.duplicates = DuplicateCheck::parent;
  auto r = bts(ts, c, o);
  REQUIRE(r.solved());
  CHECK(r.solution->cost == ref.solution->cost);
  CHECK(replay(ts, r.solution->actions) == ref.solution->cost);
}
