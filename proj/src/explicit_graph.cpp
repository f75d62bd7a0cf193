#include "ibex/domains/explicit_graph.hpp"

#include <stdexcept>

namespace ibex {

ExplicitGraph::ExplicitGraph(std::size_t num_states, State initial)
    : initial_(initial), adj_(num_states), h_(num_states, 0), goal_(num_states, 0) {
  if (initial >= num_states) throw std::invalid_argument("initial state out of range");
}

void ExplicitGraph::add_edge(State from, State to, Cost cost) {
  if (from >= adj_.size() || to >= adj_.size()) throw std::out_of_range("edge endpoint");
  if (!valid_cost(cost)) throw std::invalid_argument("edge cost must be >= 0");
  adj_[from].push_back({to, cost});
}

ExplicitGraph make_chain(std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("chain depth must be >= 1");
  ExplicitGraph g(depth + 1, 0);
  for (std::size_t i = 0; i < depth; ++i)
    g.add_edge(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i + 1), 1);
  g.set_goal(static_cast<std::uint32_t>(depth));
  return g;
}

ExplicitGraph make_mero(std::size_t d) {
  if (d < 2) throw std::invalid_argument("mero size must be >= 2");
  const auto n = static_cast<std::uint32_t>(d);
  const std::uint32_t m = n + 1;
  const std::uint32_t goal = 2 * n + 1;
  auto b = [&](std::uint32_t j) { return n + 1 + j; };
  ExplicitGraph g(2 * d + 2, 0);
  for (std::uint32_t i = 1; i <= n; ++i) g.add_edge(0, i, 1);
  for (std::uint32_t i = 1; i <= n; ++i) {
    g.add_edge(i, m, static_cast<Cost>(n - i + 1));
    g.set_heuristic(i, static_cast<Cost>(n + i - 1));
  }
  g.add_edge(m, b(1), 1);
  for (std::uint32_t j = 1; j + 1 < n; ++j) g.add_edge(b(j), b(j + 1), 1);
  g.add_edge(b(n - 1), goal, static_cast<Cost>(n - 1));
  g.set_goal(goal);
  return g;
}

}  // namespace ibex
