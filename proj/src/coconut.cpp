#include "ibex/domains/coconut.hpp"

#include <stdexcept>

#include "ibex/rng.hpp"

namespace ibex {

namespace {

std::uint64_t extend_id(std::uint64_t id, int action) {
  SplitMix64 g(id * 4 + static_cast<std::uint64_t>(action));
  return g.next();
}

}  // namespace

Coconut::Coconut(int trunk_action, std::uint32_t trunk_length, std::vector<std::uint8_t> suffix)
    : trunk_(trunk_action), d_(trunk_length), suffix_(std::move(suffix)) {
  if (trunk_ < 1 || trunk_ > 3) throw std::invalid_argument("trunk action must be 1..3");
  if (d_ < 1) throw std::invalid_argument("trunk length must be >= 1");
  for (auto a : suffix_)
    if (a < 1 || a > 3) throw std::invalid_argument("suffix actions must be 1..3");
}

Coconut Coconut::from_seed(std::uint64_t seed) {
  SplitMix64 g(seed);
  const int trunk = static_cast<int>(g.range(1, 3));
  const auto d = static_cast<std::uint32_t>(g.range(1, 10000));
  const auto q = g.geometric(0.25);
  std::vector<std::uint8_t> suffix(q);
  for (auto& a : suffix) a = static_cast<std::uint8_t>(g.range(1, 3));
  return Coconut(trunk, d, std::move(suffix));
}

Cost Coconut::optimal_cost() const {
  Cost c = 0;
  for (std::uint32_t i = 0; i < d_; ++i) c += 1;
  for (std::size_t i = 0; i < suffix_.size(); ++i) c += 0.1;
  return c;
}

int Coconut::goal_action(std::uint32_t depth) const {
  return depth < d_ ? trunk_ : suffix_[depth - d_];
}

void Coconut::successors(const State& s, std::vector<Edge<State>>& out) const {
  out.clear();
  const bool past_goal = s.depth >= d_ + suffix_.size();
  for (int a = 1; a <= 3; ++a) {
    Cost c;
    if (s.depth == 0)
      c = 1;
    else if (s.depth < d_)
      c = a == s.last ? 1 : 2.0 * d_;
    else
      c = 0.1;
    State t;
    t.depth = s.depth + 1;
    t.last = static_cast<std::uint8_t>(a);
    t.on_goal_path = s.on_goal_path && !past_goal && goal_action(s.depth) == a;
    t.path_id = extend_id(s.path_id, a);
    out.push_back({t, c});
  }
}

}  // namespace ibex
