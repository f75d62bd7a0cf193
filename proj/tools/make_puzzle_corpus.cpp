// Writes seeded random solvable 15-puzzle instances, one per line.
//   make-puzzle-corpus <count> <seed> > data/fifteen_puzzle_100.txt

#include <array>
#include <cstdlib>
#include <iostream>
#include <utility>

#include "ibex/domains/sliding_tile.hpp"
#include "ibex/rng.hpp"

int main(int argc, char** argv) {
  const int count = argc > 1 ? std::atoi(argv[1]) : 100;
  const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 15;
  ibex::SplitMix64 rng(seed);
  for (int n = 0; n < count;) {
    std::array<int, 16> cells{};
    for (int i = 0; i < 16; ++i) cells[i] = i;
    for (int i = 15; i > 0; --i) std::swap(cells[i], cells[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    if (!ibex::FifteenPuzzle::solvable(cells)) continue;
    for (int i = 0; i < 16; ++i) std::cout << cells[i] << (i == 15 ? '\n' : ' ');
    ++n;
  }
}
