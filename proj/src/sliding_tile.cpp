#include "ibex/domains/sliding_tile.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ibex {

namespace {

int tile_at(std::uint64_t tiles, int cell) { return static_cast<int>((tiles >> (4 * cell)) & 15); }

}  // namespace

bool FifteenPuzzle::solvable(const std::array<int, 16>& cells) {
  std::array<bool, 16> seen{};
  for (int v : cells) {
    if (v < 0 || v > 15 || seen[v]) return false;
    seen[v] = true;
  }
  // every move swaps the blank with a neighbour: one transposition, and the
  // blank's distance to cell 0 changes parity
  int inversions = 0;
  for (int i = 0; i < 16; ++i)
    for (int j = i + 1; j < 16; ++j)
      if (cells[i] > cells[j]) ++inversions;
  int blank = 0;
  while (cells[blank] != 0) ++blank;
  const int dist = blank / 4 + blank % 4;
  return inversions % 2 == dist % 2;
}

FifteenPuzzle::State FifteenPuzzle::pack(const std::array<int, 16>& cells) {
  State s;
  for (int i = 0; i < 16; ++i) {
    s.tiles |= static_cast<std::uint64_t>(cells[i]) << (4 * i);
    if (cells[i] == 0) s.blank = static_cast<std::uint8_t>(i);
  }
  return s;
}

std::array<int, 16> FifteenPuzzle::unpack(const State& s) {
  std::array<int, 16> c{};
  for (int i = 0; i < 16; ++i) c[i] = tile_at(s.tiles, i);
  return c;
}

Cost FifteenPuzzle::move_cost(int tile, TileCost model) {
  return model == TileCost::unit ? 1.0 : 1.0 + 1.0 / (tile + 1);
}

FifteenPuzzle::FifteenPuzzle(const std::array<int, 16>& cells, TileCost model)
    : start_(pack(cells)), model_(model) {
  if (!solvable(cells)) throw std::invalid_argument("unsolvable 15-puzzle instance");
  for (int t = 1; t < 16; ++t)
    for (int c = 0; c < 16; ++c) {
      const int md = std::abs(t / 4 - c / 4) + std::abs(t % 4 - c % 4);
      weight_[t][c] = md * move_cost(t, model);
    }
}

Cost FifteenPuzzle::heuristic(const State& s) const {
  Cost h = 0;
  for (int c = 0; c < 16; ++c) {
    const int t = tile_at(s.tiles, c);
    if (t != 0) h += weight_[t][c];
  }
  return h;
}

void FifteenPuzzle::successors(const State& s, std::vector<Edge<State>>& out) const {
  out.clear();
  const int b = s.blank;
  const int row = b / 4, col = b % 4;
  auto slide = [&](int to) {
    const int t = tile_at(s.tiles, to);
    State n;
    n.tiles = (s.tiles & ~(std::uint64_t{15} << (4 * to))) | (static_cast<std::uint64_t>(t) << (4 * b));
    n.blank = static_cast<std::uint8_t>(to);
    out.push_back({n, move_cost(t, model_)});
  };
  if (row > 0) slide(b - 4);
  if (col > 0) slide(b - 1);
  if (col < 3) slide(b + 1);
  if (row < 3) slide(b + 4);
}

std::vector<std::array<int, 16>> read_puzzle_instances(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file " + path);
  std::vector<std::array<int, 16>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream ls(line);
    std::array<int, 16> cells{};
    for (auto& c : cells)
      if (!(ls >> c)) throw std::runtime_error("short puzzle line: " + line);
    out.push_back(cells);
  }
  return out;
}

}  // namespace ibex
