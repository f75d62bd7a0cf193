#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ibex/domain.hpp"

namespace ibex {

enum class TileCost { unit, real };

// 4x4 sliding-tile puzzle, goal = blank in cell 0 then tiles 1..15.
// Successors move the blank up, left, right, down, in that order.
// Unit costs use Manhattan distance; real costs charge 1 + 1/(t+1) for
// moving tile t and weight each tile's distance by that price.
class FifteenPuzzle {
 public:
  struct State {
    std::uint64_t tiles = 0;  // nibble i = tile in cell i
    std::uint8_t blank = 0;
    friend bool operator==(const State&, const State&) = default;
  };
  struct StateHash {
    std::size_t operator()(const State& s) const {
      return static_cast<std::size_t>(s.tiles * 0x9E3779B97F4A7C15ULL);
    }
  };

  FifteenPuzzle(const std::array<int, 16>& cells, TileCost model = TileCost::unit);

  static bool solvable(const std::array<int, 16>& cells);
  static State pack(const std::array<int, 16>& cells);
  static std::array<int, 16> unpack(const State& s);
  static Cost move_cost(int tile, TileCost model);

  State initial_state() const { return start_; }
  void successors(const State& s, std::vector<Edge<State>>& out) const;
  Cost heuristic(const State& s) const;
  bool is_goal(const State& s) const { return s.tiles == kGoalTiles; }
  TileCost model() const { return model_; }

  static constexpr std::uint64_t kGoalTiles = 0xFEDCBA9876543210ULL;

 private:
  State start_;
  TileCost model_;
  std::array<std::array<Cost, 16>, 16> weight_{};  // [tile][cell]
};

// One instance per line, 16 numbers, blank = 0.
std::vector<std::array<int, 16>> read_puzzle_instances(const std::string& path);

}  // namespace ibex
