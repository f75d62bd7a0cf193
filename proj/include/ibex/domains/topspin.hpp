#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ibex/domain.hpp"

namespace ibex {

inline constexpr int kTopSpinSize = 12;
inline constexpr int kTopSpinWindow = 4;
inline constexpr std::size_t kPdbEntries = 12 * 11 * 10 * 9;

using TopSpinCosts = std::array<Cost, kTopSpinSize>;

// Exact abstract costs for the positions of four tokens.
class PatternDatabase {
 public:
  PatternDatabase(std::array<int, 4> pattern, std::vector<Cost> table);

  static PatternDatabase build(const std::array<int, 4>& pattern, const TopSpinCosts& costs);
  static std::size_t rank(const std::array<int, 4>& positions);

  const std::array<int, 4>& pattern() const { return pattern_; }
  Cost at(std::size_t index) const { return table_[index]; }
  Cost lookup(const std::array<int, kTopSpinSize>& tokens_at) const;

  // binary cache: magic, seed, pattern, entry count, entries
  void save(const std::string& path, std::uint64_t seed) const;
  static std::optional<PatternDatabase> load(const std::string& path, std::uint64_t seed,
                                             const std::array<int, 4>& pattern);

 private:
  std::array<int, 4> pattern_;
  std::vector<Cost> table_;
};

// (12,4)-TopSpin without ring rotations: action i reverses the four tokens at
// positions i..i+3 (mod 12). Successors are actions 0..11 in order. Tokens
// are 0..11 and the goal puts token t at position t. h is the max of three
// PDBs over tokens {0..3}, {4..7}, {8..11}.
class TopSpin {
 public:
  struct State {
    std::uint64_t packed = 0;  // nibble i = token at position i
    friend bool operator==(const State&, const State&) = default;
  };
  struct StateHash {
    std::size_t operator()(const State& s) const {
      return static_cast<std::size_t>(s.packed * 0x9E3779B97F4A7C15ULL);
    }
  };

  TopSpin(const TopSpinCosts& costs, State start, std::shared_ptr<const std::vector<PatternDatabase>> pdbs);

  // costs drawn from the seed, start = random walk of 1000 actions from the goal.
  // PDBs are read from / written to cache_dir when it is non-empty.
  static TopSpin from_seed(std::uint64_t seed, const std::string& cache_dir = "");
  static TopSpinCosts costs_from_seed(std::uint64_t seed);
  static std::vector<PatternDatabase> build_pdbs(const TopSpinCosts& costs, std::uint64_t seed,
                                                 const std::string& cache_dir);

  static State goal();
  static State pack(const std::array<int, kTopSpinSize>& tokens);
  static std::array<int, kTopSpinSize> unpack(const State& s);
  static State apply(const State& s, int action);

  const TopSpinCosts& costs() const { return costs_; }
  const std::vector<PatternDatabase>& pdbs() const { return *pdbs_; }
  TopSpin with_start(State s) const { return TopSpin(costs_, s, pdbs_); }

  State initial_state() const { return start_; }
  void successors(const State& s, std::vector<Edge<State>>& out) const;
  Cost heuristic(const State& s) const;
  bool is_goal(const State& s) const { return s == goal(); }

 private:
  TopSpinCosts costs_;
  State start_;
  std::shared_ptr<const std::vector<PatternDatabase>> pdbs_;
};

}  // namespace ibex
