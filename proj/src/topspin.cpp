#include "ibex/domains/topspin.hpp"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <queue>
#include <stdexcept>

#include "ibex/rng.hpp"

namespace ibex {

namespace {

constexpr char kMagic[8] = {'I', 'B', 'X', 'P', 'D', 'B', '0', '1'};

int move_position(int pos, int action) {
  const int offset = (pos - action + kTopSpinSize) % kTopSpinSize;
  if (offset >= kTopSpinWindow) return pos;
  return (action + kTopSpinWindow - 1 - offset) % kTopSpinSize;
}

std::array<int, 4> unrank(std::size_t index) {
  // mixed radix 12, 11, 10, 9 over the remaining free positions
  std::array<int, 4> r{};
  r[3] = static_cast<int>(index % 9);
  index /= 9;
  r[2] = static_cast<int>(index % 10);
  index /= 10;
  r[1] = static_cast<int>(index % 11);
  r[0] = static_cast<int>(index / 11);
  std::array<bool, kTopSpinSize> used{};
  std::array<int, 4> pos{};
  for (int i = 0; i < 4; ++i) {
    int k = r[i];
    for (int p = 0; p < kTopSpinSize; ++p) {
      if (used[p]) continue;
      if (k-- == 0) {
        pos[i] = p;
        used[p] = true;
        break;
      }
    }
  }
  return pos;
}

std::string cache_name(const std::string& dir, std::uint64_t seed, const std::array<int, 4>& p) {
  return dir + "/topspin_pdb_" + std::to_string(seed) + "_" + std::to_string(p[0]) + "-" +
         std::to_string(p[1]) + "-" + std::to_string(p[2]) + "-" + std::to_string(p[3]) + ".bin";
}

}  // namespace

PatternDatabase::PatternDatabase(std::array<int, 4> pattern, std::vector<Cost> table)
    : pattern_(pattern), table_(std::move(table)) {
  if (table_.size() != kPdbEntries) throw std::invalid_argument("PDB table has the wrong size");
}

std::size_t PatternDatabase::rank(const std::array<int, 4>& positions) {
  std::size_t index = 0;
  const std::size_t radix[4] = {12, 11, 10, 9};
  for (int i = 0; i < 4; ++i) {
    int smaller_used = 0;
    for (int j = 0; j < i; ++j)
      if (positions[j] < positions[i]) ++smaller_used;
    index = index * radix[i] + static_cast<std::size_t>(positions[i] - smaller_used);
  }
  return index;
}

PatternDatabase PatternDatabase::build(const std::array<int, 4>& pattern, const TopSpinCosts& costs) {
  std::vector<Cost> dist(kPdbEntries, kInfinity);
  using Item = std::pair<Cost, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
  const std::size_t start = rank(pattern);
  dist[start] = 0;
  open.emplace(0, start);
  while (!open.empty()) {
    auto [d, at] = open.top();
    open.pop();
    if (d > dist[at]) continue;
    const auto pos = unrank(at);
    for (int a = 0; a < kTopSpinSize; ++a) {
      std::array<int, 4> next{};
      for (int i = 0; i < 4; ++i) next[i] = move_position(pos[i], a);
      const std::size_t to = rank(next);
      const Cost nd = d + costs[a];
      if (nd < dist[to]) {
        dist[to] = nd;
        open.emplace(nd, to);
      }
    }
  }
  return PatternDatabase(pattern, std::move(dist));
}

Cost PatternDatabase::lookup(const std::array<int, kTopSpinSize>& position_of) const {
  std::array<int, 4> pos{};
  for (int i = 0; i < 4; ++i) pos[i] = position_of[pattern_[i]];
  return table_[rank(pos)];
}

void PatternDatabase::save(const std::string& path, std::uint64_t seed) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write PDB cache " + path);
  out.write(kMagic, sizeof kMagic);
  out.write(reinterpret_cast<const char*>(&seed), sizeof seed);
  std::int32_t p[4] = {pattern_[0], pattern_[1], pattern_[2], pattern_[3]};
  out.write(reinterpret_cast<const char*>(p), sizeof p);
  const auto n = static_cast<std::uint32_t>(table_.size());
  out.write(reinterpret_cast<const char*>(&n), sizeof n);
  out.write(reinterpret_cast<const char*>(table_.data()),
            static_cast<std::streamsize>(table_.size() * sizeof(Cost)));
}

std::optional<PatternDatabase> PatternDatabase::load(const std::string& path, std::uint64_t seed,
                                                     const std::array<int, 4>& pattern) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[8];
  std::uint64_t file_seed = 0;
  std::int32_t p[4];
  std::uint32_t n = 0;
  in.read(magic, sizeof magic);
  in.read(reinterpret_cast<char*>(&file_seed), sizeof file_seed);
  in.read(reinterpret_cast<char*>(p), sizeof p);
  in.read(reinterpret_cast<char*>(&n), sizeof n);
  if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0 || file_seed != seed ||
      n != kPdbEntries)
    return std::nullopt;
  for (int i = 0; i < 4; ++i)
    if (p[i] != pattern[i]) return std::nullopt;
  std::vector<Cost> table(n);
  in.read(reinterpret_cast<char*>(table.data()), static_cast<std::streamsize>(n * sizeof(Cost)));
  if (!in) return std::nullopt;
  return PatternDatabase(pattern, std::move(table));
}

TopSpin::TopSpin(const TopSpinCosts& costs, State start,
                 std::shared_ptr<const std::vector<PatternDatabase>> pdbs)
    : costs_(costs), start_(start), pdbs_(std::move(pdbs)) {}

TopSpinCosts TopSpin::costs_from_seed(std::uint64_t seed) {
  SplitMix64 g(seed);
  TopSpinCosts c{};
  for (auto& x : c) x = static_cast<Cost>(g.range(40, 60));
  return c;
}

std::vector<PatternDatabase> TopSpin::build_pdbs(const TopSpinCosts& costs, std::uint64_t seed,
                                                 const std::string& cache_dir) {
  std::vector<PatternDatabase> out;
  for (int k = 0; k < 3; ++k) {
    const std::array<int, 4> pattern{4 * k, 4 * k + 1, 4 * k + 2, 4 * k + 3};
    if (!cache_dir.empty()) {
      const std::string path = cache_name(cache_dir, seed, pattern);
      if (auto pdb = PatternDatabase::load(path, seed, pattern)) {
        out.push_back(std::move(*pdb));
        continue;
      }
      out.push_back(PatternDatabase::build(pattern, costs));
      std::filesystem::create_directories(cache_dir);
      out.back().save(path, seed);
    } else {
      out.push_back(PatternDatabase::build(pattern, costs));
    }
  }
  return out;
}

TopSpin TopSpin::from_seed(std::uint64_t seed, const std::string& cache_dir) {
  const TopSpinCosts costs = costs_from_seed(seed);
  SplitMix64 g(seed ^ 0x5EED5EED5EED5EEDULL);
  State s = goal();
  for (int i = 0; i < 1000; ++i) s = apply(s, static_cast<int>(g.below(kTopSpinSize)));
  auto pdbs = std::make_shared<const std::vector<PatternDatabase>>(build_pdbs(costs, seed, cache_dir));
  return TopSpin(costs, s, std::move(pdbs));
}

TopSpin::State TopSpin::goal() {
  std::array<int, kTopSpinSize> t{};
  for (int i = 0; i < kTopSpinSize; ++i) t[i] = i;
  return pack(t);
}

TopSpin::State TopSpin::pack(const std::array<int, kTopSpinSize>& tokens) {
  State s;
  for (int i = 0; i < kTopSpinSize; ++i) s.packed |= static_cast<std::uint64_t>(tokens[i]) << (4 * i);
  return s;
}

std::array<int, kTopSpinSize> TopSpin::unpack(const State& s) {
  std::array<int, kTopSpinSize> t{};
  for (int i = 0; i < kTopSpinSize; ++i) t[i] = static_cast<int>((s.packed >> (4 * i)) & 15);
  return t;
}

TopSpin::State TopSpin::apply(const State& s, int action) {
  std::uint64_t out = s.packed;
  for (int o = 0; o < kTopSpinWindow; ++o) {
    const int from = (action + o) % kTopSpinSize;
    const int to = (action + kTopSpinWindow - 1 - o) % kTopSpinSize;
    const std::uint64_t token = (s.packed >> (4 * from)) & 15;
    out = (out & ~(std::uint64_t{15} << (4 * to))) | (token << (4 * to));
  }
  return State{out};
}

void TopSpin::successors(const State& s, std::vector<Edge<State>>& out) const {
  out.clear();
  for (int a = 0; a < kTopSpinSize; ++a) out.push_back({apply(s, a), costs_[a]});
}

Cost TopSpin::heuristic(const State& s) const {
  std::array<int, kTopSpinSize> position_of{};
  for (int i = 0; i < kTopSpinSize; ++i) position_of[(s.packed >> (4 * i)) & 15] = i;
  Cost h = 0;
  for (const auto& pdb : *pdbs_) h = std::max(h, pdb.lookup(position_of));
  return h;
}

}  // namespace ibex
