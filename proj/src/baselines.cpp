#include "ibex/baselines.hpp"

#include <cmath>

namespace ibex {

CrHistogram::CrHistogram(Cost t, std::size_t buckets)
    : t_(t), count_(std::max<std::size_t>(buckets, 1), 0), top_(count_.size(), 0) {}

void CrHistogram::add(Cost f) {
  max_seen_ = std::max(max_seen_, f);
  if (!(t_ > 0)) return;
  const auto n = static_cast<double>(count_.size());
  double pos = std::ceil(std::log10(f / t_) * n) - 1;
  auto i = static_cast<std::size_t>(std::clamp(pos, 0.0, n - 1));
  ++count_[i];
  top_[i] = std::max(top_[i], f);
}

Cost CrHistogram::next(double target) const {
  if (!(t_ > 0)) return 0;  // caller falls back to the smallest pruned value
  const auto n = static_cast<double>(count_.size());
  auto edge = [&](std::size_t i) {
    if (i + 1 == count_.size()) return top_[i];
    return std::max(top_[i], t_ * std::pow(10.0, static_cast<double>(i + 1) / n));
  };
  double running = 0;
  std::size_t last = count_.size();
  for (std::size_t i = 0; i < count_.size(); ++i) {
    if (count_[i] == 0) continue;
    running += static_cast<double>(count_[i]);
    last = i;
    if (running >= target) return edge(i);
  }
  // too few pruned nodes: take the top of the highest occupied range
  return last == count_.size() ? max_seen_ : edge(last);
}

}  // namespace ibex
