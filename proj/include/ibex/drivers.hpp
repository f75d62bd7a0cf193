#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "ibex/query.hpp"

namespace ibex {

enum class Driver { simple, enhanced, dovetail, dovetail_enhanced };

struct DriverConfig {
  Driver driver = Driver::enhanced;
  double alpha = 8;
  bool additive = false;
  bool probe = true;
  bool propagate_upper_bounds = false;
  RunLimits limits;
};

// Runs the chosen outer loop (IBEX, enhanced IBEX, DovIBEX, enhanced DovIBEX).
SearchResult run_driver(const QueryFn& query, Cost c_min, const DriverConfig& cfg);

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

inline Deadline deadline_after(double seconds) {
  if (!(seconds > 0)) return std::nullopt;
  return std::chrono::steady_clock::now() +
         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
             std::chrono::duration<double>(seconds));
}

inline void check_deadline(const Deadline& d) {
  if (d && std::chrono::steady_clock::now() > *d) throw SearchAborted(Termination::time_limit);
}

}  // namespace ibex
