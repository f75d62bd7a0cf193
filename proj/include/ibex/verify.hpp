#pragma once

#include <string>
#include <vector>

#include "ibex/core_model.hpp"
#include "ibex/rng.hpp"

namespace ibex {

enum class ValueLaw { uniform, geometric_gap, heavy_duplicate };

// Sizes 1..500. Integral lists are rounded up to whole numbers.
ValueList random_value_list(SplitMix64& rng, ValueLaw law, bool integral = false);

enum class BoundSuite { thm1, prop12, thm2, thm3, thm4 };

BoundSuite parse_suite(const std::string& name);
std::string to_string(BoundSuite s);

struct Violation {
  std::string what;
  std::string list;  // serialized ValueList for replay, empty for scheduler trials
};

struct VerifyReport {
  BoundSuite suite;
  Count trials = 0;
  Count checks = 0;
  std::vector<Violation> violations;
  bool passed() const { return violations.empty(); }
};

VerifyReport verify_bounds(BoundSuite suite, Count trials, std::uint64_t seed);

}  // namespace ibex
