#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ibex/query.hpp"

namespace ibex {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BenchConfig {
  std::string domain;
  std::vector<std::string> algorithms;
  std::vector<double> alphas{8};
  std::vector<bool> additive{false};
  Count instances = 1;
  std::uint64_t seed = 1;
  Count expansion_cap = 100'000'000;
  double time_limit_s = 0;
  double gamma = 2;
  std::vector<Count> sizes;  // chain depths or Mero sizes; overrides sampling
  std::string instance_file = "data/fifteen_puzzle_100.txt";
  std::string pdb_cache_dir;
  unsigned jobs = 1;
  std::string out;
};

const std::vector<std::string>& known_domains();
const std::vector<std::string>& known_algorithms();
// algorithms that take alpha and the additive flag
bool uses_alpha(const std::string& algorithm);

// Throws ConfigError on unknown names or out-of-range values.
void validate(const BenchConfig& cfg);

// Reads a flat JSON object; keys mirror the CLI flags with underscores.
BenchConfig parse_config(const std::string& json_text);

struct RunRecord {
  std::string domain;
  Count instance = 0;
  std::string algorithm;
  double alpha = 0;  // 0 when the algorithm has no alpha
  bool has_alpha = false;
  bool additive = false;
  bool solved = false;
  Termination termination = Termination::no_solution;
  Count expansions = 0;
  Count reexpansions = 0;
  Cost solution_cost = kInfinity;
  double wall_time_s = 0;
};

std::vector<RunRecord> run_suite(const BenchConfig& cfg);

inline constexpr const char* kCsvHeader =
    "domain,instance,algorithm,alpha,additive,solved,expansions,reexpansions,solution_cost,wall_time_s";

void write_csv(std::ostream& out, const std::vector<RunRecord>& records);

// Per (algorithm, alpha, additive): solve counts, mean expansions over solved
// runs and over all runs, and the number of runs stopped by each cap.
void write_summary(std::ostream& out, const std::vector<RunRecord>& records);

}  // namespace ibex
