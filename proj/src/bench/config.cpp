#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "ibex/bench.hpp"

namespace ibex {

namespace {

using nlohmann::json;

template <class T>
std::vector<T> scalar_or_list(const json& v) {
  if (v.is_array()) return v.get<std::vector<T>>();
  return {v.get<T>()};
}

bool to_flag(const json& v) {
  if (v.is_boolean()) return v.get<bool>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "yes" || s == "true") return true;
    if (s == "no" || s == "false") return false;
  }
  throw ConfigError("additive must be yes/no or a boolean");
}

Count to_count(const json& v) {
  const double d = v.get<double>();
  if (!(d >= 0) || d != std::floor(d)) throw ConfigError("expected a non-negative integer");
  return static_cast<Count>(d);
}

}  // namespace

const std::vector<std::string>& known_domains() {
  static const std::vector<std::string> names{"chain", "coconut", "mero",
                                              "15puzzle", "15puzzle-real", "topspin"};
  return names;
}

const std::vector<std::string>& known_algorithms() {
  static const std::vector<std::string> names{
      "bts", "bts-simple", "dovbts", "dovbts-simple", "ida", "eda", "idacr",
      "bgs", "bgs-simple", "dovbgs", "dovbgs-simple", "astar", "b", "bprime", "astar-bgs"};
  return names;
}

bool uses_alpha(const std::string& a) {
  return a == "bts" || a == "dovbts" || a == "bgs" || a == "dovbgs" || a == "astar-bgs";
}

void validate(const BenchConfig& cfg) {
  const auto& doms = known_domains();
  if (std::find(doms.begin(), doms.end(), cfg.domain) == doms.end())
    throw ConfigError("unknown domain: '" + cfg.domain + "'");
  const auto& algs = known_algorithms();
  for (const auto& a : cfg.algorithms)
    if (std::find(algs.begin(), algs.end(), a) == algs.end())
      throw ConfigError("unknown algorithm: '" + a + "'");
  if (cfg.alphas.empty()) throw ConfigError("alpha list is empty");
  for (double a : cfg.alphas)
    if (!(a >= 2)) throw ConfigError("alpha must be >= 2");
  if (cfg.additive.empty()) throw ConfigError("additive list is empty");
  if (!(cfg.gamma > 1)) throw ConfigError("gamma must be > 1");
  if (cfg.time_limit_s < 0) throw ConfigError("time limit must be >= 0");
  if (cfg.jobs < 1) throw ConfigError("jobs must be >= 1");
  if (cfg.domain == "mero") {
    if (cfg.sizes.empty()) throw ConfigError("mero needs sizes (d)");
    for (Count d : cfg.sizes)
      if (d < 2) throw ConfigError("mero size must be >= 2");
  }
  if (cfg.domain == "chain")
    for (Count d : cfg.sizes)
      if (d < 1) throw ConfigError("chain depth must be >= 1");
}

BenchConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  BenchConfig cfg;
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& k = it.key();
      const json& v = it.value();
      if (k == "domain") cfg.domain = v.get<std::string>();
      else if (k == "algorithms" || k == "algorithm") cfg.algorithms = scalar_or_list<std::string>(v);
      else if (k == "alpha") cfg.alphas = scalar_or_list<double>(v);
      else if (k == "additive") {
        cfg.additive.clear();
        for (const auto& x : (v.is_array() ? v : json::array({v}))) cfg.additive.push_back(to_flag(x));
      } else if (k == "instances") cfg.instances = to_count(v);
      else if (k == "seed") cfg.seed = v.get<std::uint64_t>();
      else if (k == "expansion_cap") cfg.expansion_cap = to_count(v);
      else if (k == "time_limit_s") cfg.time_limit_s = v.get<double>();
      else if (k == "gamma") cfg.gamma = v.get<double>();
      else if (k == "sizes" || k == "d" || k == "depths") {
        cfg.sizes.clear();
        for (const auto& x : (v.is_array() ? v : json::array({v}))) cfg.sizes.push_back(to_count(x));
      } else if (k == "instance_file") cfg.instance_file = v.get<std::string>();
      else if (k == "pdb_cache_dir") cfg.pdb_cache_dir = v.get<std::string>();
      else if (k == "jobs") cfg.jobs = static_cast<unsigned>(to_count(v));
      else if (k == "out") cfg.out = v.get<std::string>();
      else throw ConfigError("unknown config key: '" + k + "'");
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  return cfg;
}

}  // namespace ibex
