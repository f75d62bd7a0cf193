#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

#include "ibex/baselines.hpp"
#include "ibex/bench.hpp"
#include "ibex/domains/coconut.hpp"
#include "ibex/domains/explicit_graph.hpp"
#include "ibex/domains/sliding_tile.hpp"
#include "ibex/domains/topspin.hpp"
#include "ibex/graph_search.hpp"
#include "ibex/rng.hpp"
#include "ibex/tree_search.hpp"

namespace ibex {

namespace {

struct Task {
  Count instance;
  std::string algorithm;
  double alpha;
  bool has_alpha;
  bool additive;
};

template <SearchDomain D>
SearchResult run_algorithm(const D& d, const Task& t, const BenchConfig& cfg, DuplicateCheck dup) {
  const RunLimits lim{cfg.expansion_cap, cfg.time_limit_s};
  DriverConfig dc;
  dc.alpha = t.alpha;
  dc.additive = t.additive;
  dc.limits = lim;
  TreeQueryOptions to;
  to.duplicates = dup;
  const std::string& a = t.algorithm;
  auto with = [&](Driver drv) {
    dc.driver = drv;
    return dc;
  };
  if (a == "bts") return bts(d, with(Driver::enhanced), to);
  if (a == "bts-simple") return bts(d, with(Driver::simple), to);
  if (a == "dovbts") return bts(d, with(Driver::dovetail_enhanced), to);
  if (a == "dovbts-simple") return bts(d, with(Driver::dovetail), to);
  if (a == "ida") return ida_star(d, lim, dup);
  if (a == "eda") return eda_star(d, cfg.gamma, lim, dup);
  if (a == "idacr") return ida_star_cr(d, 50, 2, lim, dup);
  if (a == "bgs") return bgs(d, with(Driver::enhanced));
  if (a == "bgs-simple") return bgs(d, with(Driver::simple));
  if (a == "dovbgs") return bgs(d, with(Driver::dovetail_enhanced));
  if (a == "dovbgs-simple") return bgs(d, with(Driver::dovetail));
  if (a == "astar") return astar(d, lim);
  if (a == "b") return algorithm_b(d, lim);
  if (a == "bprime") return algorithm_b_prime(d, lim);
  if (a == "astar-bgs") return astar_with_bgs_fallback(d, with(Driver::enhanced)).result;
  throw ConfigError("unknown algorithm: '" + a + "'");
}

std::vector<Count> instance_ids(const BenchConfig& cfg) {
  std::vector<Count> ids;
  if ((cfg.domain == "chain" || cfg.domain == "mero") && !cfg.sizes.empty()) return cfg.sizes;
  if (cfg.domain.rfind("15puzzle", 0) == 0) {
    if (!cfg.sizes.empty()) return cfg.sizes;
    for (Count i = 1; i <= cfg.instances; ++i) ids.push_back(i);
    return ids;
  }
  for (Count i = 0; i < cfg.instances; ++i) ids.push_back(i);
  return ids;
}

SearchResult run_task(const BenchConfig& cfg, const Task& t,
                      const std::vector<std::array<int, 16>>& puzzles) {
  const std::string& dom = cfg.domain;
  if (dom == "chain") {
    Count depth = t.instance;
    if (cfg.sizes.empty()) {
      SplitMix64 g(derive_seed(cfg.seed, t.instance));
      depth = static_cast<Count>(g.range(1, 10000));
    }
    return run_algorithm(make_chain(depth), t, cfg, DuplicateCheck::none);
  }
  if (dom == "mero") return run_algorithm(make_mero(t.instance), t, cfg, DuplicateCheck::none);
  if (dom == "coconut")
    return run_algorithm(Coconut::from_seed(derive_seed(cfg.seed, t.instance)), t, cfg,
                         DuplicateCheck::none);
  if (dom == "topspin")
    return run_algorithm(TopSpin::from_seed(derive_seed(cfg.seed, t.instance), cfg.pdb_cache_dir), t,
                         cfg, DuplicateCheck::parent);
  const TileCost model = dom == "15puzzle" ? TileCost::unit : TileCost::real;
  if (t.instance < 1 || t.instance > puzzles.size())
    throw ConfigError("15-puzzle instance " + std::to_string(t.instance) + " not in the file");
  return run_algorithm(FifteenPuzzle(puzzles[t.instance - 1], model), t, cfg, DuplicateCheck::parent);
}

std::string fmt(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace

std::vector<RunRecord> run_suite(const BenchConfig& cfg) {
  validate(cfg);
  std::vector<std::array<int, 16>> puzzles;
  if (cfg.domain.rfind("15puzzle", 0) == 0 && !cfg.algorithms.empty())
    puzzles = read_puzzle_instances(cfg.instance_file);
  if (!puzzles.empty())
    for (Count id : instance_ids(cfg))
      if (id < 1 || id > puzzles.size())
        throw ConfigError("15-puzzle instance " + std::to_string(id) + " not in " + cfg.instance_file);

  std::vector<Task> tasks;
  for (Count id : instance_ids(cfg))
    for (const auto& a : cfg.algorithms) {
      if (!uses_alpha(a)) {
        tasks.push_back({id, a, 0, false, false});
        continue;
      }
      for (double alpha : cfg.alphas)
        for (bool add : cfg.additive) tasks.push_back({id, a, alpha, true, add});
    }

  std::vector<RunRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mu;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      const auto start = std::chrono::steady_clock::now();
      SearchResult r;
      try {
        r = run_task(cfg, t, puzzles);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        next = tasks.size();
        return;
      }
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      RunRecord& rec = records[i];
      rec.domain = cfg.domain;
      rec.instance = t.instance;
      rec.algorithm = t.algorithm;
      rec.alpha = t.alpha;
      rec.has_alpha = t.has_alpha;
      rec.additive = t.additive;
      rec.solved = r.solved();
      rec.termination = r.termination;
      rec.expansions = r.expansions;
      rec.reexpansions = r.reexpansions;
      rec.solution_cost = r.solution ? r.solution->cost : kInfinity;
      rec.wall_time_s = took.count();
    }
  };
  const unsigned n = std::min<unsigned>(cfg.jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  std::stable_sort(records.begin(), records.end(), [](const RunRecord& x, const RunRecord& y) {
    return std::tie(x.domain, x.instance, x.algorithm, x.alpha, x.additive) <
           std::tie(y.domain, y.instance, y.algorithm, y.alpha, y.additive);
  });
  return records;
}

void write_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.domain << ',' << r.instance << ',' << r.algorithm << ','
        << (r.has_alpha ? fmt(r.alpha) : "") << ',' << (r.has_alpha ? (r.additive ? "yes" : "no") : "")
        << ',' << (r.solved ? "yes" : "no") << ',' << r.expansions << ',' << r.reexpansions << ','
        << (r.solved ? fmt(r.solution_cost) : "") << ',' << fmt(std::round(r.wall_time_s * 1e6) / 1e6)
        << '\n';
  }
}

void write_summary(std::ostream& out, const std::vector<RunRecord>& records) {
  struct Agg {
    Count runs = 0, solved = 0, capped = 0, timed_out = 0;
    double exp_solved = 0, exp_all = 0;
  };
  std::map<std::tuple<std::string, double, bool>, Agg> by;
  for (const auto& r : records) {
    Agg& a = by[{r.algorithm, r.alpha, r.additive}];
    ++a.runs;
    a.exp_all += static_cast<double>(r.expansions);
    if (r.solved) {
      ++a.solved;
      a.exp_solved += static_cast<double>(r.expansions);
    }
    if (r.termination == Termination::expansion_cap) ++a.capped;
    if (r.termination == Termination::time_limit) ++a.timed_out;
  }
  out << "algorithm alpha additive solved/runs mean_exp_solved mean_exp_all expansion_cap time_limit\n";
  for (const auto& [key, a] : by) {
    const auto& [name, alpha, add] = key;
    out << name << ' ' << (alpha > 0 ? fmt(alpha) : "-") << ' '
        << (alpha > 0 ? (add ? "yes" : "no") : "-") << ' ' << a.solved << '/' << a.runs << ' '
        << (a.solved ? fmt(a.exp_solved / static_cast<double>(a.solved)) : "-") << ' '
        << fmt(a.exp_all / static_cast<double>(a.runs)) << ' ' << a.capped << ' ' << a.timed_out << '\n';
  }
}

}  // namespace ibex
