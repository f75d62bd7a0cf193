#include "ibex/drivers.hpp"

#include "ibex/dovibex.hpp"
#include "ibex/ibex.hpp"

namespace ibex {

SearchResult run_driver(const QueryFn& query, Cost c_min, const DriverConfig& cfg) {
  const Count cap = cfg.limits.expansion_cap;
  switch (cfg.driver) {
    case Driver::simple:
      return ibex_simple(query, c_min, cap);
    case Driver::enhanced: {
      IbexOptions o;
      o.alpha = cfg.alpha;
      o.additive = cfg.additive;
      o.expansion_cap = cap;
      return ibex_enhanced(query, c_min, o);
    }
    case Driver::dovetail: {
      DovibexOptions o;
      o.expansion_cap = cap;
      o.propagate_upper_bounds = cfg.propagate_upper_bounds;
      return dovibex(query, c_min, o);
    }
    case Driver::dovetail_enhanced: {
      DovibexEnhancedOptions o;
      o.alpha = cfg.alpha;
      o.additive = cfg.additive;
      o.probe = cfg.probe;
      o.propagate_upper_bounds = cfg.propagate_upper_bounds;
      o.expansion_cap = cap;
      return dovibex_enhanced(query, c_min, o);
    }
  }
  throw std::invalid_argument("unknown driver");
}

}  // namespace ibex
