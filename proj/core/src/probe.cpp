#include "switchopt/probe.hpp"

#include <string>

#include "switchopt/errors.hpp"

namespace switchopt {

double ObjectiveProbe::true_cost(const Solution& s) const {
  if (s.size() != dims_) {
    throw DimensionError("objective expects " + std::to_string(dims_) + " genes, got " +
                         std::to_string(s.size()));
  }
  return target_(s);
}

double ObjectiveProbe::evaluate(const Solution& s) {
  const double cost = true_cost(s);
  ++eval_count_;
  if (observer_) observer_(s, cost);
  return sense_ == Sense::kMinimize ? cost : -cost;
}

}  // namespace switchopt
