#pragma once

#include <cstddef>
#include <optional>

#include "switchopt/probe.hpp"
#include "switchopt/rng.hpp"
#include "switchopt/types.hpp"

namespace switchopt {

struct LocalSearchConfig {
  std::size_t max_iter = 100;

  void validate() const;
};

struct SaConfig {
  double t0 = 50000.0;
  double cooling = 0.95;
  double t_stop = 0.1;
  int step = 1;

  void validate() const;

  /// Number of cooling steps until the temperature drops to t_stop or below.
  std::size_t iterations() const;
};

/// Metropolis acceptance probability for moving from `current` to `candidate` at temperature t.
double sa_acceptance(double current, double candidate, double temperature);

/// Evaluates `init` first (when given), then max_iter uniform random solutions;
/// returns the lowest-probe solution seen. History holds every evaluated cost.
RunResult random_search(ObjectiveProbe& probe, const Domain& domain, const LocalSearchConfig& cfg,
                        RngStream& rng, const std::optional<Solution>& init = std::nullopt);

/// Steepest descent over the +/-1 neighbourhood. Each iteration scans every
/// in-bounds neighbour in order (dimension 0 down, dimension 0 up, dimension 1
/// down, ...) and moves to the first strictly best one; stops when nothing
/// improves or after max_iter scans.
RunResult hill_climbing(ObjectiveProbe& probe, const Domain& domain, const LocalSearchConfig& cfg,
                        RngStream& rng, const std::optional<Solution>& init = std::nullopt);

/// Metropolis loop on single-coordinate +/-step moves with geometric cooling.
/// Evaluates the current and the candidate solution every iteration, so
/// nfe = 2 * cfg.iterations(). Returns the best solution ever held.
RunResult simulated_annealing(ObjectiveProbe& probe, const Domain& domain, const SaConfig& cfg,
                              RngStream& rng, const std::optional<Solution>& init = std::nullopt);

}  // namespace switchopt
