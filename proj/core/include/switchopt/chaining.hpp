#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "switchopt/operators.hpp"
#include "switchopt/probe.hpp"
#include "switchopt/rng.hpp"
#include "switchopt/types.hpp"

namespace switchopt {

/// Any optimizer that can start from an optional solution ("weights").
using Algorithm = std::function<RunResult(ObjectiveProbe&, const Domain&, RngStream&,
                                          const std::optional<Solution>& init)>;

struct ChainConfig {
  std::size_t rounds = 1;
  /// Lower end of the early-stopping slack R ~ U{tolerance, ..., 100}.
  int tolerance = 90;
  std::size_t n_obs = 2;
  /// Probability of mutating the Initial algorithm's output before hand-off.
  double random_mutation_probability = 0.5;
  /// Disables both hand-off mutations when false.
  bool diversity_mutation = true;
  OperatorConfig ops{};

  void validate() const;
};

/// Early-stopping rule with an explicit slack: cost - slack > mean(last n_obs scores).
/// Uses every score when fewer than n_obs are available. Throws UsageError on empty scores.
bool exceeds_recent_mean(double cost, std::span<const double> scores, std::size_t n_obs,
                         double slack);

/// Draws R uniformly from {tolerance, ..., 100} and applies exceeds_recent_mean.
bool should_stop(double cost, std::span<const double> scores, const ChainConfig& cfg,
                 RngStream& rng);

/// Per-round record kept alongside the RunResult of iterated_chain.
struct ChainTrace {
  std::vector<double> scores;       ///< global cost per completed round
  std::size_t rounds_run = 0;
  bool stopped_early = false;
  std::vector<RunResult> runs;      ///< constituent runs in execution order
};

/// Iterated Chaining. Each round runs `initial` from the current weights, maybe
/// mutates its output, runs `chained` from that, and mutates the chained output
/// unless it is the last round. The round's global cost is the lower of the two
/// constituents' true best costs. From the second round on, should_stop is
/// checked against the earlier rounds' scores.
///
/// History holds (round, global cost); nfe is the sum over constituent runs.
RunResult iterated_chain(const Algorithm& initial, const Algorithm& chained, ObjectiveProbe& probe,
                         const Domain& domain, const ChainConfig& cfg, RngStream& rng,
                         ChainTrace* trace = nullptr);

}  // namespace switchopt
