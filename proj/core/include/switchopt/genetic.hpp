#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>

#include "switchopt/operators.hpp"
#include "switchopt/probe.hpp"
#include "switchopt/rng.hpp"
#include "switchopt/types.hpp"

namespace switchopt {

struct GaConfig {
  std::size_t pop_size = 100;
  std::size_t generations = 500;
  double elite_rate = 0.2;
  /// Probability of the single-parent operator (mutation; crossover when reverse_ops is set).
  double p_mutation = 0.2;
  /// Swap the roles of mutation and crossover when producing offspring.
  bool reverse_ops = false;
  OperatorConfig ops{};

  /// floor(pop_size * elite_rate).
  std::size_t elite_count() const;

  /// Throws ConfigError on any violated invariant, including elite_count() < 2.
  void validate() const;
};

enum class ReversalMode {
  kGaReversal,          ///< window runs GA generations on the negated objective
  kStochasticReversal,  ///< window runs random search on the negated objective
};

struct ReversalConfig {
  /// Reversal period. Unset means generations / 2, which fires exactly once.
  std::optional<std::size_t> n_k;
  std::size_t step_length = 100;
  ReversalMode mode = ReversalMode::kGaReversal;

  std::size_t period(std::size_t generations) const {
    return n_k.value_or(generations / 2);
  }

  void validate(std::size_t generations) const;
};

/// floor(generations / n_k). Throws ConfigError unless 1 <= n_k <= generations.
std::size_t compute_num_reversals(std::size_t generations, std::size_t n_k);

/// Outer generations i at which a reversal window opens: i > 0, i % n_k == 0,
/// at most compute_num_reversals(generations, n_k) of them.
std::vector<std::size_t> reversal_schedule(std::size_t generations, std::size_t n_k);

/// Population state handed to GaHooks::on_generation right after ranking.
struct GenerationSnapshot {
  std::size_t step;          ///< history index of this generation
  bool in_reversal;          ///< probe is in kMaximizeReversed mode
  std::size_t elite_count;
  std::span<const Solution> ranked;      ///< best-first under the current probe sense
  std::span<const double> true_costs;    ///< true cost of each ranked individual
};

struct GaHooks {
  std::function<void(const GenerationSnapshot&)> on_generation;
};

/// Standard (or reverse-operations) elitist GA.
///
/// Each generation ranks the population by probe value (stable), keeps the
/// elites and refills from them. The history holds the population's best true
/// cost at every ranking, so its minimum equals best_cost.
RunResult ga(ObjectiveProbe& probe, const Domain& domain, const GaConfig& cfg, RngStream& rng,
             const std::optional<Solution>& init = std::nullopt, const GaHooks& hooks = {});

/// GA that periodically switches the probe to maximization for
/// rcfg.step_length generations of the same population. Requires
/// rcfg.mode == kGaReversal. Window generations do not advance the outer
/// generation counter.
RunResult ga_with_reversals(ObjectiveProbe& probe, const Domain& domain, const GaConfig& cfg,
                            const ReversalConfig& rcfg, RngStream& rng,
                            const std::optional<Solution>& init = std::nullopt,
                            const GaHooks& hooks = {});

/// Same schedule as ga_with_reversals, but each window runs random search for
/// rcfg.step_length evaluations on the negated objective from the current
/// best. The (cost-worsening) result replaces a random elite other than the
/// best and takes part in that generation's breeding. The window replaces the
/// breeding step of its outer generation. Requires rcfg.mode == kStochasticReversal.
RunResult ga_with_stochastic_reversals(ObjectiveProbe& probe, const Domain& domain,
                                       const GaConfig& cfg, const ReversalConfig& rcfg,
                                       RngStream& rng,
                                       const std::optional<Solution>& init = std::nullopt,
                                       const GaHooks& hooks = {});

}  // namespace switchopt
