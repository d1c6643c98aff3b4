#include "switchopt/genetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "switchopt/errors.hpp"
#include "switchopt/local_search.hpp"
#include "stopwatch.hpp"

namespace switchopt {

std::size_t GaConfig::elite_count() const {
  // Tolerance absorbs products such as 100 * 0.2 landing a hair below the integer.
  return static_cast<std::size_t>(std::floor(static_cast<double>(pop_size) * elite_rate + 1e-9));
}

void GaConfig::validate() const {
  if (pop_size < 1) throw ConfigError("pop_size must be >= 1");
  if (generations < 1) throw ConfigError("generations must be >= 1");
  if (!(elite_rate > 0.0 && elite_rate <= 1.0)) throw ConfigError("elite_rate must lie in (0, 1]");
  if (!(p_mutation >= 0.0 && p_mutation <= 1.0)) throw ConfigError("p_mutation must lie in [0, 1]");
  if (elite_count() < 2) {
    throw ConfigError("pop_size * elite_rate must keep at least 2 elites (got " +
                      std::to_string(elite_count()) + ")");
  }
  ops.validate();
}

void ReversalConfig::validate(std::size_t generations) const {
  if (step_length < 1) throw ConfigError("step_length must be >= 1");
  compute_num_reversals(generations, period(generations));
}

std::size_t compute_num_reversals(std::size_t generations, std::size_t n_k) {
  if (n_k < 1 || n_k > generations) {
    throw ConfigError("n_k = " + std::to_string(n_k) + " must lie in [1, generations = " +
                      std::to_string(generations) + "]");
  }
  return generations / n_k;
}

std::vector<std::size_t> reversal_schedule(std::size_t generations, std::size_t n_k) {
  const std::size_t budget = compute_num_reversals(generations, n_k);
  std::vector<std::size_t> starts;
  for (std::size_t i = n_k; i < generations && starts.size() < budget; i += n_k) {
    starts.push_back(i);
  }
  return starts;
}

namespace {

/// One GA population bound to a probe. Values are probe values under the
/// sense that was active when each individual was last evaluated.
class Population {
 public:
  Population(ObjectiveProbe& probe, const Domain& domain, const GaConfig& cfg, RngStream& rng,
             const GaHooks& hooks)
      : probe_(probe), domain_(domain), cfg_(cfg), rng_(rng), hooks_(hooks),
        entry_sense_(probe.sense()), elites_(cfg.elite_count()) {}

  void seed(const std::optional<Solution>& init) {
    members_.reserve(cfg_.pop_size);
    for (std::size_t i = 0; i < cfg_.pop_size; ++i) members_.push_back(random_solution(domain_, rng_));
    if (init) {
      domain_.check(*init);
      members_[rng_.index(cfg_.pop_size)] = *init;
    }
    values_.resize(members_.size());
    evaluate_all();
  }

  void evaluate_all() {
    for (std::size_t i = 0; i < members_.size(); ++i) values_[i] = probe_.evaluate(members_[i]);
  }

  /// Stable ascending sort by probe value, then history + hook.
  void rank() {
    std::vector<std::size_t> order(members_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values_[a] < values_[b]; });
    std::vector<Solution> sorted_members;
    std::vector<double> sorted_values;
    sorted_members.reserve(order.size());
    sorted_values.reserve(order.size());
    for (const auto i : order) {
      sorted_members.push_back(std::move(members_[i]));
      sorted_values.push_back(values_[i]);
    }
    members_ = std::move(sorted_members);
    values_ = std::move(sorted_values);

    std::vector<double> true_costs(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) true_costs[i] = probe_.to_true(values_[i]);
    // Best under the sense the caller asked us to minimize.
    const bool minimize = entry_sense_ == Sense::kMinimize;
    const double shown = minimize ? *std::min_element(true_costs.begin(), true_costs.end())
                                  : *std::max_element(true_costs.begin(), true_costs.end());
    history_.push_back({step_, shown});
    if (hooks_.on_generation) {
      hooks_.on_generation(GenerationSnapshot{step_, probe_.sense() != entry_sense_, elites_,
                                              members_, true_costs});
    }
    ++step_;
  }

  /// Keeps the elites of a ranked population and refills from them.
  void breed() {
    std::vector<Solution> next(members_.begin(), members_.begin() + static_cast<long>(elites_));
    std::vector<double> next_values(values_.begin(), values_.begin() + static_cast<long>(elites_));
    next.reserve(cfg_.pop_size);
    next_values.reserve(cfg_.pop_size);
    while (next.size() < cfg_.pop_size) {
      const bool single_parent_op = rng_.bernoulli(cfg_.p_mutation);
      const bool mutate = single_parent_op != cfg_.reverse_ops;
      Solution child = mutate ? mutation() : crossover();
      next_values.push_back(probe_.evaluate(child));
      next.push_back(std::move(child));
    }
    members_ = std::move(next);
    values_ = std::move(next_values);
  }

  void generation() {
    rank();
    breed();
  }

  /// Flips the probe and re-scores the whole population under the new sense.
  void switch_sense(Sense s) {
    probe_.set_sense(s);
    evaluate_all();
  }

  /// One generation whose breeding step includes an immigrant: random search
  /// on the negated objective from the current best, its (cost-worsening)
  /// result replacing a random elite other than the best before refilling.
  void stochastic_reversal_generation(std::size_t step_length) {
    rank();
    const Sense outer = probe_.sense();
    probe_.set_sense(outer == Sense::kMinimize ? Sense::kMaximizeReversed : Sense::kMinimize);
    const RunResult excursion =
        random_search(probe_, domain_, LocalSearchConfig{step_length}, rng_, members_.front());
    probe_.set_sense(outer);
    for (const auto& point : excursion.history) history_.push_back({step_++, point.cost});

    const std::size_t slot = 1 + rng_.index(elites_ - 1);
    members_[slot] = excursion.best;
    values_[slot] = outer == Sense::kMinimize ? excursion.best_cost : -excursion.best_cost;
    breed();
  }

  std::vector<HistoryPoint> take_history() { return std::move(history_); }

 private:
  Solution mutation() {
    const Solution& parent = members_[rng_.index(elites_)];
    return one_point_mutation(parent, domain_, rng_, cfg_.ops);
  }

  Solution crossover() {
    const Solution& a = members_[rng_.index(elites_)];
    const Solution& b = members_[rng_.index(elites_)];
    return single_point_crossover(a, b, rng_);
  }

  ObjectiveProbe& probe_;
  const Domain& domain_;
  const GaConfig& cfg_;
  RngStream& rng_;
  const GaHooks& hooks_;
  Sense entry_sense_;
  std::size_t elites_;
  std::size_t step_ = 0;
  std::vector<Solution> members_;
  std::vector<double> values_;
  std::vector<HistoryPoint> history_;
};

RunResult run_ga(ObjectiveProbe& probe, const Domain& domain, const GaConfig& cfg,
                 const ReversalConfig* rcfg, RngStream& rng, const std::optional<Solution>& init,
                 const GaHooks& hooks) {
  cfg.validate();
  if (domain.size() < 2) throw ConfigError("GA crossover needs at least 2 dimensions");
  if (domain.size() != probe.dims()) throw DimensionError("domain and objective dimensions differ");
  std::vector<std::size_t> windows;
  if (rcfg) {
    rcfg->validate(cfg.generations);
    windows = reversal_schedule(cfg.generations, rcfg->period(cfg.generations));
  }

  const Stopwatch clock;
  const std::size_t evals_before = probe.eval_count();
  const Sense entry = probe.sense();
  const Sense reversed = entry == Sense::kMinimize ? Sense::kMaximizeReversed : Sense::kMinimize;

  BestTracker tracker;
  RunResult result;
  {
    const ScopedObserver watch(probe, [&](const Solution& s, double cost) {
      tracker.observe(s, entry == Sense::kMinimize ? cost : -cost);
    });

    Population pop(probe, domain, cfg, rng, hooks);
    pop.seed(init);
    auto next_window = windows.begin();
    for (std::size_t i = 0; i < cfg.generations; ++i) {
      if (next_window != windows.end() && *next_window == i) {
        ++next_window;
        if (rcfg->mode == ReversalMode::kStochasticReversal) {
          pop.stochastic_reversal_generation(rcfg->step_length);
          continue;
        }
        pop.switch_sense(reversed);
        for (std::size_t w = 0; w < rcfg->step_length; ++w) pop.generation();
        pop.switch_sense(entry);
      }
      pop.generation();
    }
    pop.rank();
    result.history = pop.take_history();
  }

  result.best = tracker.solution();
  result.best_cost = entry == Sense::kMinimize ? tracker.cost() : -tracker.cost();
  result.nfe = probe.eval_count() - evals_before;
  result.wall_ms = clock.elapsed_ms();
  return result;
}

}  // namespace

RunResult ga(ObjectiveProbe& probe, const Domain& domain, const GaConfig& cfg, RngStream& rng,
             const std::optional<Solution>& init, const GaHooks& hooks) {
  return run_ga(probe, domain, cfg, nullptr, rng, init, hooks);
}

RunResult ga_with_reversals(ObjectiveProbe& probe, const Domain& domain, const GaConfig& cfg,
                            const ReversalConfig& rcfg, RngStream& rng,
                            const std::optional<Solution>& init, const GaHooks& hooks) {
  if (rcfg.mode != ReversalMode::kGaReversal) {
    throw ConfigError("ga_with_reversals requires reversal mode ga");
  }
  return run_ga(probe, domain, cfg, &rcfg, rng, init, hooks);
}

RunResult ga_with_stochastic_reversals(ObjectiveProbe& probe, const Domain& domain,
                                       const GaConfig& cfg, const ReversalConfig& rcfg,
                                       RngStream& rng, const std::optional<Solution>& init,
                                       const GaHooks& hooks) {
  if (rcfg.mode != ReversalMode::kStochasticReversal) {
    throw ConfigError("ga_with_stochastic_reversals requires reversal mode stochastic");
  }
  return run_ga(probe, domain, cfg, &rcfg, rng, init, hooks);
}

}  // namespace switchopt
