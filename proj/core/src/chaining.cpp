#include "switchopt/chaining.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "switchopt/errors.hpp"
#include "stopwatch.hpp"

namespace switchopt {

void ChainConfig::validate() const {
  if (rounds < 1) throw ConfigError("rounds must be >= 1");
  if (tolerance < 0 || tolerance > 100) throw ConfigError("tolerance must lie in [0, 100]");
  if (n_obs < 1) throw ConfigError("n_obs must be >= 1");
  if (!(random_mutation_probability >= 0.0 && random_mutation_probability <= 1.0)) {
    throw ConfigError("random_mutation_probability must lie in [0, 1]");
  }
  ops.validate();
}

bool exceeds_recent_mean(double cost, std::span<const double> scores, std::size_t n_obs,
                         double slack) {
  if (scores.empty()) throw UsageError("early stopping needs at least one recorded score");
  const std::size_t window = std::min(n_obs, scores.size());
  const auto recent = scores.last(window);
  const double mean = std::accumulate(recent.begin(), recent.end(), 0.0) / static_cast<double>(window);
  return cost - slack > mean;
}

bool should_stop(double cost, std::span<const double> scores, const ChainConfig& cfg,
                 RngStream& rng) {
  const auto slack = static_cast<double>(rng.uniform_int(cfg.tolerance, 100));
  return exceeds_recent_mean(cost, scores, cfg.n_obs, slack);
}

namespace {

RunResult run_constituent(const Algorithm& algo, const char* role, ObjectiveProbe& probe,
                          const Domain& domain, RngStream& rng,
                          const std::optional<Solution>& init) {
  try {
    return algo(probe, domain, rng, init);
  } catch (const DimensionError& e) {
    throw ConfigError(std::string(role) + " algorithm rejected its initial solution: " + e.what());
  } catch (const ValidationError& e) {
    throw ConfigError(std::string(role) + " algorithm rejected its initial solution: " + e.what());
  }
}

}  // namespace

RunResult iterated_chain(const Algorithm& initial, const Algorithm& chained, ObjectiveProbe& probe,
                         const Domain& domain, const ChainConfig& cfg, RngStream& rng,
                         ChainTrace* trace) {
  cfg.validate();
  if (!initial || !chained) throw ConfigError("iterated chain needs two algorithms");

  const Stopwatch clock;
  RunResult result;
  ChainTrace local;
  ChainTrace& t = trace ? *trace : local;
  t = ChainTrace{};

  std::optional<Solution> weights;
  BestTracker best;
  for (std::size_t r = 0; r < cfg.rounds; ++r) {
    const bool last_round = r + 1 == cfg.rounds;

    RunResult first = run_constituent(initial, "initial", probe, domain, rng, weights);
    Solution handoff = first.best;
    if (cfg.diversity_mutation && rng.bernoulli(cfg.random_mutation_probability)) {
      handoff = one_point_mutation(handoff, domain, rng, cfg.ops);
    }

    RunResult second = run_constituent(chained, "chained", probe, domain, rng, handoff);
    weights = second.best;
    if (cfg.diversity_mutation && !last_round) {
      weights = one_point_mutation(*weights, domain, rng, cfg.ops);
    }

    const RunResult& round_best = second.best_cost < first.best_cost ? second : first;
    const double global_cost = round_best.best_cost;
    best.observe(round_best.best, global_cost);
    result.nfe += first.nfe + second.nfe;
    t.runs.push_back(std::move(first));
    t.runs.push_back(std::move(second));

    const bool stop = r >= 1 && should_stop(global_cost, t.scores, cfg, rng);
    t.scores.push_back(global_cost);
    result.history.push_back({r, global_cost});
    t.rounds_run = r + 1;
    if (stop) {
      t.stopped_early = true;
      break;
    }
  }

  result.best = best.solution();
  result.best_cost = best.cost();
  result.wall_ms = clock.elapsed_ms();
  return result;
}

}  // namespace switchopt
