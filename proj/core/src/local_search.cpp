#include "switchopt/local_search.hpp"

#include <cmath>

#include "switchopt/errors.hpp"
#include "switchopt/operators.hpp"
#include "stopwatch.hpp"

namespace switchopt {

void LocalSearchConfig::validate() const {
  if (max_iter < 1) throw ConfigError("max_iter must be >= 1");
}

void SaConfig::validate() const {
  if (!(t_stop > 0.0)) throw ConfigError("t_stop must be > 0");
  if (!(t0 > t_stop)) throw ConfigError("t0 must exceed t_stop");
  if (!(cooling > 0.0 && cooling < 1.0)) throw ConfigError("cooling must lie in (0, 1)");
  if (step < 1) throw ConfigError("step must be >= 1");
}

std::size_t SaConfig::iterations() const {
  validate();
  std::size_t n = 0;
  for (double t = t0; t > t_stop; t *= cooling) ++n;
  return n;
}

double sa_acceptance(double current, double candidate, double temperature) {
  if (candidate < current) return 1.0;
  return std::exp((current - candidate) / temperature);
}

namespace {

Solution starting_point(const Domain& domain, RngStream& rng, const std::optional<Solution>& init) {
  if (init) {
    domain.check(*init);
    return *init;
  }
  return random_solution(domain, rng);
}

}  // namespace

RunResult random_search(ObjectiveProbe& probe, const Domain& domain, const LocalSearchConfig& cfg,
                        RngStream& rng, const std::optional<Solution>& init) {
  cfg.validate();
  const Stopwatch clock;
  const std::size_t evals_before = probe.eval_count();

  RunResult result;
  double best_value = 0.0;
  bool have_best = false;
  std::size_t iteration = 0;
  auto consider = [&](Solution s) {
    const double v = probe.evaluate(s);
    result.history.push_back({iteration++, probe.to_true(v)});
    if (!have_best || v < best_value) {
      best_value = v;
      result.best = std::move(s);
      have_best = true;
    }
  };

  if (init) {
    domain.check(*init);
    consider(*init);
  }
  for (std::size_t i = 0; i < cfg.max_iter; ++i) consider(random_solution(domain, rng));

  result.best_cost = probe.to_true(best_value);
  result.nfe = probe.eval_count() - evals_before;
  result.wall_ms = clock.elapsed_ms();
  return result;
}

RunResult hill_climbing(ObjectiveProbe& probe, const Domain& domain, const LocalSearchConfig& cfg,
                        RngStream& rng, const std::optional<Solution>& init) {
  cfg.validate();
  const Stopwatch clock;
  const std::size_t evals_before = probe.eval_count();

  RunResult result;
  Solution current = starting_point(domain, rng, init);
  double current_value = probe.evaluate(current);
  result.history.push_back({0, probe.to_true(current_value)});

  for (std::size_t iter = 0; iter < cfg.max_iter; ++iter) {
    std::optional<Solution> best_neighbour;
    double best_neighbour_value = current_value;
    for (std::size_t d = 0; d < domain.size(); ++d) {
      for (const int delta : {-1, +1}) {
        const long long moved = static_cast<long long>(current[d]) + delta;
        if (moved < domain[d].lo || moved > domain[d].hi) continue;
        Solution neighbour = current;
        neighbour[d] = static_cast<Gene>(moved);
        const double v = probe.evaluate(neighbour);
        if (v < best_neighbour_value) {
          best_neighbour_value = v;
          best_neighbour = std::move(neighbour);
        }
      }
    }
    if (!best_neighbour) break;
    current = std::move(*best_neighbour);
    current_value = best_neighbour_value;
    result.history.push_back({iter + 1, probe.to_true(current_value)});
  }

  result.best = std::move(current);
  result.best_cost = probe.to_true(current_value);
  result.nfe = probe.eval_count() - evals_before;
  result.wall_ms = clock.elapsed_ms();
  return result;
}

RunResult simulated_annealing(ObjectiveProbe& probe, const Domain& domain, const SaConfig& cfg,
                              RngStream& rng, const std::optional<Solution>& init) {
  cfg.validate();
  const Stopwatch clock;
  const std::size_t evals_before = probe.eval_count();

  RunResult result;
  Solution current = starting_point(domain, rng, init);
  double current_value = 0.0;
  double best_value = 0.0;
  bool have_best = false;
  auto track = [&](const Solution& s, double v) {
    if (!have_best || v < best_value) {
      best_value = v;
      result.best = s;
      have_best = true;
    }
  };

  std::size_t iteration = 0;
  for (double t = cfg.t0; t > cfg.t_stop; t *= cfg.cooling, ++iteration) {
    current_value = probe.evaluate(current);
    track(current, current_value);
    result.history.push_back({iteration, probe.to_true(current_value)});

    const std::size_t index = rng.index(current.size());
    const Direction dir = rng.bernoulli(0.5) ? Direction::kDown : Direction::kUp;
    Solution candidate = mutate_at(current, domain, index, dir, cfg.step);
    const double candidate_value = probe.evaluate(candidate);

    const bool accept = candidate_value < current_value ||
                        rng.uniform01() < sa_acceptance(current_value, candidate_value, t);
    if (accept) {
      current = std::move(candidate);
      current_value = candidate_value;
      track(current, current_value);
    }
  }
  // Final state was evaluated inside the loop (as current or accepted candidate).
  result.history.push_back({iteration, probe.to_true(current_value)});

  result.best_cost = probe.to_true(best_value);
  result.nfe = probe.eval_count() - evals_before;
  result.wall_ms = clock.elapsed_ms();
  return result;
}

}  // namespace switchopt
