#pragma once

#include <cstddef>
#include <functional>
#include <utility>

#include "switchopt/types.hpp"

namespace switchopt {

using CostFunction = std::function<double(const Solution&)>;

enum class Sense { kMinimize, kMaximizeReversed };

/// Evaluation-counting, sign-flippable wrapper around a cost function.
///
/// Every algorithm minimizes `evaluate`. In kMaximizeReversed mode the true
/// cost is negated, so minimizing the probe maximizes the objective. The
/// counter is the run's n.f.e. A probe is owned by exactly one run at a time.
class ObjectiveProbe {
 public:
  /// Called with the true cost of every evaluated solution.
  using Observer = std::function<void(const Solution&, double true_cost)>;

  ObjectiveProbe(CostFunction target, std::size_t dims)
      : target_(std::move(target)), dims_(dims) {}

  /// Sign-adjusted cost. Throws DimensionError when s has the wrong length.
  double evaluate(const Solution& s);

  /// Underlying cost without counting or sign adjustment.
  double true_cost(const Solution& s) const;

  /// Converts a value returned by `evaluate` back to true objective units.
  double to_true(double probe_value) const noexcept {
    return sense_ == Sense::kMinimize ? probe_value : -probe_value;
  }

  std::size_t eval_count() const noexcept { return eval_count_; }
  std::size_t dims() const noexcept { return dims_; }

  Sense sense() const noexcept { return sense_; }
  void set_sense(Sense s) noexcept { sense_ = s; }
  void flip() noexcept {
    sense_ = sense_ == Sense::kMinimize ? Sense::kMaximizeReversed : Sense::kMinimize;
  }

  /// Installs `obs` and returns the previously installed observer.
  Observer exchange_observer(Observer obs) { return std::exchange(observer_, std::move(obs)); }

 private:
  CostFunction target_;
  std::size_t dims_;
  std::size_t eval_count_ = 0;
  Sense sense_ = Sense::kMinimize;
  Observer observer_;
};

/// Installs an observer for the lifetime of the guard, restoring the previous one on exit.
class ScopedObserver {
 public:
  ScopedObserver(ObjectiveProbe& probe, ObjectiveProbe::Observer obs)
      : probe_(probe), previous_(probe.exchange_observer(std::move(obs))) {}
  ~ScopedObserver() { probe_.exchange_observer(std::move(previous_)); }

  ScopedObserver(const ScopedObserver&) = delete;
  ScopedObserver& operator=(const ScopedObserver&) = delete;

 private:
  ObjectiveProbe& probe_;
  ObjectiveProbe::Observer previous_;
};

/// Tracks the lowest true cost seen and the solution that produced it.
class BestTracker {
 public:
  void observe(const Solution& s, double true_cost) {
    if (!best_ || true_cost < cost_) {
      best_ = s;
      cost_ = true_cost;
    }
  }
  bool has_value() const noexcept { return best_.has_value(); }
  const Solution& solution() const { return *best_; }
  double cost() const noexcept { return cost_; }

 private:
  std::optional<Solution> best_;
  double cost_ = 0.0;
};

}  // namespace switchopt
