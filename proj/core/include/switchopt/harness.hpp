#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "switchopt/chaining.hpp"
#include "switchopt/flight.hpp"
#include "switchopt/genetic.hpp"
#include "switchopt/local_search.hpp"
#include "switchopt/probe.hpp"
#include "switchopt/types.hpp"

namespace switchopt {

enum class AlgorithmKind {
  kGa,                 ///< A: standard GA
  kGaReverseOps,       ///< B: GA with reverse operations
  kGaReversals,        ///< C: GA with reversals
  kHillClimbing,       ///< D
  kRandomSearch,       ///< E
  kSimulatedAnnealing, ///< F
  kGaStochastic,       ///< G: GA with random-search reversals
  kIteratedChain,      ///< IC(initial, chained)
};

/// Accepts the CLI names (ga, ga-reverse-ops, ga-reversals, hc, rs, sa,
/// ga-stochastic-reversals, ic) and the table letters A-G. Throws ConfigError.
AlgorithmKind parse_algorithm_kind(std::string_view name);

/// CLI name of a kind ("ga-reversals").
std::string algorithm_name(AlgorithmKind kind);

/// Table letter ("C"), or "IC" for chaining.
std::string algorithm_letter(AlgorithmKind kind);

/// Everything needed to build any algorithm handle.
struct AlgorithmSpec {
  AlgorithmKind kind = AlgorithmKind::kGa;
  GaConfig ga{};
  ReversalConfig reversal{};
  LocalSearchConfig local{};
  SaConfig sa{};
  ChainConfig chain{};
  AlgorithmKind initial = AlgorithmKind::kRandomSearch;
  AlgorithmKind chained = AlgorithmKind::kHillClimbing;

  /// "C" or "IC(E,D)".
  std::string label() const;
  void validate() const;
};

/// Handle for `kind` using the configs in `spec`. Chaining is not allowed as a
/// constituent (throws ConfigError).
Algorithm make_algorithm(const AlgorithmSpec& spec, AlgorithmKind kind);

/// Handle for spec.kind (including iterated chaining).
Algorithm make_algorithm(const AlgorithmSpec& spec);

/// An objective plus its search space.
struct Problem {
  std::string label;
  CostFunction cost;
  Domain domain;

  ObjectiveProbe probe() const { return ObjectiveProbe(cost, domain.size()); }
};

Problem benchmark_problem(std::string_view function_name);
Problem flight_problem(std::shared_ptr<const flight::FlightTable> table);

struct ExperimentSpec {
  Problem problem;
  AlgorithmSpec algorithm;
  std::size_t runs = 20;
  std::uint64_t master_seed = 0;
  std::size_t parallelism = 1;
};

struct StatsSummary {
  double mean_cost = 0.0;
  double std_cost = 0.0;  ///< population standard deviation
  double min_cost = 0.0;
  double max_cost = 0.0;
  double mean_nfe = 0.0;
  double mean_wall_ms = 0.0;

  friend bool operator==(const StatsSummary&, const StatsSummary&) = default;
};

/// Aggregates best costs, nfe and wall time. Throws UsageError on an empty list.
StatsSummary summarize(std::span<const RunResult> runs);

/// Run `index` of a batch: fresh probe, stream derived from (master_seed, index).
RunResult run_single(const Problem& problem, const AlgorithmSpec& algorithm,
                     std::uint64_t master_seed, std::size_t index);

struct BatchResult {
  StatsSummary summary;
  std::vector<RunResult> runs;  ///< in run-index order
};

/// Executes spec.runs independent runs on spec.parallelism workers. The result
/// (wall times aside) does not depend on the worker count.
BatchResult run_batch(const ExperimentSpec& spec);

enum class TableFormat { kCsv, kJson };

TableFormat parse_table_format(std::string_view name);

struct TableOptions {
  /// Include the runtime row / field. Off gives output that is byte-stable across runs.
  bool timing = true;
};

using LabeledSummary = std::pair<std::string, StatsSummary>;

/// One column per label; rows mean, std, min, max, nfe[, runtime_ms]. CSV
/// numbers carry two decimals, JSON numbers full precision. Throws UsageError
/// on an empty list.
std::string emit_table(std::span<const LabeledSummary> summaries, TableFormat format,
                       const TableOptions& options = {});

/// Inverse of emit_table(..., kJson, ...). Throws ParseError.
std::vector<LabeledSummary> parse_table_json(std::string_view json_text);

/// "iteration,cost" CSV of a run's history. Throws UsageError on empty history.
std::string emit_history(const RunResult& result);

/// Running minimum of a history (best-so-far curve).
std::vector<HistoryPoint> running_minimum(std::span<const HistoryPoint> history);

}  // namespace switchopt
