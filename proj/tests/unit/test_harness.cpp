#include <doctest.h>

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "flight_fixture.hpp"
#include "switchopt/errors.hpp"
#include "switchopt/harness.hpp"

using namespace switchopt;

namespace {

RunResult run_with(double cost, std::size_t nfe, double ms) {
  RunResult r;
  r.best_cost = cost;
  r.nfe = nfe;
  r.wall_ms = ms;
  return r;
}

AlgorithmSpec quick(AlgorithmKind kind) {
  AlgorithmSpec spec;
  spec.kind = kind;
  spec.ga.pop_size = 20;
  spec.ga.generations = 20;
  spec.reversal.step_length = 5;
  return spec;
}

}  // namespace

TEST_CASE("algorithm names and labels") {
  CHECK(parse_algorithm_kind("ga-reversals") == AlgorithmKind::kGaReversals);
  CHECK(parse_algorithm_kind("C") == AlgorithmKind::kGaReversals);
  CHECK(parse_algorithm_kind("g") == AlgorithmKind::kGaStochastic);
  CHECK(parse_algorithm_kind("IC") == AlgorithmKind::kIteratedChain);
  CHECK_THROWS_AS(parse_algorithm_kind("tabu"), ConfigError);
  for (const auto kind : {AlgorithmKind::kGa, AlgorithmKind::kGaReverseOps, AlgorithmKind::kGaReversals,
                          AlgorithmKind::kHillClimbing, AlgorithmKind::kRandomSearch,
                          AlgorithmKind::kSimulatedAnnealing, AlgorithmKind::kGaStochastic}) {
    CHECK(parse_algorithm_kind(algorithm_name(kind)) == kind);
    CHECK(parse_algorithm_kind(algorithm_letter(kind)) == kind);
  }
  AlgorithmSpec ic;
  ic.kind = AlgorithmKind::kIteratedChain;
  CHECK(ic.label() == "IC(E,D)");
  CHECK(quick(AlgorithmKind::kGaReversals).label() == "C");
  ic.chained = AlgorithmKind::kIteratedChain;
  CHECK_THROWS_AS(ic.validate(), ConfigError);
}

TEST_CASE("summary statistics") {
  const std::vector<RunResult> runs{run_with(1, 10, 2), run_with(2, 20, 4), run_with(6, 30, 6)};
  const StatsSummary s = summarize(runs);
  CHECK(s.mean_cost == 3.0);
  CHECK(s.std_cost == doctest::Approx(std::sqrt(14.0 / 3.0)));
  CHECK(s.min_cost == 1.0);
  CHECK(s.max_cost == 6.0);
  CHECK(s.mean_nfe == 20.0);
  CHECK(s.mean_wall_ms == 4.0);

  const std::vector<RunResult> constant(20, run_with(0.1, 1, 0));
  const StatsSummary c = summarize(constant);
  CHECK(c.mean_cost == 0.1);
  CHECK(c.std_cost == doctest::Approx(0.0).epsilon(1e-15));

  CHECK_THROWS_AS(summarize(std::vector<RunResult>{}), UsageError);
}

TEST_CASE("csv table shape") {
  const std::vector<LabeledSummary> cols{{"A", {1.234, 0.5, 1, 2, 1000, 12.5}},
                                         {"IC(E,D)", {-0.001, 0, -0.004, 0, 10, 1}}};
  const std::string csv = emit_table(cols, TableFormat::kCsv);
  CHECK(csv ==
        "metric,A,IC(E,D)\n"
        "mean,1.23,0.00\n"
        "std,0.50,0.00\n"
        "min,1.00,0.00\n"
        "max,2.00,0.00\n"
        "nfe,1000.00,10.00\n"
        "runtime_ms,12.50,1.00\n");
  const std::string stable = emit_table(cols, TableFormat::kCsv, TableOptions{false});
  CHECK(stable.find("runtime_ms") == std::string::npos);

  const std::vector<LabeledSummary> big{{"E", {2.4e17, 0, 0, 0, 0, 0}}};
  CHECK(emit_table(big, TableFormat::kCsv).find("mean,2.40e+17\n") != std::string::npos);
  CHECK_THROWS_AS(emit_table(std::vector<LabeledSummary>{}, TableFormat::kCsv), UsageError);
}

TEST_CASE("json table round-trips") {
  const std::vector<LabeledSummary> cols{{"A", {1.0 / 3.0, 0.25, 0.1, 0.7, 1099, 3.5}},
                                         {"F", {4620.5, 12.125, 4000, 5000, 512, 0.75}}};
  const auto back = parse_table_json(emit_table(cols, TableFormat::kJson));
  CHECK(back == cols);

  const auto untimed = parse_table_json(emit_table(cols, TableFormat::kJson, TableOptions{false}));
  CHECK(untimed[0].second.mean_wall_ms == 0.0);
  CHECK(untimed[0].second.mean_cost == cols[0].second.mean_cost);
  CHECK_THROWS_AS(parse_table_json("[]"), ParseError);
  CHECK(parse_table_format("JSON") == TableFormat::kJson);
  CHECK_THROWS_AS(parse_table_format("xml"), ConfigError);
}

TEST_CASE("history output") {
  RunResult r;
  r.history = {{0, 10.5}, {1, 0.1}, {2, 3.0}};
  CHECK(emit_history(r) == "iteration,cost\n0,10.5\n1,0.10000000000000001\n2,3\n");
  const auto mins = running_minimum(r.history);
  CHECK(mins == std::vector<HistoryPoint>{{0, 10.5}, {1, 0.1}, {2, 0.1}});
  CHECK_THROWS_AS(emit_history(RunResult{}), UsageError);
}

TEST_CASE("batches do not depend on the worker count") {
  for (const auto kind : {AlgorithmKind::kGaReversals, AlgorithmKind::kSimulatedAnnealing,
                          AlgorithmKind::kIteratedChain}) {
    ExperimentSpec spec{benchmark_problem("rosenbrock13"), quick(kind), 12, 99, 1};
    const BatchResult serial = run_batch(spec);
    spec.parallelism = 8;
    const BatchResult parallel = run_batch(spec);
    REQUIRE(serial.runs.size() == 12);
    for (std::size_t i = 0; i < serial.runs.size(); ++i) {
      CHECK(serial.runs[i].best == parallel.runs[i].best);
      CHECK(serial.runs[i].history == parallel.runs[i].history);
      CHECK(serial.runs[i].nfe == parallel.runs[i].nfe);
    }
    const std::vector<LabeledSummary> a{{spec.algorithm.label(), serial.summary}};
    const std::vector<LabeledSummary> b{{spec.algorithm.label(), parallel.summary}};
    CHECK(emit_table(a, TableFormat::kCsv, TableOptions{false}) ==
          emit_table(b, TableFormat::kCsv, TableOptions{false}));

    // The summary is a pure function of the per-run results.
    StatsSummary recomputed = summarize(parallel.runs);
    CHECK(recomputed == parallel.summary);
  }
}

TEST_CASE("runs of a batch use distinct streams") {
  ExperimentSpec spec{benchmark_problem("zakharov13"), quick(AlgorithmKind::kRandomSearch), 5, 1, 1};
  const BatchResult b = run_batch(spec);
  for (std::size_t i = 1; i < b.runs.size(); ++i) CHECK(b.runs[i].history != b.runs[0].history);
  CHECK(run_single(spec.problem, spec.algorithm, 1, 3).history == b.runs[3].history);
}

TEST_CASE("batch errors") {
  ExperimentSpec spec{benchmark_problem("booth"), quick(AlgorithmKind::kGa), 0, 1, 1};
  CHECK_THROWS_AS(run_batch(spec), ConfigError);
  spec.runs = 2;
  spec.algorithm.ga.elite_rate = 0.01;
  CHECK_THROWS_AS(run_batch(spec), ConfigError);
}

TEST_CASE("flight problems run through the harness") {
  auto table = std::make_shared<const flight::FlightTable>(testing::micro_table(4, 3, 10));
  const Problem p = flight_problem(table);
  CHECK(p.domain == Domain::uniform(6, 0, 9));
  ExperimentSpec spec{p, quick(AlgorithmKind::kHillClimbing), 4, 2, 2};
  const BatchResult b = run_batch(spec);
  for (const auto& r : b.runs) CHECK(r.best_cost == flight::schedule_cost(*table, r.best));
}
