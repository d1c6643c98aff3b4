// switchopt: command-line front end for the switching optimizers.
//
//   switchopt bench   --function matyas --algo ga-reversals --runs 20 --seed 7 --out table.csv
//   switchopt flight  --schedule schedule.txt --config problem.json --algo ic --initial rs --chained hc
//   switchopt history --algo ga-reversals --function rosenbrock13 --seed 3 --out history.csv
//
// Exit codes: 0 success, 2 configuration/usage error, 3 I/O or input-file error.

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "switchopt/switchopt.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct Options {
  std::string function;
  std::string schedule;
  std::string config;
  std::string algos = "ga";
  std::string initial = "rs";
  std::string chained = "hc";
  std::size_t runs = 20;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::string format = "csv";
  std::string out;
  bool no_timing = false;
  std::optional<std::size_t> n_k;
  bool no_diversity_mutation = false;
  switchopt::AlgorithmSpec spec;
};

void add_problem_flags(CLI::App& cmd, Options& o, bool function_flag, bool flight_flags) {
  if (function_flag) {
    cmd.add_option("--function", o.function, "Benchmark function name")
        ->check(CLI::IsMember(switchopt::bench::names(), CLI::ignore_case));
  }
  if (flight_flags) {
    cmd.add_option("--schedule", o.schedule, "Flight schedule file (ORG,DST,H:MM,H:MM,PRICE)");
    cmd.add_option("--config", o.config, "Problem config JSON (destination, people, penalty)");
  }
}

void add_algorithm_flags(CLI::App& cmd, Options& o) {
  auto& s = o.spec;
  cmd.add_option("--algo", o.algos,
                 "Algorithm(s), comma separated: ga, ga-reverse-ops, ga-reversals, "
                 "ga-stochastic-reversals, hc, rs, sa, ic, A-G, or 'all'")
      ->capture_default_str();
  cmd.add_option("--initial", o.initial, "IC initial algorithm")->capture_default_str();
  cmd.add_option("--chained", o.chained, "IC chained algorithm")->capture_default_str();

  cmd.add_option("--pop-size", s.ga.pop_size, "GA population size")->capture_default_str();
  cmd.add_option("--generations", s.ga.generations, "GA generations")->capture_default_str();
  cmd.add_option("--elite-rate", s.ga.elite_rate, "GA elitist selection rate")->capture_default_str();
  cmd.add_option("--p-mutation", s.ga.p_mutation, "GA probability of the single-parent operator")
      ->capture_default_str();
  cmd.add_option("--mutation-step", s.ga.ops.mutation_step, "One-point mutation step")
      ->capture_default_str();
  cmd.add_option("--down-probability", s.ga.ops.down_probability,
                 "Probability a mutation prefers the downward direction")
      ->capture_default_str();
  cmd.add_option("--n-k", o.n_k, "Reversal period (default generations/2)");
  cmd.add_option("--step-length", s.reversal.step_length, "Reversal window length")
      ->capture_default_str();

  cmd.add_option("--max-iter", s.local.max_iter, "RS/HC iteration cap")->capture_default_str();
  cmd.add_option("--t0", s.sa.t0, "SA initial temperature")->capture_default_str();
  cmd.add_option("--cooling", s.sa.cooling, "SA cooling rate")->capture_default_str();
  cmd.add_option("--t-stop", s.sa.t_stop, "SA stopping temperature")->capture_default_str();
  cmd.add_option("--sa-step", s.sa.step, "SA move size")->capture_default_str();

  cmd.add_option("--rounds", s.chain.rounds, "IC rounds")->capture_default_str();
  cmd.add_option("--tolerance", s.chain.tolerance, "IC early-stopping tolerance (0-100)")
      ->capture_default_str();
  cmd.add_option("--n-obs", s.chain.n_obs, "IC early-stopping window")->capture_default_str();
  cmd.add_option("--random-mutation-probability", s.chain.random_mutation_probability,
                 "IC probability of mutating the initial algorithm's output")
      ->capture_default_str();
  cmd.add_flag("--no-diversity-mutation", o.no_diversity_mutation,
               "IC: disable both hand-off mutations");
}

void add_batch_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("--runs", o.runs, "Independent seeded runs")->capture_default_str();
  cmd.add_option("--seed", o.seed, "Master seed")->capture_default_str();
  cmd.add_option("--threads", o.threads, "Worker threads (SWITCHOPT_THREADS overrides)")
      ->capture_default_str();
  cmd.add_option("--format", o.format, "Output format: csv or json")->capture_default_str();
  cmd.add_option("--out", o.out, "Output file (default stdout)");
  cmd.add_flag("--no-timing", o.no_timing, "Omit the runtime row so output is reproducible");
}

std::vector<switchopt::AlgorithmKind> parse_algorithm_list(const std::string& list) {
  using switchopt::AlgorithmKind;
  if (list == "all") {
    return {AlgorithmKind::kGa,           AlgorithmKind::kGaReverseOps,
            AlgorithmKind::kGaReversals,  AlgorithmKind::kHillClimbing,
            AlgorithmKind::kRandomSearch, AlgorithmKind::kSimulatedAnnealing,
            AlgorithmKind::kGaStochastic};
  }
  std::vector<AlgorithmKind> kinds;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) kinds.push_back(switchopt::parse_algorithm_kind(item));
  }
  if (kinds.empty()) throw switchopt::ConfigError("--algo is empty");
  return kinds;
}

switchopt::AlgorithmSpec finish_spec(const Options& o, switchopt::AlgorithmKind kind) {
  switchopt::AlgorithmSpec spec = o.spec;
  spec.kind = kind;
  spec.reversal.n_k = o.n_k;
  spec.chain.diversity_mutation = !o.no_diversity_mutation;
  spec.initial = switchopt::parse_algorithm_kind(o.initial);
  spec.chained = switchopt::parse_algorithm_kind(o.chained);
  spec.validate();
  return spec;
}

std::size_t resolve_threads(std::size_t requested) {
  if (const char* env = std::getenv("SWITCHOPT_THREADS"); env && *env) {
    try {
      const long long v = std::stoll(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw switchopt::ConfigError(std::string("SWITCHOPT_THREADS must be a positive integer, got '") +
                                 env + "'");
  }
  return requested;
}

// Input loading failures (missing file, malformed schedule) map to exit code 3.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

switchopt::Problem load_problem(const Options& o) {
  if (!o.function.empty()) return switchopt::benchmark_problem(o.function);
  if (o.schedule.empty() || o.config.empty()) {
    throw switchopt::ConfigError("need --function, or both --schedule and --config");
  }
  try {
    auto table = std::make_shared<const switchopt::flight::FlightTable>(
        switchopt::flight::load_flight_problem(o.schedule, o.config));
    return switchopt::flight_problem(std::move(table));
  } catch (const switchopt::Error& e) {
    throw InputError(e.what());
  }
}

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    switchopt::write_text_file(o.out, text);
  }
}

void run_table(const Options& o) {
  const auto format = switchopt::parse_table_format(o.format);
  const auto kinds = parse_algorithm_list(o.algos);
  std::vector<switchopt::AlgorithmSpec> specs;
  for (const auto kind : kinds) specs.push_back(finish_spec(o, kind));
  const switchopt::Problem problem = load_problem(o);

  std::vector<switchopt::LabeledSummary> columns;
  for (const auto& spec : specs) {
    switchopt::ExperimentSpec experiment{problem, spec, o.runs, o.seed, resolve_threads(o.threads)};
    columns.emplace_back(spec.label(), switchopt::run_batch(experiment).summary);
  }
  write_output(o, switchopt::emit_table(columns, format, {.timing = !o.no_timing}));
}

void run_history(const Options& o) {
  const auto kinds = parse_algorithm_list(o.algos);
  if (kinds.size() != 1) throw switchopt::ConfigError("history takes exactly one --algo");
  const auto spec = finish_spec(o, kinds.front());
  const switchopt::Problem problem = load_problem(o);
  write_output(o, switchopt::emit_history(switchopt::run_single(problem, spec, o.seed, 0)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Switching-based gradient-free optimizers: GA reversals and iterated chaining"};
  app.require_subcommand(1);

  Options bench_opts, flight_opts, history_opts;

  auto* bench = app.add_subcommand("bench", "Multi-seed statistics on a benchmark function");
  add_problem_flags(*bench, bench_opts, true, false);
  bench->get_option("--function")->required();
  add_algorithm_flags(*bench, bench_opts);
  add_batch_flags(*bench, bench_opts);

  auto* flight = app.add_subcommand("flight", "Multi-seed statistics on the flight-scheduling problem");
  add_problem_flags(*flight, flight_opts, false, true);
  flight->get_option("--schedule")->required();
  flight->get_option("--config")->required();
  add_algorithm_flags(*flight, flight_opts);
  add_batch_flags(*flight, flight_opts);

  auto* history = app.add_subcommand("history", "Cost history (iteration,cost CSV) of one seeded run");
  add_problem_flags(*history, history_opts, true, true);
  add_algorithm_flags(*history, history_opts);
  history->add_option("--seed", history_opts.seed, "Master seed (run index 0 is used)")
      ->capture_default_str();
  history->add_option("--out", history_opts.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (bench->parsed()) run_table(bench_opts);
    else if (flight->parsed()) run_table(flight_opts);
    else run_history(history_opts);
  } catch (const InputError& e) {
    std::cerr << "switchopt: input error: " << e.what() << '\n';
    return kExitIo;
  } catch (const switchopt::IoError& e) {
    std::cerr << "switchopt: I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const switchopt::ParseError& e) {
    std::cerr << "switchopt: parse error: " << e.what() << '\n';
    return kExitIo;
  } catch (const switchopt::Error& e) {
    std::cerr << "switchopt: config error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
