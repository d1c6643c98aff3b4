#include "switchopt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "switchopt/benchmarks.hpp"
#include "switchopt/errors.hpp"

namespace switchopt {

namespace {

struct KindInfo {
  AlgorithmKind kind;
  const char* name;
  const char* letter;
};

constexpr KindInfo kKinds[] = {
    {AlgorithmKind::kGa, "ga", "A"},
    {AlgorithmKind::kGaReverseOps, "ga-reverse-ops", "B"},
    {AlgorithmKind::kGaReversals, "ga-reversals", "C"},
    {AlgorithmKind::kHillClimbing, "hc", "D"},
    {AlgorithmKind::kRandomSearch, "rs", "E"},
    {AlgorithmKind::kSimulatedAnnealing, "sa", "F"},
    {AlgorithmKind::kGaStochastic, "ga-stochastic-reversals", "G"},
    {AlgorithmKind::kIteratedChain, "ic", "IC"},
};

const KindInfo& info(AlgorithmKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k;
  }
  throw ConfigError("unknown algorithm kind");
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

AlgorithmKind parse_algorithm_kind(std::string_view name) {
  const std::string key = lower(name);
  for (const auto& k : kKinds) {
    if (key == k.name || key == lower(k.letter)) return k.kind;
  }
  if (key == "hill-climbing") return AlgorithmKind::kHillClimbing;
  if (key == "random-search") return AlgorithmKind::kRandomSearch;
  if (key == "simulated-annealing") return AlgorithmKind::kSimulatedAnnealing;
  if (key == "ga-stochastic") return AlgorithmKind::kGaStochastic;
  throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

std::string algorithm_name(AlgorithmKind kind) { return info(kind).name; }
std::string algorithm_letter(AlgorithmKind kind) { return info(kind).letter; }

std::string AlgorithmSpec::label() const {
  if (kind != AlgorithmKind::kIteratedChain) return algorithm_letter(kind);
  return "IC(" + algorithm_letter(initial) + "," + algorithm_letter(chained) + ")";
}

void AlgorithmSpec::validate() const {
  auto check = [&](AlgorithmKind k) {
    switch (k) {
      case AlgorithmKind::kGa:
      case AlgorithmKind::kGaReverseOps:
        ga.validate();
        break;
      case AlgorithmKind::kGaReversals:
      case AlgorithmKind::kGaStochastic:
        ga.validate();
        reversal.validate(ga.generations);
        break;
      case AlgorithmKind::kHillClimbing:
      case AlgorithmKind::kRandomSearch:
        local.validate();
        break;
      case AlgorithmKind::kSimulatedAnnealing:
        sa.validate();
        break;
      case AlgorithmKind::kIteratedChain:
        throw ConfigError("iterated chaining cannot be a chain constituent");
    }
  };
  if (kind == AlgorithmKind::kIteratedChain) {
    chain.validate();
    check(initial);
    check(chained);
  } else {
    check(kind);
  }
}

Algorithm make_algorithm(const AlgorithmSpec& spec, AlgorithmKind kind) {
  using Init = const std::optional<Solution>&;
  switch (kind) {
    case AlgorithmKind::kGa:
    case AlgorithmKind::kGaReverseOps: {
      GaConfig cfg = spec.ga;
      cfg.reverse_ops = kind == AlgorithmKind::kGaReverseOps;
      return [cfg](ObjectiveProbe& p, const Domain& d, RngStream& r, Init init) {
        return ga(p, d, cfg, r, init);
      };
    }
    case AlgorithmKind::kGaReversals: {
      ReversalConfig rcfg = spec.reversal;
      rcfg.mode = ReversalMode::kGaReversal;
      return [cfg = spec.ga, rcfg](ObjectiveProbe& p, const Domain& d, RngStream& r, Init init) {
        return ga_with_reversals(p, d, cfg, rcfg, r, init);
      };
    }
    case AlgorithmKind::kGaStochastic: {
      ReversalConfig rcfg = spec.reversal;
      rcfg.mode = ReversalMode::kStochasticReversal;
      return [cfg = spec.ga, rcfg](ObjectiveProbe& p, const Domain& d, RngStream& r, Init init) {
        return ga_with_stochastic_reversals(p, d, cfg, rcfg, r, init);
      };
    }
    case AlgorithmKind::kHillClimbing:
      return [cfg = spec.local](ObjectiveProbe& p, const Domain& d, RngStream& r, Init init) {
        return hill_climbing(p, d, cfg, r, init);
      };
    case AlgorithmKind::kRandomSearch:
      return [cfg = spec.local](ObjectiveProbe& p, const Domain& d, RngStream& r, Init init) {
        return random_search(p, d, cfg, r, init);
      };
    case AlgorithmKind::kSimulatedAnnealing:
      return [cfg = spec.sa](ObjectiveProbe& p, const Domain& d, RngStream& r, Init init) {
        return simulated_annealing(p, d, cfg, r, init);
      };
    case AlgorithmKind::kIteratedChain:
      break;
  }
  throw ConfigError("iterated chaining cannot be a chain constituent");
}

Algorithm make_algorithm(const AlgorithmSpec& spec) {
  if (spec.kind != AlgorithmKind::kIteratedChain) return make_algorithm(spec, spec.kind);
  Algorithm first = make_algorithm(spec, spec.initial);
  Algorithm second = make_algorithm(spec, spec.chained);
  return [first, second, cfg = spec.chain](ObjectiveProbe& p, const Domain& d, RngStream& r,
                                           const std::optional<Solution>&) {
    return iterated_chain(first, second, p, d, cfg, r);
  };
}

Problem benchmark_problem(std::string_view function_name) {
  const auto& spec = bench::find(function_name);
  return Problem{spec.name, spec.formula, spec.domain};
}

Problem flight_problem(std::shared_ptr<const flight::FlightTable> table) {
  Domain domain = table->domain();
  return Problem{"flight",
                 [table](const Solution& s) { return flight::schedule_cost(*table, s); },
                 std::move(domain)};
}

StatsSummary summarize(std::span<const RunResult> runs) {
  if (runs.empty()) throw UsageError("cannot summarize an empty batch");
  const auto n = static_cast<double>(runs.size());
  StatsSummary s;
  s.min_cost = runs.front().best_cost;
  s.max_cost = runs.front().best_cost;
  double cost_sum = 0.0, nfe_sum = 0.0, wall_sum = 0.0;
  for (const auto& r : runs) {
    cost_sum += r.best_cost;
    nfe_sum += static_cast<double>(r.nfe);
    wall_sum += r.wall_ms;
    s.min_cost = std::min(s.min_cost, r.best_cost);
    s.max_cost = std::max(s.max_cost, r.best_cost);
  }
  s.mean_cost = cost_sum / n;
  double sq_dev = 0.0;
  for (const auto& r : runs) sq_dev += (r.best_cost - s.mean_cost) * (r.best_cost - s.mean_cost);
  s.std_cost = std::sqrt(sq_dev / n);
  // Rounding in the mean can push it a ulp outside [min, max] for constant batches.
  s.mean_cost = std::clamp(s.mean_cost, s.min_cost, s.max_cost);
  s.mean_nfe = nfe_sum / n;
  s.mean_wall_ms = wall_sum / n;
  return s;
}

RunResult run_single(const Problem& problem, const AlgorithmSpec& algorithm,
                     std::uint64_t master_seed, std::size_t index) {
  const Algorithm algo = make_algorithm(algorithm);
  ObjectiveProbe probe = problem.probe();
  RngStream rng = RngStream::derive(master_seed, index);
  return algo(probe, problem.domain, rng, std::nullopt);
}

BatchResult run_batch(const ExperimentSpec& spec) {
  if (spec.runs < 1) throw ConfigError("runs must be >= 1");
  if (spec.parallelism < 1) throw ConfigError("parallelism must be >= 1");
  spec.algorithm.validate();

  BatchResult batch;
  batch.runs.resize(spec.runs);
  std::vector<std::exception_ptr> errors(spec.runs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < spec.runs; i = next++) {
      try {
        batch.runs[i] = run_single(spec.problem, spec.algorithm, spec.master_seed, i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min(spec.parallelism, spec.runs);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  batch.summary = summarize(batch.runs);
  return batch;
}

TableFormat parse_table_format(std::string_view name) {
  const std::string key = lower(name);
  if (key == "csv") return TableFormat::kCsv;
  if (key == "json") return TableFormat::kJson;
  throw ConfigError("unknown format '" + std::string(name) + "' (expected csv or json)");
}

namespace {

std::string two_decimals(double v) {
  char buf[64];
  if (std::isfinite(v) && std::abs(v) >= 1e15) {
    std::snprintf(buf, sizeof buf, "%.2e", v);
  } else {
    std::snprintf(buf, sizeof buf, "%.2f", v);
  }
  std::string out(buf);
  if (out == "-0.00") out = "0.00";
  return out;
}

struct Row {
  const char* name;
  double StatsSummary::*field;
};

constexpr Row kRows[] = {
    {"mean", &StatsSummary::mean_cost}, {"std", &StatsSummary::std_cost},
    {"min", &StatsSummary::min_cost},   {"max", &StatsSummary::max_cost},
    {"nfe", &StatsSummary::mean_nfe},   {"runtime_ms", &StatsSummary::mean_wall_ms},
};

constexpr const char* kJsonKeys[] = {"mean_cost", "std_cost", "min_cost",
                                     "max_cost",  "mean_nfe", "mean_wall_ms"};

}  // namespace

std::string emit_table(std::span<const LabeledSummary> summaries, TableFormat format,
                       const TableOptions& options) {
  if (summaries.empty()) throw UsageError("emit_table needs at least one summary");
  const std::size_t row_count = options.timing ? 6 : 5;

  if (format == TableFormat::kJson) {
    nlohmann::json columns = nlohmann::json::array();
    for (const auto& [label, s] : summaries) {
      nlohmann::json col;
      col["label"] = label;
      for (std::size_t r = 0; r < row_count; ++r) col[kJsonKeys[r]] = s.*kRows[r].field;
      columns.push_back(std::move(col));
    }
    return nlohmann::json{{"columns", std::move(columns)}}.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "metric";
  for (const auto& [label, s] : summaries) out << ',' << label;
  out << '\n';
  for (std::size_t r = 0; r < row_count; ++r) {
    out << kRows[r].name;
    for (const auto& [label, s] : summaries) out << ',' << two_decimals(s.*kRows[r].field);
    out << '\n';
  }
  return out.str();
}

std::vector<LabeledSummary> parse_table_json(std::string_view json_text) {
  std::vector<LabeledSummary> out;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    for (const auto& col : doc.at("columns")) {
      StatsSummary s;
      for (std::size_t r = 0; r < 6; ++r) {
        if (col.contains(kJsonKeys[r])) s.*kRows[r].field = col[kJsonKeys[r]].get<double>();
      }
      out.emplace_back(col.at("label").get<std::string>(), s);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad table JSON: ") + e.what());
  }
  return out;
}

std::string emit_history(const RunResult& result) {
  if (result.history.empty()) throw UsageError("run has no history");
  std::ostringstream out;
  out << "iteration,cost\n";
  char buf[64];
  for (const auto& p : result.history) {
    std::snprintf(buf, sizeof buf, "%.17g", p.cost);
    out << p.iteration << ',' << buf << '\n';
  }
  return out.str();
}

std::vector<HistoryPoint> running_minimum(std::span<const HistoryPoint> history) {
  std::vector<HistoryPoint> out;
  out.reserve(history.size());
  for (const auto& p : history) {
    out.push_back(out.empty() || p.cost < out.back().cost ? p : HistoryPoint{p.iteration, out.back().cost});
  }
  return out;
}

}  // namespace switchopt
