#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "switchopt/probe.hpp"
#include "switchopt/types.hpp"

namespace switchopt::bench {

/// One test function on an integer box.
struct BenchmarkSpec {
  std::string name;
  std::size_t dims;
  double (*formula)(const Solution&);
  Domain domain;
  double known_optimum_cost;
  Solution known_optimizer;
  std::string source;  ///< where the definition comes from
};

/// Rosenbrock(13), Zakharov(13), Griewank(13), Brown(13), Sphere(13),
/// Schwefel(13), Booth, Ackley N2, Three-hump camel, Schaffer N1, Matyas.
const std::vector<BenchmarkSpec>& catalog();

/// Lookup by catalog name ("rosenbrock13", "matyas", ...). Hyphens and case are
/// ignored. Throws ConfigError for unknown names.
const BenchmarkSpec& find(std::string_view name);

std::vector<std::string> names();

/// Formula value. Throws DimensionError on length mismatch.
double evaluate_benchmark(const BenchmarkSpec& spec, const Solution& s);

/// Counting probe over the function's formula.
ObjectiveProbe make_probe(const BenchmarkSpec& spec);

double rosenbrock(const Solution& x);
double zakharov(const Solution& x);
double griewank(const Solution& x);
double brown(const Solution& x);
double sphere(const Solution& x);
double schwefel(const Solution& x);
double booth(const Solution& x);
double ackley_n2(const Solution& x);
double three_hump_camel(const Solution& x);
double schaffer_n1(const Solution& x);
double matyas(const Solution& x);

}  // namespace switchopt::bench
