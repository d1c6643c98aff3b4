#include "switchopt/benchmarks.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "switchopt/errors.hpp"

namespace switchopt::bench {

namespace {

double sq(double v) { return v * v; }

// Best value of the 13-dim Schwefel function on the integer lattice: every
// coordinate at 421 (the continuous optimizer is 420.9687). Frozen from an
// exhaustive per-coordinate scan of [-500, 500]; see the benchmarks tests.
constexpr double kSchwefelLatticeOptimum = 0.0017677901241768268;

std::string normalize(std::string_view name) {
  std::string out;
  for (const char c : name) {
    if (c == '-' || c == '_' || c == ' ') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

Solution filled(std::size_t dims, Gene v) { return Solution(std::vector<Gene>(dims, v)); }

}  // namespace

// f(x) = sum_{i<n-1} 100 (x_{i+1} - x_i^2)^2 + (x_i - 1)^2
double rosenbrock(const Solution& x) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double xi = x[i];
    total += 100.0 * sq(x[i + 1] - xi * xi) + sq(xi - 1.0);
  }
  return total;
}

double zakharov(const Solution& x) {
  double squares = 0.0;
  double weighted = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    squares += sq(x[i]);
    weighted += 0.5 * static_cast<double>(i + 1) * x[i];
  }
  return squares + sq(weighted) + sq(sq(weighted));
}

double griewank(const Solution& x) {
  double sum = 0.0;
  double product = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += sq(x[i]) / 4000.0;
    product *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return sum - product + 1.0;
}

// f(x) = sum_{i<n-1} (x_i^2)^(x_{i+1}^2 + 1) + (x_{i+1}^2)^(x_i^2 + 1)
double brown(const Solution& x) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = sq(x[i]);
    const double b = sq(x[i + 1]);
    total += std::pow(a, b + 1.0) + std::pow(b, a + 1.0);
  }
  return total;
}

double sphere(const Solution& x) {
  double total = 0.0;
  for (const Gene v : x.genes) total += sq(v);
  return total;
}

double schwefel(const Solution& x) {
  double total = 418.9829 * static_cast<double>(x.size());
  for (const Gene v : x.genes) total -= v * std::sin(std::sqrt(std::abs(static_cast<double>(v))));
  return total;
}

double booth(const Solution& x) {
  return sq(x[0] + 2.0 * x[1] - 7.0) + sq(2.0 * x[0] + x[1] - 5.0);
}

double ackley_n2(const Solution& x) {
  return -200.0 * std::exp(-0.02 * std::sqrt(sq(x[0]) + sq(x[1])));
}

double three_hump_camel(const Solution& x) {
  const double a = x[0];
  const double b = x[1];
  return 2.0 * a * a - 1.05 * std::pow(a, 4) + std::pow(a, 6) / 6.0 + a * b + b * b;
}

double schaffer_n1(const Solution& x) {
  const double r2 = sq(x[0]) + sq(x[1]);
  return 0.5 + (sq(std::sin(r2 * r2)) - 0.5) / sq(1.0 + 0.001 * r2);
}

double matyas(const Solution& x) {
  return 0.26 * (sq(x[0]) + sq(x[1])) - 0.48 * x[0] * x[1];
}

const std::vector<BenchmarkSpec>& catalog() {
  static const std::vector<BenchmarkSpec> specs = [] {
    std::vector<BenchmarkSpec> v;
    const auto wide13 = Domain::uniform(13, -10, 10);
    const auto plane = Domain::uniform(2, -10, 10);
    v.push_back({"rosenbrock13", 13, rosenbrock, Domain::uniform(13, -5, 10), 0.0, filled(13, 1),
                 "Rosenbrock (1960), generalized n-dim form"});
    v.push_back({"zakharov13", 13, zakharov, wide13, 0.0, filled(13, 0),
                 "Zakharov, Virtual Library of Simulation Experiments (sfu.ca/~ssurjano)"});
    v.push_back({"griewank13", 13, griewank, wide13, 0.0, filled(13, 0),
                 "Griewank (1981), sfu.ca/~ssurjano"});
    v.push_back({"brown13", 13, brown, wide13, 0.0, filled(13, 0),
                 "Brown function, Jamil & Yang (2013) survey"});
    v.push_back({"sphere13", 13, sphere, wide13, 0.0, filled(13, 0), "Sphere, sfu.ca/~ssurjano"});
    v.push_back({"schwefel13", 13, schwefel, Domain::uniform(13, -500, 500),
                 kSchwefelLatticeOptimum, filled(13, 421), "Schwefel (1981), F7 form"});
    v.push_back({"booth", 2, booth, plane, 0.0, Solution{1, 3}, "Booth, sfu.ca/~ssurjano"});
    v.push_back({"ackley_n2", 2, ackley_n2, plane, -200.0, Solution{0, 0},
                 "Ackley N.2, Jamil & Yang (2013) survey"});
    v.push_back({"three_hump_camel", 2, three_hump_camel, plane, 0.0, Solution{0, 0},
                 "Three-hump camel, sfu.ca/~ssurjano"});
    v.push_back({"schaffer_n1", 2, schaffer_n1, plane, 0.0, Solution{0, 0},
                 "Modified Schaffer N.1, Mishra (2006) / al-roomi.org"});
    v.push_back({"matyas", 2, matyas, plane, 0.0, Solution{0, 0}, "Matyas, sfu.ca/~ssurjano"});
    return v;
  }();
  return specs;
}

const BenchmarkSpec& find(std::string_view name) {
  const auto key = normalize(name);
  for (const auto& spec : catalog()) {
    if (normalize(spec.name) == key) return spec;
  }
  throw ConfigError("unknown benchmark function '" + std::string(name) + "'");
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& spec : catalog()) out.push_back(spec.name);
  return out;
}

double evaluate_benchmark(const BenchmarkSpec& spec, const Solution& s) {
  if (s.size() != spec.dims) {
    throw DimensionError(spec.name + " expects " + std::to_string(spec.dims) + " genes, got " +
                         std::to_string(s.size()));
  }
  return spec.formula(s);
}

ObjectiveProbe make_probe(const BenchmarkSpec& spec) {
  return ObjectiveProbe(spec.formula, spec.dims);
}

}  // namespace switchopt::bench
