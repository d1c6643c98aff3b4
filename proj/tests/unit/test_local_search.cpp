#include <doctest.h>

#include <cmath>

#include "switchopt/benchmarks.hpp"
#include "switchopt/errors.hpp"
#include "switchopt/local_search.hpp"

using namespace switchopt;

namespace {

double sphere2(const Solution& s) {
  return static_cast<double>(s[0]) * s[0] + static_cast<double>(s[1]) * s[1];
}

}  // namespace

TEST_CASE("random search evaluates exactly max_iter points") {
  ObjectiveProbe probe(sphere2, 2);
  RngStream rng(3);
  const Domain d = Domain::uniform(2, -10, 10);
  const RunResult r = random_search(probe, d, {}, rng);
  CHECK(r.nfe == 100);
  CHECK(r.history.size() == 100);
  CHECK(d.contains(r.best));
  CHECK(r.best_cost == sphere2(r.best));
  double lowest = r.history.front().cost;
  for (const auto& h : r.history) lowest = std::min(lowest, h.cost);
  CHECK(lowest == r.best_cost);
}

TEST_CASE("random search with an initial point counts it") {
  ObjectiveProbe probe(sphere2, 2);
  RngStream rng(3);
  const Domain d = Domain::uniform(2, -10, 10);
  const RunResult r = random_search(probe, d, LocalSearchConfig{5}, rng, Solution{0, 0});
  CHECK(r.nfe == 6);
  CHECK(r.best == Solution{0, 0});
  CHECK(r.best_cost == 0.0);
  CHECK_THROWS_AS(random_search(probe, d, {}, rng, Solution{11, 0}), ValidationError);
  CHECK_THROWS_AS(random_search(probe, d, LocalSearchConfig{0}, rng), ConfigError);
}

TEST_CASE("hill climbing from [1,1] reaches the sphere optimum") {
  ObjectiveProbe probe(sphere2, 2);
  RngStream rng(0);
  const Domain d = Domain::uniform(2, -10, 10);
  const RunResult r = hill_climbing(probe, d, {}, rng, Solution{1, 1});
  CHECK(r.best == Solution{0, 0});
  CHECK(r.best_cost == 0.0);
  // [1,1] -> [0,1] -> [0,0] -> no improvement: 1 + 3 scans of 4 neighbours.
  CHECK(r.nfe == 13);
  REQUIRE(r.history.size() == 3);
  CHECK(r.history[0].cost == 2.0);
  CHECK(r.history[1].cost == 1.0);
  CHECK(r.history[2].cost == 0.0);
}

TEST_CASE("hill climbing at a local optimum scans the neighbourhood once") {
  const Domain d = Domain::uniform(2, -10, 10);
  ObjectiveProbe probe(sphere2, 2);
  RngStream rng(0);
  const RunResult r = hill_climbing(probe, d, {}, rng, Solution{0, 0});
  CHECK(r.nfe == 5);
  CHECK(r.best == Solution{0, 0});

  // Corner: only two in-bounds neighbours.
  ObjectiveProbe corner([](const Solution& s) { return -sphere2(s); }, 2);
  const RunResult c = hill_climbing(corner, d, {}, rng, Solution{10, 10});
  CHECK(c.nfe == 3);
}

TEST_CASE("hill climbing terminates on a local optimum by exhaustive neighbour check") {
  const auto& spec = bench::find("three-hump-camel");
  RngStream rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    ObjectiveProbe probe = bench::make_probe(spec);
    const RunResult r = hill_climbing(probe, spec.domain, LocalSearchConfig{1000}, rng);
    for (std::size_t k = 0; k < spec.dims; ++k) {
      for (const int delta : {-1, 1}) {
        Solution n = r.best;
        n[k] += delta;
        if (!spec.domain.contains(n)) continue;
        REQUIRE(spec.formula(n) >= r.best_cost);
      }
    }
    for (std::size_t i = 1; i < r.history.size(); ++i) {
      REQUIRE(r.history[i].cost < r.history[i - 1].cost);
    }
  }
}

TEST_CASE("annealing schedule length") {
  const SaConfig cfg;
  // 50000 * 0.95^n <= 0.1  <=>  n >= ln(0.1/50000)/ln(0.95) = 255.8...
  const auto expected = static_cast<std::size_t>(std::ceil(std::log(0.1 / 50000.0) / std::log(0.95)));
  CHECK(expected == 256);
  CHECK(cfg.iterations() == 256);

  const auto& spec = bench::find("matyas");
  ObjectiveProbe probe = bench::make_probe(spec);
  RngStream rng(8);
  const RunResult r = simulated_annealing(probe, spec.domain, cfg, rng);
  CHECK(r.nfe == 512);
  CHECK(r.history.size() == 257);
  CHECK(spec.domain.contains(r.best));
  CHECK(r.best_cost == spec.formula(r.best));
  for (const auto& h : r.history) CHECK(h.cost >= r.best_cost);

  CHECK_THROWS_AS((SaConfig{1.0, 0.95, 2.0, 1}.validate()), ConfigError);
  CHECK_THROWS_AS((SaConfig{10.0, 1.0, 0.1, 1}.validate()), ConfigError);
}

TEST_CASE("annealing acceptance probability") {
  CHECK(sa_acceptance(10.0, 5.0, 1.0) == 1.0);
  CHECK(sa_acceptance(10.0, 10.0, 1.0) == 1.0);
  CHECK(sa_acceptance(10.0, 12.0, 2.0) == doctest::Approx(std::exp(-1.0)));
  // Hot limit accepts almost everything, cold limit almost nothing.
  CHECK(sa_acceptance(0.0, 1.0, 1e9) > 0.999);
  CHECK(sa_acceptance(0.0, 1.0, 1e-3) < 1e-300);
}

TEST_CASE("local search respects a reversed probe") {
  ObjectiveProbe probe(sphere2, 2);
  probe.set_sense(Sense::kMaximizeReversed);
  RngStream rng(0);
  const Domain d = Domain::uniform(2, -10, 10);
  const RunResult r = hill_climbing(probe, d, LocalSearchConfig{1000}, rng, Solution{1, 1});
  CHECK(r.best == Solution{10, 10});
  CHECK(r.best_cost == 200.0);
}
