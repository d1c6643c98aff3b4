#include <doctest.h>

#include <array>

#include "switchopt/errors.hpp"
#include "switchopt/operators.hpp"

using namespace switchopt;

TEST_CASE("mutate_at examples") {
  const Domain d = Domain::uniform(2, 0, 9);
  CHECK(mutate_at(Solution{3, 5}, d, 0, Direction::kDown) == Solution{2, 5});
  CHECK(mutate_at(Solution{0, 5}, d, 0, Direction::kDown) == Solution{1, 5});
  CHECK(mutate_at(Solution{3, 9}, d, 1, Direction::kUp) == Solution{3, 8});
  CHECK(mutate_at(Solution{7}, Domain({{7, 7}}), 0, Direction::kUp) == Solution{7});
  CHECK(mutate_at(Solution{3, 5}, d, 1, Direction::kUp, 3) == Solution{3, 8});
  CHECK(mutate_at(Solution{3, 8}, d, 1, Direction::kUp, 3) == Solution{3, 5});
  CHECK_THROWS_AS(mutate_at(Solution{3, 10}, d, 0, Direction::kUp), ValidationError);
}

TEST_CASE("one_point_mutation leaves the input untouched") {
  const Domain d = Domain::uniform(4, -3, 3);
  const Solution s{0, 1, 2, 3};
  RngStream rng(5);
  const Solution m = one_point_mutation(s, d, rng);
  CHECK(s == Solution{0, 1, 2, 3});
  CHECK(m != s);
}

TEST_CASE("crossover_at examples") {
  CHECK(crossover_at(Solution{1, 2, 3, 4}, Solution{5, 6, 7, 8}, 2) == Solution{1, 2, 7, 8});
  for (std::size_t k = 1; k < 3; ++k) {
    CHECK(crossover_at(Solution{9, 9, 9}, Solution{9, 9, 9}, k) == Solution{9, 9, 9});
  }
  CHECK_THROWS_AS(crossover_at(Solution{1, 2}, Solution{3, 4}, 0), ConfigError);
  CHECK_THROWS_AS(crossover_at(Solution{1, 2}, Solution{3, 4}, 2), ConfigError);
  CHECK_THROWS_AS(crossover_at(Solution{1, 2}, Solution{3, 4, 5}, 1), DimensionError);
}

TEST_CASE("single_point_crossover needs two genes") {
  RngStream rng(1);
  CHECK_THROWS_AS(single_point_crossover(Solution{1}, Solution{2}, rng), ConfigError);
}

TEST_CASE("single_point_crossover split is uniform over 1..L-1") {
  RngStream rng(11);
  const Solution a{0, 0, 0, 0, 0};
  const Solution b{1, 1, 1, 1, 1};
  std::array<int, 5> splits{};
  for (int i = 0; i < 4000; ++i) {
    const Solution c = single_point_crossover(a, b, rng);
    std::size_t k = 0;
    while (k < c.size() && c[k] == 0) ++k;
    ++splits[k];
  }
  CHECK(splits[0] == 0);
  for (std::size_t k = 1; k < 5; ++k) CHECK(splits[k] > 850);
}

TEST_CASE("operator config validation") {
  CHECK_THROWS_AS((OperatorConfig{0, 0.5}.validate()), ConfigError);
  CHECK_THROWS_AS((OperatorConfig{1, 1.5}.validate()), ConfigError);
  CHECK_NOTHROW((OperatorConfig{2, 0.0}.validate()));
}

TEST_CASE("property: operators preserve bounds over 1e5 random applications") {
  RngStream rng(2023);
  std::size_t violations = 0;
  for (int trial = 0; trial < 100000; ++trial) {
    const auto dims = static_cast<std::size_t>(rng.uniform_int(2, 6));
    std::vector<Bound> bounds;
    for (std::size_t i = 0; i < dims; ++i) {
      const auto lo = static_cast<Gene>(rng.uniform_int(-5, 5));
      bounds.push_back({lo, static_cast<Gene>(lo + rng.uniform_int(0, 4))});
    }
    const Domain d(bounds);
    const Solution a = random_solution(d, rng);
    const Solution b = random_solution(d, rng);
    const OperatorConfig cfg{static_cast<int>(rng.uniform_int(1, 3)), rng.uniform01()};

    const Solution m = one_point_mutation(a, d, rng, cfg);
    std::size_t hamming = 0;
    for (std::size_t i = 0; i < dims; ++i) hamming += m[i] != a[i];
    if (!d.contains(m) || hamming > 1) ++violations;

    const Solution c = single_point_crossover(a, b, rng);
    bool positionwise = true;
    for (std::size_t i = 0; i < dims; ++i) positionwise &= c[i] == a[i] || c[i] == b[i];
    if (!d.contains(c) || !positionwise || c[0] != a[0] || c[dims - 1] != b[dims - 1]) ++violations;
  }
  CHECK(violations == 0);
}
