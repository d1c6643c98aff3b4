#include "switchopt/operators.hpp"

#include <string>

#include "switchopt/errors.hpp"

namespace switchopt {

void OperatorConfig::validate() const {
  if (mutation_step < 1) throw ConfigError("mutation_step must be >= 1");
  if (!(down_probability >= 0.0 && down_probability <= 1.0)) {
    throw ConfigError("down_probability must lie in [0, 1]");
  }
}

Solution mutate_at(const Solution& s, const Domain& domain, std::size_t index,
                   Direction preferred, int step) {
  domain.check(s);
  if (index >= s.size()) throw DimensionError("mutation index out of range");
  Solution out = s;
  const auto [lo, hi] = domain[index];
  const long long down = static_cast<long long>(s[index]) - step;
  const long long up = static_cast<long long>(s[index]) + step;
  const bool down_ok = down >= lo;
  const bool up_ok = up <= hi;
  if (preferred == Direction::kDown) {
    if (down_ok) out[index] = static_cast<Gene>(down);
    else if (up_ok) out[index] = static_cast<Gene>(up);
  } else {
    if (up_ok) out[index] = static_cast<Gene>(up);
    else if (down_ok) out[index] = static_cast<Gene>(down);
  }
  return out;
}

Solution one_point_mutation(const Solution& s, const Domain& domain, RngStream& rng,
                            const OperatorConfig& cfg) {
  const std::size_t index = rng.index(s.size());
  const Direction dir = rng.bernoulli(cfg.down_probability) ? Direction::kDown : Direction::kUp;
  return mutate_at(s, domain, index, dir, cfg.mutation_step);
}

Solution crossover_at(const Solution& a, const Solution& b, std::size_t k) {
  if (a.size() != b.size()) throw DimensionError("crossover parents differ in length");
  if (a.size() < 2) throw ConfigError("crossover needs solutions of length >= 2");
  if (k < 1 || k >= a.size()) {
    throw ConfigError("crossover split " + std::to_string(k) + " outside [1, " +
                      std::to_string(a.size() - 1) + "]");
  }
  Solution child = a;
  for (std::size_t i = k; i < a.size(); ++i) child[i] = b[i];
  return child;
}

Solution single_point_crossover(const Solution& a, const Solution& b, RngStream& rng) {
  if (a.size() < 2) throw ConfigError("crossover needs solutions of length >= 2");
  const auto k = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(a.size()) - 1));
  return crossover_at(a, b, k);
}

}  // namespace switchopt
