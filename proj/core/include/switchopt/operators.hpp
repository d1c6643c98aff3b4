#pragma once

#include <cstddef>

#include "switchopt/rng.hpp"
#include "switchopt/types.hpp"

namespace switchopt {

struct OperatorConfig {
  int mutation_step = 1;
  double down_probability = 0.5;

  /// Throws ConfigError unless mutation_step >= 1 and down_probability in [0, 1].
  void validate() const;
};

enum class Direction { kDown, kUp };

/// Moves gene `index` by `step` in `preferred` direction. If that leaves the
/// bounds the opposite direction is used; if both leave them the gene is kept.
Solution mutate_at(const Solution& s, const Domain& domain, std::size_t index,
                   Direction preferred, int step = 1);

/// One uniformly chosen gene perturbed by +/- cfg.mutation_step (see mutate_at).
Solution one_point_mutation(const Solution& s, const Domain& domain, RngStream& rng,
                            const OperatorConfig& cfg = {});

/// a[0..k) ++ b[k..L). Requires equal lengths and 1 <= k <= L-1.
Solution crossover_at(const Solution& a, const Solution& b, std::size_t k);

/// Single-point crossover with k uniform in [1, L-1]. Throws ConfigError when L < 2.
Solution single_point_crossover(const Solution& a, const Solution& b, RngStream& rng);

}  // namespace switchopt
