#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "switchopt/rng.hpp"

namespace switchopt {

using Gene = int;

/// Integer genome. Bounds are owned by the Domain that governs it.
struct Solution {
  std::vector<Gene> genes;

  Solution() = default;
  explicit Solution(std::vector<Gene> g) : genes(std::move(g)) {}
  Solution(std::initializer_list<Gene> g) : genes(g) {}

  std::size_t size() const noexcept { return genes.size(); }
  Gene operator[](std::size_t i) const { return genes[i]; }
  Gene& operator[](std::size_t i) { return genes[i]; }

  friend bool operator==(const Solution&, const Solution&) = default;
};

std::string to_string(const Solution& s);

/// Inclusive lower/upper bound of one gene.
struct Bound {
  Gene lo;
  Gene hi;

  friend bool operator==(const Bound&, const Bound&) = default;
};

/// Box of inclusive integer bounds, one per position.
class Domain {
 public:
  /// Throws ConfigError when empty or when any lo > hi.
  explicit Domain(std::vector<Bound> bounds);

  /// `dims` copies of [lo, hi].
  static Domain uniform(std::size_t dims, Gene lo, Gene hi);

  std::size_t size() const noexcept { return bounds_.size(); }
  const Bound& operator[](std::size_t i) const { return bounds_[i]; }
  const std::vector<Bound>& bounds() const noexcept { return bounds_; }

  bool contains(const Solution& s) const noexcept;

  /// Throws DimensionError on length mismatch, ValidationError on an out-of-bounds gene.
  void check(const Solution& s) const;

  /// Number of lattice points, saturating at SIZE_MAX.
  std::size_t cardinality() const noexcept;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  std::vector<Bound> bounds_;
};

/// Each gene drawn uniformly and independently from its bounds.
Solution random_solution(const Domain& domain, RngStream& rng);

struct HistoryPoint {
  std::size_t iteration;
  double cost;

  friend bool operator==(const HistoryPoint&, const HistoryPoint&) = default;
};

/// Outcome of one seeded run of any algorithm.
///
/// `best` minimizes the probe the algorithm was given; `best_cost` and the
/// history are always expressed in true (unsigned) objective units.
struct RunResult {
  Solution best;
  double best_cost = 0.0;
  std::vector<HistoryPoint> history;
  std::size_t nfe = 0;
  double wall_ms = 0.0;
};

}  // namespace switchopt
