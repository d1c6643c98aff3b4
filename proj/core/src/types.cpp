#include "switchopt/types.hpp"

#include <limits>
#include <sstream>

#include "switchopt/errors.hpp"

namespace switchopt {

std::string to_string(const Solution& s) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << s[i];
  }
  out << ']';
  return out.str();
}

Domain::Domain(std::vector<Bound> bounds) : bounds_(std::move(bounds)) {
  if (bounds_.empty()) throw ConfigError("domain must have at least one dimension");
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    if (bounds_[i].lo > bounds_[i].hi) {
      throw ConfigError("domain bound " + std::to_string(i) + " has lo > hi");
    }
  }
}

Domain Domain::uniform(std::size_t dims, Gene lo, Gene hi) {
  return Domain(std::vector<Bound>(dims, Bound{lo, hi}));
}

bool Domain::contains(const Solution& s) const noexcept {
  if (s.size() != bounds_.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < bounds_[i].lo || s[i] > bounds_[i].hi) return false;
  }
  return true;
}

void Domain::check(const Solution& s) const {
  if (s.size() != bounds_.size()) {
    throw DimensionError("solution has " + std::to_string(s.size()) + " genes, domain has " +
                         std::to_string(bounds_.size()));
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < bounds_[i].lo || s[i] > bounds_[i].hi) {
      throw ValidationError("gene " + std::to_string(i) + " = " + std::to_string(s[i]) +
                            " outside [" + std::to_string(bounds_[i].lo) + ", " +
                            std::to_string(bounds_[i].hi) + "]");
    }
  }
}

std::size_t Domain::cardinality() const noexcept {
  constexpr auto cap = std::numeric_limits<std::size_t>::max();
  std::size_t total = 1;
  for (const auto& b : bounds_) {
    const auto width = static_cast<std::size_t>(static_cast<long long>(b.hi) - b.lo + 1);
    if (total > cap / width) return cap;
    total *= width;
  }
  return total;
}

Solution random_solution(const Domain& domain, RngStream& rng) {
  std::vector<Gene> genes(domain.size());
  for (std::size_t i = 0; i < genes.size(); ++i) {
    genes[i] = static_cast<Gene>(rng.uniform_int(domain[i].lo, domain[i].hi));
  }
  return Solution(std::move(genes));
}

}  // namespace switchopt
