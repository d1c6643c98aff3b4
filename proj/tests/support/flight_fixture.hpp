#pragma once

// Small synthetic flight problems plus brute-force oracles, shared by the
// unit tests and the acceptance suite.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "switchopt/flight.hpp"
#include "switchopt/rng.hpp"

namespace switchopt::testing {

inline const char* const kOrigins[] = {"BOS", "DAL", "CAK", "MIA", "ORD", "OMA"};

/// `people` travellers to LGA, `per_leg` random flights on every leg, sorted by departure.
inline flight::FlightTable micro_table(std::uint64_t seed, std::size_t people, std::size_t per_leg) {
  RngStream rng(seed);
  flight::ProblemConfig cfg;
  cfg.destination = "LGA";
  cfg.gene_hi = static_cast<int>(per_leg) - 1;
  std::map<flight::Leg, std::vector<flight::Flight>> flights;
  auto make_leg = [&](const std::string& from, const std::string& to, int earliest, int latest) {
    auto& leg = flights[{from, to}];
    for (std::size_t k = 0; k < per_leg; ++k) {
      const int depart = static_cast<int>(rng.uniform_int(earliest, latest));
      const int arrive = depart + static_cast<int>(rng.uniform_int(60, 300));
      leg.push_back({from, to, depart, arrive, static_cast<int>(rng.uniform_int(50, 500))});
    }
    // Real schedules list each leg in departure order.
    std::stable_sort(leg.begin(), leg.end(),
                     [](const flight::Flight& a, const flight::Flight& b) { return a.depart < b.depart; });
  };
  for (std::size_t p = 0; p < people; ++p) {
    const std::string origin = kOrigins[p];
    cfg.people.push_back({"P" + std::to_string(p), origin});
    make_leg(origin, "LGA", 6 * 60, 14 * 60);
    make_leg("LGA", origin, 8 * 60, 18 * 60);
  }
  return flight::FlightTable(std::move(flights), std::move(cfg));
}

/// Straight transcription of the cost definition: two passes, no folding.
inline double reference_cost(const flight::FlightTable& table, const Solution& s) {
  const auto trips = flight::decode(table, s);
  double price = 0;
  int latest = 0;
  int earliest = 1440;
  for (const auto& t : trips) {
    price += t.outbound.price + t.inbound.price;
    latest = std::max(latest, t.outbound.arrive);
    earliest = std::min(earliest, t.inbound.depart);
  }
  double wait = 0;
  for (const auto& t : trips) wait += (latest - t.outbound.arrive) + (t.inbound.depart - earliest);
  return price + wait + (latest > earliest ? table.config().penalty : 0.0);
}

/// Minimum of reference_cost over the whole domain.
inline double brute_force_minimum(const flight::FlightTable& table) {
  const auto dims = 2 * table.people();
  const int hi = table.config().gene_hi;
  Solution s(std::vector<Gene>(dims, 0));
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    best = std::min(best, reference_cost(table, s));
    std::size_t i = 0;
    while (i < dims && s[i] == hi) s[i++] = 0;
    if (i == dims) break;
    ++s[i];
  }
  return best;
}

}  // namespace switchopt::testing
