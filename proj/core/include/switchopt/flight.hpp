#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "switchopt/types.hpp"

namespace switchopt::flight {

/// "H:MM" or "HH:MM" -> minutes since midnight. Throws ParseError.
int get_minutes(std::string_view clock);

struct Flight {
  std::string origin;
  std::string dest;
  int depart = 0;  ///< minutes since midnight
  int arrive = 0;
  int price = 0;   ///< dollars

  friend bool operator==(const Flight&, const Flight&) = default;
};

/// Parses "ORG,DST,H:MM,H:MM,PRICE". `line_no` is only used in error messages.
Flight parse_flight_line(std::string_view line, std::size_t line_no = 0);

struct Person {
  std::string name;
  std::string origin;
};

/// Who travels, where they meet, and how the cost is scored.
struct ProblemConfig {
  std::string destination;
  std::vector<Person> people;
  /// Charged once when the last arrival is after the first departure (extra car-rental day).
  double penalty = 50.0;
  /// Largest flight index a gene may take; every leg needs gene_hi + 1 flights.
  int gene_hi = 9;
};

/// JSON: {"destination": "LGA", "people": [["Seymour","BOS"], ...], "penalty": 50, "gene_hi": 9}.
/// "penalty" and "gene_hi" are optional. Throws ParseError / ValidationError.
ProblemConfig parse_problem_config(std::string_view json_text);

using Leg = std::pair<std::string, std::string>;

/// Parsed schedule bound to a problem config. Immutable once built.
class FlightTable {
 public:
  FlightTable(std::map<Leg, std::vector<Flight>> flights, ProblemConfig config);

  const ProblemConfig& config() const noexcept { return config_; }
  const std::map<Leg, std::vector<Flight>>& flights() const noexcept { return flights_; }
  const std::vector<Flight>& outbound(std::size_t person) const { return legs_[person].first; }
  const std::vector<Flight>& inbound(std::size_t person) const { return legs_[person].second; }
  std::size_t people() const noexcept { return config_.people.size(); }

  /// (0, gene_hi) for each of the 2 * people genes.
  Domain domain() const;

 private:
  std::map<Leg, std::vector<Flight>> flights_;
  ProblemConfig config_;
  // Per-person copies of the two legs, so scoring needs no map lookups.
  std::vector<std::pair<std::vector<Flight>, std::vector<Flight>>> legs_;
};

/// Parses schedule text (comment lines start with '#') and validates it against `config`.
/// Throws ParseError with the offending line number, or ValidationError.
FlightTable parse_schedule(std::string_view text, ProblemConfig config);

/// Reads both files. Throws IoError when a file cannot be read.
FlightTable load_flight_problem(const std::string& schedule_path, const std::string& config_path);

struct Trip {
  std::size_t outbound_index;
  std::size_t return_index;
  Flight outbound;
  Flight inbound;
};

/// One Trip per person, in config order.
using Itinerary = std::vector<Trip>;

/// Gene 2i selects person i's outbound flight, gene 2i+1 the return flight.
Itinerary decode(const FlightTable& table, const Solution& s);
Solution encode(const Itinerary& itinerary);

/// Total price plus total waiting time at the destination, plus the penalty
/// when the latest arrival comes after the earliest departure. One pass over people.
double schedule_cost(const FlightTable& table, const Solution& s);

}  // namespace switchopt::flight
