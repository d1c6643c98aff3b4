#include "switchopt/flight.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include <json.hpp>

#include "switchopt/errors.hpp"
#include "switchopt/io.hpp"

namespace switchopt::flight {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

int to_int(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError("bad integer '" + std::string(s) + "'");
  return value;
}

bool is_airport_code(std::string_view s) {
  return s.size() == 3 &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return c >= 'A' && c <= 'Z'; });
}

}  // namespace

int get_minutes(std::string_view clock) {
  const auto colon = clock.find(':');
  if (colon == std::string_view::npos) throw ParseError("time '" + std::string(clock) + "' has no ':'");
  const auto hours = clock.substr(0, colon);
  const auto minutes = clock.substr(colon + 1);
  if (hours.empty() || hours.size() > 2 || !all_digits(hours) || minutes.size() != 2 ||
      !all_digits(minutes)) {
    throw ParseError("time '" + std::string(clock) + "' is not H:MM or HH:MM");
  }
  const int h = to_int(hours);
  const int m = to_int(minutes);
  if (h > 23 || m > 59) throw ParseError("time '" + std::string(clock) + "' out of range");
  return 60 * h + m;
}

Flight parse_flight_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fields.size() != 5) {
    throw ParseError("expected 5 comma-separated fields, got " + std::to_string(fields.size()), line_no);
  }
  try {
    Flight f;
    if (!is_airport_code(fields[0]) || !is_airport_code(fields[1])) {
      throw ParseError("airport codes must be 3 uppercase letters");
    }
    f.origin = std::string(fields[0]);
    f.dest = std::string(fields[1]);
    f.depart = get_minutes(fields[2]);
    f.arrive = get_minutes(fields[3]);
    if (!all_digits(fields[4])) throw ParseError("price must be a non-negative integer");
    f.price = to_int(fields[4]);
    return f;
  } catch (const ParseError& e) {
    if (e.line() != 0 || line_no == 0) throw;
    throw ParseError(e.what(), line_no);
  }
}

ProblemConfig parse_problem_config(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("problem config is not valid JSON: ") + e.what());
  }
  ProblemConfig cfg;
  try {
    cfg.destination = doc.at("destination").get<std::string>();
    for (const auto& entry : doc.at("people")) {
      if (!entry.is_array() || entry.size() != 2) {
        throw ParseError("each person must be a [name, origin] pair");
      }
      cfg.people.push_back({entry[0].get<std::string>(), entry[1].get<std::string>()});
    }
    if (doc.contains("penalty")) cfg.penalty = doc["penalty"].get<double>();
    if (doc.contains("gene_hi")) cfg.gene_hi = doc["gene_hi"].get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("problem config: ") + e.what());
  }
  if (!is_airport_code(cfg.destination)) throw ValidationError("destination must be a 3-letter code");
  for (const auto& p : cfg.people) {
    if (!is_airport_code(p.origin)) throw ValidationError("origin of " + p.name + " must be a 3-letter code");
  }
  if (cfg.penalty < 0) throw ValidationError("penalty must be non-negative");
  if (cfg.gene_hi < 0) throw ValidationError("gene_hi must be non-negative");
  return cfg;
}

FlightTable::FlightTable(std::map<Leg, std::vector<Flight>> flights, ProblemConfig config)
    : flights_(std::move(flights)), config_(std::move(config)) {
  if (config_.people.empty()) throw ValidationError("problem has no people");
  const auto needed = static_cast<std::size_t>(config_.gene_hi) + 1;
  auto leg = [&](const std::string& from, const std::string& to) -> const std::vector<Flight>& {
    const auto it = flights_.find({from, to});
    if (it == flights_.end()) throw ValidationError("schedule has no flights " + from + "->" + to);
    if (it->second.size() < needed) {
      throw ValidationError("leg " + from + "->" + to + " has " + std::to_string(it->second.size()) +
                            " flights, gene bound needs " + std::to_string(needed));
    }
    return it->second;
  };
  for (const auto& p : config_.people) {
    legs_.emplace_back(leg(p.origin, config_.destination), leg(config_.destination, p.origin));
  }
}

Domain FlightTable::domain() const { return Domain::uniform(2 * people(), 0, config_.gene_hi); }

FlightTable parse_schedule(std::string_view text, ProblemConfig config) {
  std::map<Leg, std::vector<Flight>> flights;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    Flight f = parse_flight_line(line, line_no);
    flights[{f.origin, f.dest}].push_back(std::move(f));
  }
  if (flights.empty()) throw ValidationError("schedule contains no flights");
  return FlightTable(std::move(flights), std::move(config));
}

FlightTable load_flight_problem(const std::string& schedule_path, const std::string& config_path) {
  ProblemConfig cfg = parse_problem_config(read_text_file(config_path));
  return parse_schedule(read_text_file(schedule_path), std::move(cfg));
}

namespace {

void check_genes(const FlightTable& table, const Solution& s) {
  if (s.size() != 2 * table.people()) {
    throw DimensionError("flight solution needs " + std::to_string(2 * table.people()) +
                         " genes, got " + std::to_string(s.size()));
  }
}

std::size_t flight_index(const std::vector<Flight>& leg, Gene g, std::size_t gene_pos) {
  if (g < 0 || static_cast<std::size_t>(g) >= leg.size()) {
    throw ValidationError("gene " + std::to_string(gene_pos) + " = " + std::to_string(g) +
                          " does not index a flight (leg has " + std::to_string(leg.size()) + ")");
  }
  return static_cast<std::size_t>(g);
}

}  // namespace

Itinerary decode(const FlightTable& table, const Solution& s) {
  check_genes(table, s);
  Itinerary trips;
  trips.reserve(table.people());
  for (std::size_t p = 0; p < table.people(); ++p) {
    const auto out = flight_index(table.outbound(p), s[2 * p], 2 * p);
    const auto ret = flight_index(table.inbound(p), s[2 * p + 1], 2 * p + 1);
    trips.push_back({out, ret, table.outbound(p)[out], table.inbound(p)[ret]});
  }
  return trips;
}

Solution encode(const Itinerary& itinerary) {
  std::vector<Gene> genes;
  genes.reserve(2 * itinerary.size());
  for (const auto& trip : itinerary) {
    genes.push_back(static_cast<Gene>(trip.outbound_index));
    genes.push_back(static_cast<Gene>(trip.return_index));
  }
  return Solution(std::move(genes));
}

double schedule_cost(const FlightTable& table, const Solution& s) {
  check_genes(table, s);
  const std::size_t n = table.people();
  long long total_price = 0;
  long long arrive_sum = 0;
  long long depart_sum = 0;
  int latest_arrival = 0;
  int earliest_departure = 24 * 60;
  for (std::size_t p = 0; p < n; ++p) {
    const Flight& out = table.outbound(p)[flight_index(table.outbound(p), s[2 * p], 2 * p)];
    const Flight& ret = table.inbound(p)[flight_index(table.inbound(p), s[2 * p + 1], 2 * p + 1)];
    total_price += out.price + ret.price;
    arrive_sum += out.arrive;
    depart_sum += ret.depart;
    latest_arrival = std::max(latest_arrival, out.arrive);
    earliest_departure = std::min(earliest_departure, ret.depart);
  }
  // sum(latest - arrive_i) + sum(depart_i - earliest), folded so one pass suffices.
  const auto people = static_cast<long long>(n);
  const long long total_wait =
      (people * latest_arrival - arrive_sum) + (depart_sum - people * earliest_departure);
  double cost = static_cast<double>(total_price + total_wait);
  if (latest_arrival > earliest_departure) cost += table.config().penalty;
  return cost;
}

}  // namespace switchopt::flight
