#pragma once

// JSON (de)serialization for instances and solutions.
//
// Instance schema: top-level keys `hubs` [{id, x?, y?}], `schedules`
// [{id, fixed_cost, is_dummy, dummy_for?}], `legs` [{id, schedule, origin,
// dest, depart, arrive, miles, capacity, mile_rate}], `requests`
// [{id, origin, dest, earliest, latest, volume}], plus optional `config`
// {default_mile_rate, dummy_base_cost, dummy_cost_per_mile} and optional
// `base_paths` [{request, legs}]. All numbers are integers.
//
// Solution schema: `paths` [{request, legs}], `active` [schedule ids],
// `metrics` {objective, schedule_cost, mile_cost, empty_miles, dummy_count}.
//
// Writers emit a canonical form (fixed key order, 2-space indent, sorted by
// id, trailing newline) so that equal values serialize to equal bytes.

#include <string>
#include <vector>

#include "json.hpp"
#include "tpossp/model.hpp"

namespace tpossp {

using Json = nlohmann::ordered_json;

// Parse failure with the JSON path of the offending element.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::string message)
      : std::runtime_error(std::move(message)) {}
};

namespace io_detail {

inline const Json& field(const Json& j, const char* key,
                         const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing field: " + std::string(key) +
                                      (path.empty() ? "" : " at " + path));
  return *it;
}

inline std::int64_t int_field(const Json& j, const char* key,
                              const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_number_integer())
    throw ParseError(path + "." + key + ": expected integer");
  return v.get<std::int64_t>();
}

inline const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key, "");
  if (!v.is_array()) throw ParseError(std::string(key) + ": expected array");
  return v;
}

}  // namespace io_detail

inline Json instance_to_json(const Instance& inst) {
  Json j;
  j["hubs"] = Json::array();
  for (const Hub& h : inst.hubs()) {
    Json e;
    e["id"] = h.id;
    if (h.x) e["x"] = *h.x;
    if (h.y) e["y"] = *h.y;
    j["hubs"].push_back(std::move(e));
  }
  j["schedules"] = Json::array();
  for (const Schedule& s : inst.schedules()) {
    Json e;
    e["id"] = s.id;
    e["fixed_cost"] = s.fixed_cost;
    e["is_dummy"] = s.is_dummy;
    if (s.dummy_for) e["dummy_for"] = *s.dummy_for;
    j["schedules"].push_back(std::move(e));
  }
  j["legs"] = Json::array();
  for (const ScheduleLeg& l : inst.legs()) {
    Json e;
    e["id"] = l.id;
    e["schedule"] = l.schedule;
    e["origin"] = l.origin;
    e["dest"] = l.dest;
    e["depart"] = l.depart;
    e["arrive"] = l.arrive;
    e["miles"] = l.miles;
    e["capacity"] = l.capacity;
    e["mile_rate"] = l.mile_rate;
    j["legs"].push_back(std::move(e));
  }
  j["requests"] = Json::array();
  for (const Request& r : inst.requests()) {
    Json e;
    e["id"] = r.id;
    e["origin"] = r.origin;
    e["dest"] = r.dest;
    e["earliest"] = r.earliest;
    e["latest"] = r.latest;
    e["volume"] = r.volume;
    j["requests"].push_back(std::move(e));
  }
  j["config"] = {{"default_mile_rate", inst.config().default_mile_rate},
                 {"dummy_base_cost", inst.config().dummy_base_cost},
                 {"dummy_cost_per_mile", inst.config().dummy_cost_per_mile}};
  if (!inst.base_paths().empty()) {
    j["base_paths"] = Json::array();
    for (const Path& p : inst.base_paths())
      j["base_paths"].push_back({{"request", p.request}, {"legs", p.legs}});
  }
  return j;
}

inline std::string write_instance(const Instance& inst) {
  return instance_to_json(inst).dump(2) + "\n";
}

inline Instance instance_from_json(const Json& j) {
  using io_detail::array_field;
  using io_detail::int_field;
  if (!j.is_object()) throw ParseError("instance: expected object");

  std::vector<Hub> hubs;
  std::size_t i = 0;
  for (const Json& e : array_field(j, "hubs")) {
    const std::string path = "hubs[" + std::to_string(i++) + "]";
    Hub h;
    h.id = static_cast<HubId>(int_field(e, "id", path));
    if (e.contains("x")) h.x = e.at("x").get<std::int64_t>();
    if (e.contains("y")) h.y = e.at("y").get<std::int64_t>();
    hubs.push_back(h);
  }

  std::vector<Schedule> schedules;
  i = 0;
  for (const Json& e : array_field(j, "schedules")) {
    const std::string path = "schedules[" + std::to_string(i++) + "]";
    Schedule s;
    s.id = static_cast<ScheduleId>(int_field(e, "id", path));
    s.fixed_cost = int_field(e, "fixed_cost", path);
    s.is_dummy = e.contains("is_dummy") && e.at("is_dummy").get<bool>();
    if (e.contains("dummy_for"))
      s.dummy_for = static_cast<RequestId>(e.at("dummy_for").get<std::int64_t>());
    schedules.push_back(std::move(s));
  }

  std::vector<ScheduleLeg> legs;
  i = 0;
  for (const Json& e : array_field(j, "legs")) {
    const std::string path = "legs[" + std::to_string(i++) + "]";
    ScheduleLeg l;
    l.id = static_cast<LegId>(int_field(e, "id", path));
    l.schedule = static_cast<ScheduleId>(int_field(e, "schedule", path));
    l.origin = static_cast<HubId>(int_field(e, "origin", path));
    l.dest = static_cast<HubId>(int_field(e, "dest", path));
    l.depart = int_field(e, "depart", path);
    l.arrive = int_field(e, "arrive", path);
    l.miles = int_field(e, "miles", path);
    l.capacity = static_cast<Volume>(int_field(e, "capacity", path));
    l.mile_rate = int_field(e, "mile_rate", path);
    if (l.schedule < 0 || static_cast<std::size_t>(l.schedule) >= schedules.size())
      throw ParseError(path + ".schedule: dangling schedule ref");
    legs.push_back(l);
  }

  std::vector<Request> requests;
  i = 0;
  for (const Json& e : array_field(j, "requests")) {
    const std::string path = "requests[" + std::to_string(i++) + "]";
    Request r;
    r.id = static_cast<RequestId>(int_field(e, "id", path));
    r.origin = static_cast<HubId>(int_field(e, "origin", path));
    r.dest = static_cast<HubId>(int_field(e, "dest", path));
    r.earliest = int_field(e, "earliest", path);
    r.latest = int_field(e, "latest", path);
    r.volume = static_cast<Volume>(int_field(e, "volume", path));
    requests.push_back(r);
  }

  InstanceConfig config;
  if (j.contains("config")) {
    const Json& c = j.at("config");
    if (c.contains("default_mile_rate"))
      config.default_mile_rate = c.at("default_mile_rate").get<Cost>();
    if (c.contains("dummy_base_cost"))
      config.dummy_base_cost = c.at("dummy_base_cost").get<Cost>();
    if (c.contains("dummy_cost_per_mile"))
      config.dummy_cost_per_mile = c.at("dummy_cost_per_mile").get<Cost>();
  }

  std::vector<Path> base_paths;
  if (j.contains("base_paths")) {
    for (const Json& e : j.at("base_paths")) {
      Path p;
      p.request = static_cast<RequestId>(int_field(e, "request", "base_paths"));
      for (const Json& l : io_detail::field(e, "legs", "base_paths"))
        p.legs.push_back(static_cast<LegId>(l.get<std::int64_t>()));
      base_paths.push_back(std::move(p));
    }
  }

  try {
    Instance inst(std::move(hubs), std::move(schedules), std::move(legs),
                  std::move(requests), config, std::move(base_paths));
    // recompute base path costs now that the instance exists
    if (!inst.base_paths().empty()) {
      std::vector<Path> fixed;
      for (const Path& p : inst.base_paths())
        fixed.push_back(make_path(inst, p.request, p.legs));
      return Instance(inst.hubs(), inst.schedules(), inst.legs(),
                      inst.requests(), inst.config(), std::move(fixed));
    }
    return inst;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

inline Instance read_instance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(j);
}

inline Json solution_to_json(const Solution& sol) {
  Json j;
  j["paths"] = Json::array();
  for (const Path& p : sol.paths)
    j["paths"].push_back({{"request", p.request}, {"legs", p.legs}});
  j["active"] = Json::array();
  for (std::size_t s = 0; s < sol.active.size(); ++s)
    if (sol.active[s]) j["active"].push_back(s);
  j["metrics"] = {{"objective", sol.metrics.objective},
                  {"schedule_cost", sol.metrics.schedule_cost},
                  {"mile_cost", sol.metrics.mile_cost},
                  {"empty_miles", sol.metrics.empty_miles},
                  {"dummy_count", sol.metrics.dummy_count}};
  return j;
}

inline std::string write_solution(const Solution& sol) {
  return solution_to_json(sol).dump(2) + "\n";
}

inline Solution solution_from_json(const Json& j, const Instance& inst) {
  using io_detail::array_field;
  using io_detail::int_field;
  Solution sol;
  std::size_t i = 0;
  for (const Json& e : array_field(j, "paths")) {
    const std::string path = "paths[" + std::to_string(i++) + "]";
    Path p;
    p.request = static_cast<RequestId>(int_field(e, "request", path));
    if (p.request < 0 || static_cast<std::size_t>(p.request) >= inst.num_requests())
      throw ParseError(path + ".request: dangling request ref");
    for (const Json& l : io_detail::field(e, "legs", path)) {
      const auto id = static_cast<LegId>(l.get<std::int64_t>());
      if (id < 0 || static_cast<std::size_t>(id) >= inst.num_legs())
        throw ParseError(path + ".legs: dangling leg ref");
      p.legs.push_back(id);
    }
    sol.paths.push_back(make_path(inst, p.request, std::move(p.legs)));
  }
  sol.active.assign(inst.num_schedules(), false);
  for (const Json& s : array_field(j, "active")) {
    const auto id = static_cast<std::size_t>(s.get<std::int64_t>());
    if (id >= inst.num_schedules()) throw ParseError("active: dangling schedule ref");
    sol.active[id] = true;
  }
  const Json& m = io_detail::field(j, "metrics", "");
  sol.metrics.objective = int_field(m, "objective", "metrics");
  sol.metrics.schedule_cost = int_field(m, "schedule_cost", "metrics");
  sol.metrics.mile_cost = int_field(m, "mile_cost", "metrics");
  sol.metrics.empty_miles = int_field(m, "empty_miles", "metrics");
  sol.metrics.dummy_count =
      static_cast<std::int32_t>(int_field(m, "dummy_count", "metrics"));
  return sol;
}

inline Solution read_solution(const std::string& text, const Instance& inst) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return solution_from_json(j, inst);
}

}  // namespace tpossp
