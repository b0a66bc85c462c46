#pragma once

// Core domain model for the trailer-path-over-scheduled-services solver:
// hubs, schedules, schedule-legs, trailer requests, paths and solutions,
// plus validation and solution metrics.
//
// Unit conventions (fixed-point integers throughout, no floating point in
// any feasibility or cost comparison):
//   time      : integer minutes from horizon start
//   volume    : deci short-trailer equivalents (28' = 10, 45' = 15,
//               48' = 19, 53' = 25); tractor capacity <= 30
//   money     : integer milli cost-units
//   mile rate : milli cost-units per mile per short trailer

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tpossp {

using HubId = std::int32_t;
using LegId = std::int32_t;
using ScheduleId = std::int32_t;
using RequestId = std::int32_t;

using Minutes = std::int64_t;
using Miles = std::int64_t;
using Cost = std::int64_t;     // milli cost-units
using Volume = std::int32_t;   // deci short-trailer equivalents

inline constexpr Volume kTractorCapacity = 30;
inline constexpr std::array<Volume, 4> kTrailerVolumes{10, 15, 19, 25};

struct Hub {
  HubId id = 0;
  std::optional<std::int64_t> x;  // optional planar coordinates, used only
  std::optional<std::int64_t> y;  // to price dummy schedules by distance
  bool operator==(const Hub&) const = default;
};

struct ScheduleLeg {
  LegId id = 0;
  ScheduleId schedule = 0;
  HubId origin = 0;
  HubId dest = 0;
  Minutes depart = 0;
  Minutes arrive = 0;
  Miles miles = 0;
  Volume capacity = 0;
  Cost mile_rate = 0;  // milli per mile per short trailer
  bool operator==(const ScheduleLeg&) const = default;
};

struct Schedule {
  ScheduleId id = 0;
  Cost fixed_cost = 0;
  bool is_dummy = false;
  // set on dummy schedules: the single request the dummy was created for
  std::optional<RequestId> dummy_for;
  // legs of this schedule ordered by departure time; derived from the leg
  // table at instance construction
  std::vector<LegId> legs;
  bool operator==(const Schedule&) const = default;
};

struct Request {
  RequestId id = 0;
  HubId origin = 0;
  HubId dest = 0;
  Minutes earliest = 0;
  Minutes latest = 0;
  Volume volume = 10;
  bool operator==(const Request&) const = default;
};

struct InstanceConfig {
  Cost default_mile_rate = 1000;    // 1.000 cost-units per mile per short
  Cost dummy_base_cost = 1'000'000;
  Cost dummy_cost_per_mile = 2000;  // one-way; doubled for the return move
  bool operator==(const InstanceConfig&) const = default;
};

// Mile cost of moving volume v (deci short-trailers) over leg l. mile_rate is
// per whole short trailer, hence the /10. Rates that are multiples of 10 keep
// the division exact; the one shared definition keeps every module comparable
// in exact integers regardless.
inline Cost leg_mile_cost(const ScheduleLeg& l, Volume v) {
  return l.mile_rate * l.miles * static_cast<Cost>(v) / 10;
}

struct Path {
  RequestId request = 0;
  std::vector<LegId> legs;
  Cost mile_cost = 0;
  bool operator==(const Path&) const = default;
};

struct SolutionMetrics {
  Cost objective = 0;
  Cost schedule_cost = 0;
  Cost mile_cost = 0;
  Miles empty_miles = 0;
  std::int32_t dummy_count = 0;
  bool operator==(const SolutionMetrics&) const = default;
};

struct Solution {
  std::vector<Path> paths;   // one per request, in request-id order
  std::vector<bool> active;  // per schedule
  SolutionMetrics metrics;
  bool operator==(const Solution&) const = default;
};

// Immutable problem instance. Construction verifies that every cross
// reference resolves and that ids are dense (hubs[i].id == i, ...), throwing
// std::invalid_argument otherwise; semantic rules (time windows, volumes,
// chainability, ...) are reported by validate_instance instead.
//
// Safe to share across threads once constructed.
class Instance {
 public:
  Instance() = default;

  Instance(std::vector<Hub> hubs, std::vector<Schedule> schedules,
           std::vector<ScheduleLeg> legs, std::vector<Request> requests,
           InstanceConfig config = {}, std::vector<Path> base_paths = {})
      : hubs_(std::move(hubs)),
        schedules_(std::move(schedules)),
        legs_(std::move(legs)),
        requests_(std::move(requests)),
        config_(config),
        base_paths_(std::move(base_paths)) {
    check_ids();
    build_adjacency();
  }

  const std::vector<Hub>& hubs() const { return hubs_; }
  const std::vector<Schedule>& schedules() const { return schedules_; }
  const std::vector<ScheduleLeg>& legs() const { return legs_; }
  const std::vector<Request>& requests() const { return requests_; }
  const InstanceConfig& config() const { return config_; }
  const std::vector<Path>& base_paths() const { return base_paths_; }

  std::size_t num_hubs() const { return hubs_.size(); }
  std::size_t num_schedules() const { return schedules_.size(); }
  std::size_t num_legs() const { return legs_.size(); }
  std::size_t num_requests() const { return requests_.size(); }

  const Hub& hub(HubId h) const { return hubs_.at(static_cast<std::size_t>(h)); }
  const Schedule& schedule(ScheduleId s) const {
    return schedules_.at(static_cast<std::size_t>(s));
  }
  const ScheduleLeg& leg(LegId l) const {
    return legs_.at(static_cast<std::size_t>(l));
  }
  const Request& request(RequestId r) const {
    return requests_.at(static_cast<std::size_t>(r));
  }

  // Incoming legs of a hub, sorted by (arrive, id).
  std::span<const LegId> legs_in(HubId h) const {
    return in_.at(static_cast<std::size_t>(h));
  }
  // Outgoing legs of a hub, sorted by (depart, id).
  std::span<const LegId> legs_out(HubId h) const {
    return out_.at(static_cast<std::size_t>(h));
  }

  // Euclidean distance in miles when both hubs carry coordinates.
  std::optional<Miles> hub_distance_miles(HubId a, HubId b) const {
    const Hub& ha = hub(a);
    const Hub& hb = hub(b);
    if (!ha.x || !ha.y || !hb.x || !hb.y) return std::nullopt;
    const double dx = static_cast<double>(*ha.x - *hb.x);
    const double dy = static_cast<double>(*ha.y - *hb.y);
    return static_cast<Miles>(std::llround(std::sqrt(dx * dx + dy * dy)));
  }

  bool operator==(const Instance& other) const {
    return hubs_ == other.hubs_ && schedules_ == other.schedules_ &&
           legs_ == other.legs_ && requests_ == other.requests_ &&
           config_ == other.config_ && base_paths_ == other.base_paths_;
  }

 private:
  void check_ids() {
    for (std::size_t i = 0; i < hubs_.size(); ++i) {
      if (hubs_[i].id != static_cast<HubId>(i))
        throw std::invalid_argument("hubs[" + std::to_string(i) +
                                    "]: ids must be dense from 0");
    }
    for (std::size_t i = 0; i < schedules_.size(); ++i) {
      if (schedules_[i].id != static_cast<ScheduleId>(i))
        throw std::invalid_argument("schedules[" + std::to_string(i) +
                                    "]: ids must be dense from 0");
    }
    for (std::size_t i = 0; i < legs_.size(); ++i) {
      const ScheduleLeg& l = legs_[i];
      if (l.id != static_cast<LegId>(i))
        throw std::invalid_argument("legs[" + std::to_string(i) +
                                    "]: ids must be dense from 0");
      if (l.schedule < 0 || static_cast<std::size_t>(l.schedule) >= schedules_.size())
        throw std::invalid_argument("legs[" + std::to_string(i) +
                                    "].schedule: dangling schedule ref");
      if (!hub_ok(l.origin))
        throw std::invalid_argument("legs[" + std::to_string(i) +
                                    "].origin: dangling hub ref");
      if (!hub_ok(l.dest))
        throw std::invalid_argument("legs[" + std::to_string(i) +
                                    "].dest: dangling hub ref");
    }
    for (std::size_t i = 0; i < requests_.size(); ++i) {
      const Request& r = requests_[i];
      if (r.id != static_cast<RequestId>(i))
        throw std::invalid_argument("requests[" + std::to_string(i) +
                                    "]: ids must be dense from 0");
      if (!hub_ok(r.origin))
        throw std::invalid_argument("requests[" + std::to_string(i) +
                                    "].origin: dangling hub ref");
      if (!hub_ok(r.dest))
        throw std::invalid_argument("requests[" + std::to_string(i) +
                                    "].dest: dangling hub ref");
    }
    for (const Schedule& s : schedules_) {
      if (s.dummy_for &&
          (*s.dummy_for < 0 ||
           static_cast<std::size_t>(*s.dummy_for) >= requests_.size()))
        throw std::invalid_argument("schedules[" + std::to_string(s.id) +
                                    "].dummy_for: dangling request ref");
    }
    for (const Path& p : base_paths_) {
      if (p.request < 0 || static_cast<std::size_t>(p.request) >= requests_.size())
        throw std::invalid_argument("base_paths: dangling request ref");
      for (LegId l : p.legs)
        if (l < 0 || static_cast<std::size_t>(l) >= legs_.size())
          throw std::invalid_argument("base_paths: dangling leg ref");
    }
  }

  bool hub_ok(HubId h) const {
    return h >= 0 && static_cast<std::size_t>(h) < hubs_.size();
  }

  void build_adjacency() {
    in_.assign(hubs_.size(), {});
    out_.assign(hubs_.size(), {});
    for (Schedule& s : schedules_) s.legs.clear();
    for (const ScheduleLeg& l : legs_) {
      out_[static_cast<std::size_t>(l.origin)].push_back(l.id);
      in_[static_cast<std::size_t>(l.dest)].push_back(l.id);
      schedules_[static_cast<std::size_t>(l.schedule)].legs.push_back(l.id);
    }
    auto by_depart = [this](LegId a, LegId b) {
      const ScheduleLeg& la = legs_[static_cast<std::size_t>(a)];
      const ScheduleLeg& lb = legs_[static_cast<std::size_t>(b)];
      return la.depart != lb.depart ? la.depart < lb.depart : a < b;
    };
    auto by_arrive = [this](LegId a, LegId b) {
      const ScheduleLeg& la = legs_[static_cast<std::size_t>(a)];
      const ScheduleLeg& lb = legs_[static_cast<std::size_t>(b)];
      return la.arrive != lb.arrive ? la.arrive < lb.arrive : a < b;
    };
    for (auto& v : out_) std::sort(v.begin(), v.end(), by_depart);
    for (auto& v : in_) std::sort(v.begin(), v.end(), by_arrive);
    for (Schedule& s : schedules_)
      std::sort(s.legs.begin(), s.legs.end(), by_depart);
  }

  std::vector<Hub> hubs_;
  std::vector<Schedule> schedules_;
  std::vector<ScheduleLeg> legs_;
  std::vector<Request> requests_;
  InstanceConfig config_;
  std::vector<Path> base_paths_;
  std::vector<std::vector<LegId>> in_;
  std::vector<std::vector<LegId>> out_;
};

// Builds a Path for `request` over `legs`, computing its mile cost.
// Throws std::out_of_range on unknown ids.
inline Path make_path(const Instance& inst, RequestId request,
                      std::vector<LegId> legs) {
  const Request& r = inst.request(request);
  Cost cost = 0;
  for (LegId l : legs) cost += leg_mile_cost(inst.leg(l), r.volume);
  return Path{request, std::move(legs), cost};
}

// ---------------------------------------------------------------------------
// Validation. Violations are data, not failures: each string names the
// offending entity and the rule it breaks.
// ---------------------------------------------------------------------------

inline std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> out;
  for (const ScheduleLeg& l : inst.legs()) {
    const std::string who = "leg " + std::to_string(l.id);
    if (l.arrive <= l.depart)
      out.push_back(who + ": travel time must be strictly positive");
    if (l.origin == l.dest)
      out.push_back(who + ": origin and destination coincide");
    if (l.capacity <= 0 || l.capacity > kTractorCapacity)
      out.push_back(who + ": capacity " + std::to_string(l.capacity) +
                    " outside (0," + std::to_string(kTractorCapacity) + "]");
    if (l.miles < 0) out.push_back(who + ": negative miles");
    if (l.mile_rate < 0) out.push_back(who + ": negative mile rate");
  }
  for (const Request& r : inst.requests()) {
    const std::string who = "request " + std::to_string(r.id);
    if (r.earliest >= r.latest)
      out.push_back(who + ": earliest must precede latest");
    if (r.origin == r.dest)
      out.push_back(who + ": origin and destination coincide");
    if (std::find(kTrailerVolumes.begin(), kTrailerVolumes.end(), r.volume) ==
        kTrailerVolumes.end())
      out.push_back(who + ": volume not in {10,15,19,25}");
  }
  for (const Schedule& s : inst.schedules()) {
    const std::string who = "schedule " + std::to_string(s.id);
    if (s.fixed_cost < 0) out.push_back(who + ": negative fixed cost");
    for (std::size_t i = 1; i < s.legs.size(); ++i) {
      const ScheduleLeg& a = inst.leg(s.legs[i - 1]);
      const ScheduleLeg& b = inst.leg(s.legs[i]);
      if (b.origin != a.dest || b.depart < a.arrive)
        out.push_back(who + ": legs " + std::to_string(a.id) + " and " +
                      std::to_string(b.id) + " do not chain");
    }
    if (s.is_dummy) {
      if (s.legs.size() != 1) {
        out.push_back(who + ": dummy must have exactly one leg");
      } else if (!s.dummy_for) {
        out.push_back(who + ": dummy lacks an owning request");
      } else {
        const Request& r = inst.request(*s.dummy_for);
        const ScheduleLeg& l = inst.leg(s.legs[0]);
        if (l.origin != r.origin || l.dest != r.dest)
          out.push_back(who + ": dummy leg does not serve its request's od pair");
        if (l.capacity != r.volume)
          out.push_back(who + ": dummy leg capacity must equal request volume");
      }
    } else if (s.dummy_for) {
      out.push_back(who + ": non-dummy schedule carries dummy_for");
    }
  }
  return out;
}

// Path feasibility per the flow constraints: starts at the request origin no
// earlier than its release, ends at the destination no later than its
// deadline, consecutive legs chain on hubs and times, never re-enters the
// origin or leaves the destination, and never rides another request's dummy.
// Throws std::out_of_range on unknown leg or request ids.
inline std::vector<std::string> validate_path(const Instance& inst,
                                              const Path& path) {
  const Request& r = inst.request(path.request);
  std::vector<std::string> out;
  if (path.legs.empty()) {
    out.push_back("path has no legs");
    return out;
  }
  for (LegId l : path.legs) {
    if (l < 0 || static_cast<std::size_t>(l) >= inst.num_legs())
      throw std::out_of_range("unknown leg id " + std::to_string(l));
  }
  const ScheduleLeg& first = inst.leg(path.legs.front());
  const ScheduleLeg& last = inst.leg(path.legs.back());
  if (first.origin != r.origin)
    out.push_back("path does not start at p_r");
  if (last.dest != r.dest) out.push_back("path does not reach q_r");
  if (first.depart < r.earliest)
    out.push_back("first leg departs before t^est_r (g8)");
  if (last.arrive > r.latest)
    out.push_back("last leg arrives after t^lat_r (g9)");
  for (std::size_t i = 1; i < path.legs.size(); ++i) {
    const ScheduleLeg& a = inst.leg(path.legs[i - 1]);
    const ScheduleLeg& b = inst.leg(path.legs[i]);
    if (b.origin != a.dest)
      out.push_back("legs " + std::to_string(a.id) + " and " +
                    std::to_string(b.id) + " do not chain on hubs");
    else if (b.depart < a.arrive)
      out.push_back("leg order violates g7");
  }
  for (std::size_t i = 0; i < path.legs.size(); ++i) {
    const ScheduleLeg& l = inst.leg(path.legs[i]);
    if (l.dest == r.origin)
      out.push_back("path re-enters the origin (g1)");
    if (l.origin == r.dest)
      out.push_back("path leaves the destination (g2)");
    const Schedule& s = inst.schedule(l.schedule);
    if (s.is_dummy && s.dummy_for && *s.dummy_for != path.request)
      out.push_back("leg " + std::to_string(l.id) +
                    " is a dummy for another request");
  }
  return out;
}

namespace detail {
inline std::vector<std::int64_t> leg_loads(const Instance& inst,
                                           const Solution& sol) {
  std::vector<std::int64_t> load(inst.num_legs(), 0);
  for (const Path& p : sol.paths) {
    const Volume v = inst.request(p.request).volume;
    for (LegId l : p.legs) load[static_cast<std::size_t>(l)] += v;
  }
  return load;
}
}  // namespace detail

inline std::vector<std::string> validate_solution(const Instance& inst,
                                                  const Solution& sol) {
  std::vector<std::string> out;
  if (sol.paths.size() != inst.num_requests())
    out.push_back("solution must contain exactly one path per request");
  if (sol.active.size() != inst.num_schedules())
    out.push_back("active vector size does not match schedule count");
  std::vector<bool> seen(inst.num_requests(), false);
  for (const Path& p : sol.paths) {
    if (p.request < 0 ||
        static_cast<std::size_t>(p.request) >= inst.num_requests()) {
      out.push_back("path references unknown request");
      continue;
    }
    if (seen[static_cast<std::size_t>(p.request)])
      out.push_back("request " + std::to_string(p.request) +
                    " has more than one path");
    seen[static_cast<std::size_t>(p.request)] = true;
    for (const std::string& v : validate_path(inst, p))
      out.push_back("request " + std::to_string(p.request) + ": " + v);
  }
  if (!out.empty()) return out;  // structural problems mask the rest

  const auto load = detail::leg_loads(inst, sol);
  for (const ScheduleLeg& l : inst.legs()) {
    const auto li = static_cast<std::size_t>(l.id);
    if (load[li] > l.capacity)
      out.push_back("leg capacity exceeded: " + std::to_string(load[li]) +
                    " > " + std::to_string(l.capacity) + " on leg " +
                    std::to_string(l.id));
    if (load[li] > 0 && !sol.active[static_cast<std::size_t>(l.schedule)])
      out.push_back("schedule " + std::to_string(l.schedule) +
                    " inactive but leg " + std::to_string(l.id) + " used");
  }

  Cost schedule_cost = 0;
  for (const Schedule& s : inst.schedules())
    if (sol.active[static_cast<std::size_t>(s.id)]) schedule_cost += s.fixed_cost;
  Cost mile_cost = 0;
  for (const Path& p : sol.paths)
    mile_cost += make_path(inst, p.request, p.legs).mile_cost;
  if (sol.metrics.schedule_cost != schedule_cost)
    out.push_back("schedule_cost mismatch: stored " +
                  std::to_string(sol.metrics.schedule_cost) + ", computed " +
                  std::to_string(schedule_cost));
  if (sol.metrics.mile_cost != mile_cost)
    out.push_back("mile_cost mismatch: stored " +
                  std::to_string(sol.metrics.mile_cost) + ", computed " +
                  std::to_string(mile_cost));
  if (sol.metrics.objective != schedule_cost + mile_cost)
    out.push_back("objective mismatch: stored " +
                  std::to_string(sol.metrics.objective) + ", computed " +
                  std::to_string(schedule_cost + mile_cost));
  return out;
}

// Recomputes the reported metrics of a (valid) solution: objective split,
// empty miles (miles of active non-dummy legs carrying nothing) and the
// number of active dummy schedules. Throws std::invalid_argument when the
// solution is structurally invalid.
inline SolutionMetrics compute_metrics(const Instance& inst,
                                       const Solution& sol) {
  Solution probe = sol;
  probe.metrics = {};  // metrics are outputs here, not inputs
  {
    // reuse the structural checks; arithmetic checks are vacuous on zeros
    Solution check = sol;
    check.metrics.schedule_cost = 0;
    check.metrics.mile_cost = 0;
    check.metrics.objective = 0;
    auto v = validate_solution(inst, check);
    std::erase_if(v, [](const std::string& s) {
      return s.find("mismatch") != std::string::npos;
    });
    if (!v.empty()) throw std::invalid_argument("invalid solution: " + v.front());
  }
  SolutionMetrics m;
  const auto load = detail::leg_loads(inst, sol);
  for (const Schedule& s : inst.schedules()) {
    if (!sol.active[static_cast<std::size_t>(s.id)]) continue;
    m.schedule_cost += s.fixed_cost;
    if (s.is_dummy) {
      ++m.dummy_count;
      continue;
    }
    for (LegId l : s.legs)
      if (load[static_cast<std::size_t>(l)] == 0)
        m.empty_miles += inst.leg(l).miles;
  }
  for (const Path& p : sol.paths)
    m.mile_cost += make_path(inst, p.request, p.legs).mile_cost;
  m.objective = m.schedule_cost + m.mile_cost;
  return m;
}

// Fixed cost of the direct fallback schedule for a request: a new schedule
// from the origin to the destination and back, priced by distance when hub
// coordinates exist, else the configured constant.
inline Cost dummy_fixed_cost(const Instance& inst, const Request& r) {
  const auto d = inst.hub_distance_miles(r.origin, r.dest);
  if (!d) return inst.config().dummy_base_cost;
  return inst.config().dummy_base_cost +
         2 * inst.config().dummy_cost_per_mile * *d;
}

// Appends one direct origin->destination dummy schedule per request that
// does not already own one, so that every request has a feasible path. The
// dummy leg spans the request's whole time window, has capacity exactly the
// request volume, and uses the instance's default mile rate.
inline Instance add_dummy_schedules(const Instance& inst) {
  std::vector<bool> has_dummy(inst.num_requests(), false);
  for (const Schedule& s : inst.schedules())
    if (s.is_dummy && s.dummy_for) has_dummy[static_cast<std::size_t>(*s.dummy_for)] = true;

  std::vector<Hub> hubs = inst.hubs();
  std::vector<Schedule> schedules = inst.schedules();
  std::vector<ScheduleLeg> legs = inst.legs();
  for (const Request& r : inst.requests()) {
    if (has_dummy[static_cast<std::size_t>(r.id)]) continue;
    const auto sid = static_cast<ScheduleId>(schedules.size());
    const auto lid = static_cast<LegId>(legs.size());
    Schedule s;
    s.id = sid;
    s.fixed_cost = dummy_fixed_cost(inst, r);
    s.is_dummy = true;
    s.dummy_for = r.id;
    schedules.push_back(std::move(s));
    ScheduleLeg l;
    l.id = lid;
    l.schedule = sid;
    l.origin = r.origin;
    l.dest = r.dest;
    l.depart = r.earliest;
    l.arrive = r.latest;
    l.miles = inst.hub_distance_miles(r.origin, r.dest).value_or(0);
    l.capacity = r.volume;
    l.mile_rate = inst.config().default_mile_rate;
    legs.push_back(std::move(l));
  }
  return Instance(std::move(hubs), std::move(schedules), std::move(legs),
                  inst.requests(), inst.config(), inst.base_paths());
}

// Returns the dummy leg of a request on a dummied instance, if present.
inline std::optional<LegId> dummy_leg_of(const Instance& inst, RequestId r) {
  for (const Schedule& s : inst.schedules())
    if (s.is_dummy && s.dummy_for && *s.dummy_for == r && s.legs.size() == 1)
      return s.legs[0];
  return std::nullopt;
}

// Every request on its own dummy: the always-feasible fallback solution.
// Requires add_dummy_schedules to have run.
inline Solution all_dummy_solution(const Instance& inst) {
  Solution sol;
  sol.active.assign(inst.num_schedules(), false);
  for (const Request& r : inst.requests()) {
    const auto l = dummy_leg_of(inst, r.id);
    if (!l) throw std::logic_error("all_dummy_solution: request " +
                                   std::to_string(r.id) + " has no dummy");
    sol.paths.push_back(make_path(inst, r.id, {*l}));
    sol.active[static_cast<std::size_t>(inst.leg(*l).schedule)] = true;
  }
  sol.metrics = compute_metrics(inst, sol);
  return sol;
}

}  // namespace tpossp
