#pragma once

// Brute-force exact solver for desk-scale instances: exhaustive feasible
// path enumeration per request, then exact assignment search over path
// combinations with leg capacities and schedule activation costs. Ground
// truth for the reduction, pricing and column-generation modules.
//
// Single-threaded on purpose; refuses instances beyond its caps instead of
// degrading silently.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpossp/model.hpp"

namespace tpossp::oracle {

class OracleLimit : public std::runtime_error {
 public:
  explicit OracleLimit(const std::string& what) : std::runtime_error(what) {}
};

struct PathCatalog {
  RequestId request = 0;
  std::vector<Path> paths;  // sorted by (mile_cost, legs lexicographically)
};

namespace detail {

// Legs the request can ride at all: fits alone, not someone else's dummy,
// inside the time window, never into the origin or out of the destination.
inline bool leg_usable(const Instance& inst, const Request& r,
                       const ScheduleLeg& l) {
  if (l.capacity < r.volume) return false;
  if (l.depart < r.earliest || l.arrive > r.latest) return false;
  if (l.dest == r.origin || l.origin == r.dest) return false;
  const Schedule& s = inst.schedule(l.schedule);
  if (s.is_dummy && s.dummy_for && *s.dummy_for != r.id) return false;
  return true;
}

}  // namespace detail

// All feasible chains for the request, by depth-first search over
// time-chainable usable legs. Departure times increase strictly along a
// chain, so the search space is finite without any visited-set bookkeeping.
// Throws OracleLimit once more than `cap` paths are found.
inline std::vector<Path> enumerate_paths(const Instance& inst,
                                         RequestId request,
                                         std::size_t cap = 200'000) {
  const Request& r = inst.request(request);
  std::vector<Path> found;
  std::vector<LegId> chain;

  auto dfs = [&](auto&& self, HubId at, Minutes time) -> void {
    for (LegId lid : inst.legs_out(at)) {
      const ScheduleLeg& l = inst.leg(lid);
      if (l.depart < time) continue;
      if (!detail::leg_usable(inst, r, l)) continue;
      chain.push_back(lid);
      if (l.dest == r.dest) {
        if (found.size() >= cap)
          throw OracleLimit("instance too large for oracle: request " +
                            std::to_string(request) + " exceeds " +
                            std::to_string(cap) + " paths");
        found.push_back(make_path(inst, request, chain));
      } else {
        self(self, l.dest, l.arrive);
      }
      chain.pop_back();
    }
  };
  dfs(dfs, r.origin, r.earliest);

  std::sort(found.begin(), found.end(), [](const Path& a, const Path& b) {
    if (a.mile_cost != b.mile_cost) return a.mile_cost < b.mile_cost;
    return a.legs < b.legs;
  });
  return found;
}

inline std::vector<PathCatalog> build_catalogs(const Instance& inst,
                                               std::size_t cap_per_request =
                                                   200'000) {
  std::vector<PathCatalog> catalogs;
  for (const Request& r : inst.requests())
    catalogs.push_back({r.id, enumerate_paths(inst, r.id, cap_per_request)});
  return catalogs;
}

// Globally optimal solution by assignment search over the catalogs.
// Requests are assigned in decreasing-volume order; nodes are pruned with
// the running bound "committed cost + each remaining request's cheapest
// path". Ties keep the first (lexicographically smallest) assignment found.
// Throws OracleLimit when the combination count exceeds `comb_cap` and
// std::runtime_error when some request has no path at all.
inline Solution solve_exact(const Instance& inst,
                            std::uint64_t comb_cap = 1'000'000) {
  const auto catalogs = build_catalogs(inst);
  std::uint64_t combinations = 1;
  for (const PathCatalog& c : catalogs) {
    if (c.paths.empty())
      throw std::runtime_error("request " + std::to_string(c.request) +
                               " has no feasible path (add dummy schedules)");
    if (combinations > comb_cap / c.paths.size())
      throw OracleLimit("instance too large for oracle: more than " +
                        std::to_string(comb_cap) + " path combinations");
    combinations *= c.paths.size();
  }

  // assignment order: decreasing volume, ties by request id
  std::vector<RequestId> order;
  for (const Request& r : inst.requests()) order.push_back(r.id);
  std::sort(order.begin(), order.end(), [&](RequestId a, RequestId b) {
    const Volume va = inst.request(a).volume;
    const Volume vb = inst.request(b).volume;
    return va != vb ? va > vb : a < b;
  });

  std::vector<Cost> cheapest_tail(order.size() + 1, 0);
  for (std::size_t i = order.size(); i-- > 0;)
    cheapest_tail[i] = cheapest_tail[i + 1] +
                       catalogs[static_cast<std::size_t>(order[i])].paths.front().mile_cost;

  std::vector<std::int64_t> load(inst.num_legs(), 0);
  std::vector<std::int32_t> sched_use(inst.num_schedules(), 0);
  std::vector<const Path*> chosen(inst.num_requests(), nullptr);
  std::vector<const Path*> best(inst.num_requests(), nullptr);
  Cost best_cost = std::numeric_limits<Cost>::max();
  Cost committed = 0;  // schedule cost of activated schedules + mile cost so far

  auto dfs = [&](auto&& self, std::size_t depth) -> void {
    if (committed + cheapest_tail[depth] >= best_cost) return;
    if (depth == order.size()) {
      best_cost = committed;
      best = chosen;
      return;
    }
    const RequestId rid = order[depth];
    const Request& r = inst.request(rid);
    for (const Path& p : catalogs[static_cast<std::size_t>(rid)].paths) {
      bool fits = true;
      for (LegId l : p.legs)
        if (load[static_cast<std::size_t>(l)] + r.volume >
            inst.leg(l).capacity) {
          fits = false;
          break;
        }
      if (!fits) continue;
      Cost added = p.mile_cost;
      for (LegId l : p.legs) {
        const ScheduleId s = inst.leg(l).schedule;
        if (sched_use[static_cast<std::size_t>(s)] == 0)
          added += inst.schedule(s).fixed_cost;
        // count activation once even when the path uses several legs of s
        ++sched_use[static_cast<std::size_t>(s)];
        load[static_cast<std::size_t>(l)] += r.volume;
      }
      chosen[static_cast<std::size_t>(rid)] = &p;
      committed += added;
      self(self, depth + 1);
      committed -= added;
      for (LegId l : p.legs) {
        const ScheduleId s = inst.leg(l).schedule;
        --sched_use[static_cast<std::size_t>(s)];
        load[static_cast<std::size_t>(l)] -= r.volume;
      }
      chosen[static_cast<std::size_t>(rid)] = nullptr;
    }
  };
  dfs(dfs, 0);

  if (best_cost == std::numeric_limits<Cost>::max())
    throw std::runtime_error("no capacity-feasible assignment exists");

  Solution sol;
  sol.active.assign(inst.num_schedules(), false);
  for (const Request& r : inst.requests()) {
    const Path* p = best[static_cast<std::size_t>(r.id)];
    sol.paths.push_back(*p);
    for (LegId l : p->legs)
      sol.active[static_cast<std::size_t>(inst.leg(l).schedule)] = true;
  }
  sol.metrics = compute_metrics(inst, sol);
  return sol;
}

}  // namespace tpossp::oracle
