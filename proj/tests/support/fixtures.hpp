#pragma once

// Shared test fixtures: the micro3 worked example and a small deterministic
// random-instance factory, independent of the library's instance generator.

#include <cstdint>
#include <vector>

#include "tpossp/model.hpp"

namespace fixtures {

using namespace tpossp;

// micro3: hubs A=0, B=1, C=2; schedule S0 (100.000 units) with legs
// L0: A->B [10,100] 50mi and L1: B->C [120,200] 30mi; schedule S1
// (40.000 units) with leg L2: A->C [10,150] 90mi; request r0: A->C in
// [0,250], one short trailer. Two feasible paths: [L0,L1] at 80.000 and
// [L2] at 90.000; optimum activates S1 for a total of 130.000.
inline Instance micro3() {
  std::vector<Hub> hubs{{0, {}, {}}, {1, {}, {}}, {2, {}, {}}};
  std::vector<Schedule> schedules{{0, 100'000, false, {}, {}},
                                  {1, 40'000, false, {}, {}}};
  std::vector<ScheduleLeg> legs{
      {0, 0, 0, 1, 10, 100, 50, 30, 1000},
      {1, 0, 1, 2, 120, 200, 30, 30, 1000},
      {2, 1, 0, 2, 10, 150, 90, 30, 1000},
  };
  std::vector<Request> requests{{0, 0, 2, 0, 250, 10}};
  InstanceConfig config;
  config.dummy_base_cost = 500'000;
  return Instance(std::move(hubs), std::move(schedules), std::move(legs),
                  std::move(requests), config);
}

// micro3 with the request ending at B instead of C: makes [L0] a complete
// path while L1 stays active-but-empty under schedule S0.
inline Instance micro3_dest_b() {
  Instance m = micro3();
  std::vector<Request> requests{{0, 0, 1, 0, 250, 10}};
  return Instance(m.hubs(), m.schedules(), m.legs(), std::move(requests),
                  m.config());
}

// micro3 with the request's window tightened to [0,160]: L1 arrives too
// late, leaving only the direct leg L2 in the sub-network.
inline Instance micro3_tight() {
  Instance m = micro3();
  std::vector<Request> requests{{0, 0, 2, 0, 160, 10}};
  return Instance(m.hubs(), m.schedules(), m.legs(), std::move(requests),
                  m.config());
}

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed + 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [lo, hi]
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() %
               static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(double p) { return next() % 10'000 < p * 10'000; }
};

struct RandomSpec {
  int max_hubs = 8;
  int max_legs = 30;
  int max_requests = 3;
  bool coords = false;
  bool ample_capacity = false;  // force capacity 30 on every leg
};

// Deterministic valid instance: chainable schedule tours, requests split
// between "witness" windows (a feasible chain exists by construction) and
// random windows that may be infeasible.
inline Instance random_instance(std::uint64_t seed, RandomSpec spec = {}) {
  Rng rng(seed);
  const int n_hubs = static_cast<int>(rng.uniform(2, spec.max_hubs));
  std::vector<Hub> hubs;
  for (int h = 0; h < n_hubs; ++h) {
    Hub hub{static_cast<HubId>(h), {}, {}};
    if (spec.coords) {
      hub.x = rng.uniform(0, 1000);
      hub.y = rng.uniform(0, 1000);
    }
    hubs.push_back(hub);
  }

  std::vector<Schedule> schedules;
  std::vector<ScheduleLeg> legs;
  const int target_legs = static_cast<int>(rng.uniform(2, spec.max_legs));
  while (static_cast<int>(legs.size()) < target_legs) {
    const auto sid = static_cast<ScheduleId>(schedules.size());
    const int tour = static_cast<int>(
        rng.uniform(1, std::min<std::int64_t>(3, target_legs - static_cast<int>(legs.size()))));
    HubId at = static_cast<HubId>(rng.uniform(0, n_hubs - 1));
    Minutes t = rng.uniform(0, 400);
    Miles total_miles = 0;
    for (int k = 0; k < tour; ++k) {
      HubId to = at;
      while (to == at) to = static_cast<HubId>(rng.uniform(0, n_hubs - 1));
      const Minutes travel = rng.uniform(10, 120);
      const Miles miles = rng.uniform(1, 100);
      const Volume cap =
          spec.ample_capacity
              ? kTractorCapacity
              : static_cast<Volume>(std::array<Volume, 6>{10, 15, 19, 20, 25, 30}
                                        [rng.uniform(0, 5)]);
      legs.push_back({static_cast<LegId>(legs.size()), sid, at, to, t,
                      t + travel, miles, cap, 10 * rng.uniform(50, 150)});
      total_miles += miles;
      at = to;
      t += travel + rng.uniform(0, 60);
    }
    schedules.push_back(
        {sid, 1000 * rng.uniform(20, 200) + 100 * total_miles, false, {}, {}});
  }

  // temporary instance to query adjacency while sampling witness chains
  Instance graph(hubs, schedules, legs, {}, {});

  std::vector<Request> requests;
  const int n_requests = static_cast<int>(rng.uniform(1, spec.max_requests));
  for (int r = 0; r < n_requests; ++r) {
    Request req;
    req.id = static_cast<RequestId>(r);
    req.volume = kTrailerVolumes[rng.uniform(0, 3)];
    if (rng.chance(0.7) && !legs.empty()) {
      // witness chain: random walk over chainable legs
      const ScheduleLeg* cur =
          &legs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(legs.size()) - 1))];
      const ScheduleLeg* first = cur;
      const ScheduleLeg* last = cur;
      while (rng.chance(0.6)) {
        std::vector<const ScheduleLeg*> nexts;
        for (LegId l : graph.legs_out(last->dest)) {
          const ScheduleLeg& cand = graph.leg(l);
          if (cand.depart >= last->arrive) nexts.push_back(&cand);
        }
        if (nexts.empty()) break;
        last = nexts[static_cast<std::size_t>(
            rng.uniform(0, static_cast<std::int64_t>(nexts.size()) - 1))];
      }
      req.origin = first->origin;
      req.dest = last->dest;
      req.earliest = first->depart - rng.uniform(0, 60);
      req.latest = last->arrive + rng.uniform(0, 60);
      if (req.origin == req.dest) {
        req.dest = first->dest;  // single-leg fallback
        req.latest = first->arrive + rng.uniform(0, 60);
      }
    } else {
      req.origin = static_cast<HubId>(rng.uniform(0, n_hubs - 1));
      do {
        req.dest = static_cast<HubId>(rng.uniform(0, n_hubs - 1));
      } while (req.dest == req.origin);
      req.earliest = rng.uniform(0, 300);
      req.latest = req.earliest + rng.uniform(30, 500);
    }
    requests.push_back(req);
  }

  InstanceConfig config;
  config.dummy_base_cost = 2'000'000;  // dwarfs any scheduled path cost
  return Instance(std::move(hubs), std::move(schedules), std::move(legs),
                  std::move(requests), config);
}

}  // namespace fixtures
