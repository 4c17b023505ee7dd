#pragma once

#include <map>
#include <vector>

#include "swarmsim/engine/ant_sim.hpp"
#include "swarmsim/metrics/stats.hpp"

namespace swarmsim::metrics {

// One completed delivery: food picked up at a source, dropped at the nest.
struct TripRecord {
  int agent_id = 0;
  int patch_id = 0;
  long long pickup_tick = 0;
  long long drop_tick = 0;  // return-trip length = drop_tick - pickup_tick
};

// The stretch before a pickup: from spawn (tick 0) or the previous drop.
struct SearchRecord {
  int agent_id = 0;
  int patch_id = 0;
  long long start_tick = 0;
  long long pickup_tick = 0;  // search length = pickup_tick - start_tick
};

// Streams per-tick simulation records and closes searches on pickups and
// trips on drops.
class ForagingTracker {
 public:
  explicit ForagingTracker(int population);

  void observe(const std::vector<engine::AntTickRecord>& tick_records);

  const std::vector<TripRecord>& trips() const { return trips_; }
  const std::vector<SearchRecord>& searches() const { return searches_; }

 private:
  struct Progress {
    long long search_start = 0;
    long long pickup_tick = 0;
    int patch_id = 0;
    bool carrying = false;
  };
  std::vector<Progress> agents_;
  std::vector<TripRecord> trips_;
  std::vector<SearchRecord> searches_;
};

// Duration summaries grouped by food source id.
std::map<int, SummaryStats> trip_statistics(const std::vector<TripRecord>& trips);
std::map<int, SummaryStats> search_statistics(const std::vector<SearchRecord>& searches);

}  // namespace swarmsim::metrics
