#include "swarmsim/metrics/foraging.hpp"

#include <stdexcept>

namespace swarmsim::metrics {

ForagingTracker::ForagingTracker(int population)
    : agents_(static_cast<std::size_t>(population)) {
  if (population <= 0) throw std::invalid_argument("foraging tracker needs a population");
}

void ForagingTracker::observe(const std::vector<engine::AntTickRecord>& tick_records) {
  for (const engine::AntTickRecord& rec : tick_records) {
    const std::size_t i = static_cast<std::size_t>(rec.agent_id);
    if (i >= agents_.size()) throw std::out_of_range("tick record for unknown agent");
    Progress& p = agents_[i];
    if (rec.applied.picked_up) {
      searches_.push_back({rec.agent_id, rec.picked_patch, p.search_start, rec.tick});
      p.carrying = true;
      p.pickup_tick = rec.tick;
      p.patch_id = rec.picked_patch;
    }
    if (rec.applied.dropped_food && p.carrying) {
      trips_.push_back({rec.agent_id, p.patch_id, p.pickup_tick, rec.tick});
      p.carrying = false;
      p.search_start = rec.tick;
    }
  }
}

namespace {

std::map<int, SummaryStats> grouped_durations(const std::map<int, std::vector<double>>& groups) {
  std::map<int, SummaryStats> out;
  for (const auto& [patch, xs] : groups) out.emplace(patch, summarize(xs));
  return out;
}

}  // namespace

std::map<int, SummaryStats> trip_statistics(const std::vector<TripRecord>& trips) {
  std::map<int, std::vector<double>> groups;
  for (const TripRecord& t : trips) {
    groups[t.patch_id].push_back(static_cast<double>(t.drop_tick - t.pickup_tick));
  }
  return grouped_durations(groups);
}

std::map<int, SummaryStats> search_statistics(const std::vector<SearchRecord>& searches) {
  std::map<int, std::vector<double>> groups;
  for (const SearchRecord& s : searches) {
    groups[s.patch_id].push_back(static_cast<double>(s.pickup_tick - s.start_tick));
  }
  return grouped_durations(groups);
}

}  // namespace swarmsim::metrics
