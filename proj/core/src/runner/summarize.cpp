#include "swarmsim/runner/summarize.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "swarmsim/format.hpp"
#include "swarmsim/metrics/stats.hpp"

namespace swarmsim::runner {
namespace {

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::optional<Csv> read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  Csv csv;
  std::string line;
  if (!std::getline(in, line)) return csv;  // header-less empty file
  csv.header = split_line(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    csv.rows.push_back(split_line(line));
  }
  return csv;
}

int col(const Csv& csv, const std::string& name) {
  for (std::size_t i = 0; i < csv.header.size(); ++i) {
    if (csv.header[i] == name) return static_cast<int>(i);
  }
  throw ConfigError("summary input missing column '" + name + "'");
}

double num(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

std::string cell(double v) { return format_fixed(v, 2); }

void append_row(std::string& out, const std::vector<std::string>& cells) {
  char buf[64];
  for (const std::string& c : cells) {
    std::snprintf(buf, sizeof buf, "%12s", c.c_str());
    out += buf;
  }
  out += '\n';
}

void append_duration_table(std::string& out, std::string& summary_csv, const std::string& title,
                           const std::string& table_key,
                           const std::map<int, std::vector<double>>& by_patch) {
  out += title + "\n";
  append_row(out, {"patch", "mean", "std", "min", "20%", "50%", "75%", "max", "count"});
  for (const auto& [patch, xs] : by_patch) {
    const metrics::SummaryStats s = metrics::summarize(xs);
    append_row(out, {std::to_string(patch), cell(s.mean), cell(s.stddev), cell(s.min),
                     cell(s.p20), cell(s.p50), cell(s.p75), cell(s.max),
                     std::to_string(s.count)});
    const std::string prefix = table_key + "," + std::to_string(patch) + ",";
    summary_csv += prefix + "mean," + format_fixed(s.mean, 6) + "\n";
    summary_csv += prefix + "std," + format_fixed(s.stddev, 6) + "\n";
    summary_csv += prefix + "min," + format_fixed(s.min, 6) + "\n";
    summary_csv += prefix + "p20," + format_fixed(s.p20, 6) + "\n";
    summary_csv += prefix + "p50," + format_fixed(s.p50, 6) + "\n";
    summary_csv += prefix + "p75," + format_fixed(s.p75, 6) + "\n";
    summary_csv += prefix + "max," + format_fixed(s.max, 6) + "\n";
    summary_csv += prefix + "count," + std::to_string(s.count) + "\n";
  }
  out += '\n';
}

std::map<int, std::vector<double>> durations_by_patch(const Csv& csv, const std::string& from_col,
                                                      const std::string& to_col) {
  const int patch = col(csv, "patch");
  const int from = col(csv, from_col);
  const int to = col(csv, to_col);
  std::map<int, std::vector<double>> by_patch;
  for (const auto& row : csv.rows) {
    by_patch[static_cast<int>(num(row[static_cast<std::size_t>(patch)]))].push_back(
        num(row[static_cast<std::size_t>(to)]) - num(row[static_cast<std::size_t>(from)]));
  }
  return by_patch;
}

SummarizeResult summarize_ants(const std::optional<Csv>& food, const Csv& trips,
                               const Csv& searches, const std::string& dir) {
  // Food in the nest at each run's final tick.
  std::vector<double> final_food;
  if (food && !food->rows.empty()) {
    const auto c_tick = static_cast<std::size_t>(col(*food, "tick"));
    const auto c_run = static_cast<std::size_t>(col(*food, "run"));
    const auto c_food = static_cast<std::size_t>(col(*food, "food"));
    std::map<std::string, std::pair<double, double>> last;  // run -> (tick, food)
    for (const auto& row : food->rows) {
      const double tick = num(row[c_tick]);
      const double value = num(row[c_food]);
      auto [it, inserted] = last.try_emplace(row[c_run], tick, value);
      if (!inserted && tick > it->second.first) it->second = {tick, value};
    }
    for (const auto& [run, tick_food] : last) final_food.push_back(tick_food.second);
  }
  if (final_food.empty() && trips.rows.empty() && searches.rows.empty()) {
    throw ConfigError("no runs found in '" + dir +
                      "': food.csv, trips.csv and searches.csv are empty");
  }

  SummarizeResult res;
  std::string summary_csv = "table,group,stat,value\n";
  if (!final_food.empty()) {
    const metrics::SummaryStats s = metrics::summarize(final_food);
    res.report += "Food in the nest at the final tick (per run)\n";
    append_row(res.report, {"runs", "mean", "std", "min", "max"});
    append_row(res.report, {std::to_string(s.count), cell(s.mean), cell(s.stddev), cell(s.min),
                            cell(s.max)});
    res.report += '\n';
    summary_csv += "food,all,mean," + format_fixed(s.mean, 6) + "\n";
    summary_csv += "food,all,std," + format_fixed(s.stddev, 6) + "\n";
    summary_csv += "food,all,min," + format_fixed(s.min, 6) + "\n";
    summary_csv += "food,all,max," + format_fixed(s.max, 6) + "\n";
    summary_csv += "food,all,count," + std::to_string(s.count) + "\n";
  }
  if (!trips.rows.empty()) {
    append_duration_table(res.report, summary_csv,
                          "Return trips: ticks from pickup to nest drop (all runs)", "trips",
                          durations_by_patch(trips, "pickup", "drop"));
  } else {
    res.report += "No completed return trips.\n\n";
  }
  if (!searches.rows.empty()) {
    append_duration_table(res.report, summary_csv,
                          "Searches: ticks from spawn/drop to next pickup (all runs)", "searches",
                          durations_by_patch(searches, "start", "pickup"));
  } else {
    res.report += "No completed searches.\n\n";
  }
  std::ofstream out(dir + "/summary.csv", std::ios::binary | std::ios::trunc);
  out << summary_csv;
  return res;
}

SummarizeResult summarize_flocking(const Csv& pairwise, const std::optional<Csv>& headings,
                                   const std::string& dir) {
  if (pairwise.rows.empty()) {
    throw ConfigError("no runs found in '" + dir + "': pairwise.csv is empty");
  }
  // Group labels come from headings.csv; the rule-side label depends on the mix.
  std::string rule_label = "netlogo";
  if (headings) {
    const int group = col(*headings, "group");
    for (const auto& row : headings->rows) {
      const std::string& g = row[static_cast<std::size_t>(group)];
      if (g != "hybrid_llm") {
        rule_label = g;
        break;
      }
    }
  }
  const int c_coll = col(pairwise, "collisions");
  const int c_llm = col(pairwise, "mean_neighbors_llm");
  const int c_rule = col(pairwise, "mean_neighbors_rule");

  std::vector<double> collisions;
  std::vector<double> llm_means;
  std::vector<double> rule_means;
  for (const auto& row : pairwise.rows) {
    collisions.push_back(num(row[static_cast<std::size_t>(c_coll)]));
    const std::string& lv = row[static_cast<std::size_t>(c_llm)];
    const std::string& rv = row[static_cast<std::size_t>(c_rule)];
    if (lv != "nan") llm_means.push_back(num(lv));
    if (rv != "nan") rule_means.push_back(num(rv));
  }

  SummarizeResult res;
  std::string summary_csv = "table,group,stat,value\n";
  res.report += "Aligned neighbors per bird (per-tick group means, all runs)\n";
  append_row(res.report, {"group", "mean", "median", "std", "ticks"});
  const auto neighbor_rows = [&](const std::string& label, const std::vector<double>& xs) {
    if (xs.empty()) return;
    const double mean = metrics::mean_of(xs);
    const double median = metrics::percentile(xs, 0.5);
    const double stddev = metrics::stddev_of(xs);
    append_row(res.report,
               {label, cell(mean), cell(median), cell(stddev), std::to_string(xs.size())});
    const std::string prefix = "neighbors," + label + ",";
    summary_csv += prefix + "mean," + format_fixed(mean, 6) + "\n";
    summary_csv += prefix + "median," + format_fixed(median, 6) + "\n";
    summary_csv += prefix + "std," + format_fixed(stddev, 6) + "\n";
    summary_csv += prefix + "count," + std::to_string(xs.size()) + "\n";
  };
  neighbor_rows(rule_label, rule_means);
  neighbor_rows("hybrid_llm", llm_means);
  res.report += '\n';

  const double coll_mean = metrics::mean_of(collisions);
  double coll_total = 0.0;
  for (double c : collisions) coll_total += c;
  res.report += "Collisions (all runs)\n";
  res.report += "  per-tick mean: " + format_fixed(coll_mean, 2) + "\n";
  res.report += "  total:         " + format_fixed(coll_total, 0) + "\n";
  summary_csv += "collisions,all,per_tick_mean," + format_fixed(coll_mean, 6) + "\n";
  summary_csv += "collisions,all,total," + format_fixed(coll_total, 6) + "\n";

  std::ofstream out(dir + "/summary.csv", std::ios::binary | std::ios::trunc);
  out << summary_csv;
  return res;
}

}  // namespace

SummarizeResult summarize_directory(const std::string& dir) {
  const std::optional<Csv> trips = read_csv(dir + "/trips.csv");
  const std::optional<Csv> searches = read_csv(dir + "/searches.csv");
  if (trips && searches) return summarize_ants(read_csv(dir + "/food.csv"), *trips, *searches, dir);

  const std::optional<Csv> pairwise = read_csv(dir + "/pairwise.csv");
  if (pairwise) return summarize_flocking(*pairwise, read_csv(dir + "/headings.csv"), dir);

  throw ConfigError("no runs found in '" + dir + "'");
}

}  // namespace swarmsim::runner
