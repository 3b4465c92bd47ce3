#include "slr/experiments/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <ostream>
#include <tuple>

namespace slr::experiments {

Quartiles quartiles(std::vector<double> values) {
  Quartiles q;
  if (values.empty()) return q;
  std::sort(values.begin(), values.end());
  auto at = [&](double p) {
    const double pos = p * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
  };
  q.min = values.front();
  q.q1 = at(0.25);
  q.median = at(0.5);
  q.q3 = at(0.75);
  q.max = values.back();
  q.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  return q;
}

void Report::add_summary(const ReportRow& key, const std::string& prefix, const std::vector<double>& values) {
  const Quartiles q = quartiles(values);
  const std::pair<const char*, double> stats[] = {{"_min", q.min},       {"_q1", q.q1},   {"_median", q.median},
                                                 {"_q3", q.q3},         {"_max", q.max}, {"_mean", q.mean}};
  for (const auto& [suffix, v] : stats) {
    ReportRow row = key;
    row.replication = ReportRow::kSummary;
    row.metric = prefix + suffix;
    row.value = v;
    add(std::move(row));
  }
}

void Report::summarize_replications(const std::vector<std::string>& metrics) {
  using Key = std::tuple<std::string, int, double, int, std::string>;
  std::map<Key, std::vector<double>> groups;
  for (const auto& r : rows_) {
    if (r.replication == ReportRow::kSummary) continue;
    if (std::find(metrics.begin(), metrics.end(), r.metric) == metrics.end()) continue;
    groups[{r.series, r.m, r.deactivation, r.pairs, r.metric}].push_back(r.value);
  }
  for (const auto& [key, values] : groups) {
    const auto& [series, m, deactivation, pairs, metric] = key;
    add_summary({series, m, deactivation, pairs, ReportRow::kSummary, "", 0.0}, metric, values);
  }
}

const ReportRow* Report::find(const std::string& series, int m, double deactivation, int pairs,
                              const std::string& metric) const {
  for (const auto& r : rows_) {
    if (r.replication == ReportRow::kSummary && r.series == series && r.m == m && r.deactivation == deactivation &&
        r.pairs == pairs && r.metric == metric) {
      return &r;
    }
  }
  return nullptr;
}

void Report::sort() {
  std::stable_sort(rows_.begin(), rows_.end(), [](const ReportRow& a, const ReportRow& b) {
    return std::tie(a.series, a.m, a.deactivation, a.pairs, a.replication, a.metric) <
           std::tie(b.series, b.m, b.deactivation, b.pairs, b.replication, b.metric);
  });
}

void Report::write_csv(std::ostream& os) const {
  os << "experiment,series,m,deactivation,pairs,replication,metric,value\n";
  char buf[64];
  for (const auto& r : rows_) {
    os << experiment_ << ',' << r.series << ',' << r.m << ',';
    std::snprintf(buf, sizeof buf, "%.4f", r.deactivation);
    os << buf << ',' << r.pairs << ',';
    if (r.replication == ReportRow::kSummary) {
      os << "summary";
    } else {
      os << r.replication;
    }
    std::snprintf(buf, sizeof buf, "%.6f", r.value);
    os << ',' << r.metric << ',' << buf << '\n';
  }
}

}  // namespace slr::experiments
