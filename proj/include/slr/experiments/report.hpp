#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slr::experiments {

// One measurement. Rows with replication = kSummary aggregate the rows of
// the same (series, m, deactivation, pairs).
struct ReportRow {
  static constexpr int kSummary = -1;

  std::string series;
  int m = 0;  // 0 where the width does not apply
  double deactivation = 0.0;
  int pairs = 0;
  int replication = kSummary;
  std::string metric;
  double value = 0.0;
};

struct Quartiles {
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0, mean = 0;
};

// Linear interpolation between order statistics. Empty input gives zeros.
Quartiles quartiles(std::vector<double> values);

class Report {
 public:
  explicit Report(std::string experiment) : experiment_(std::move(experiment)) {}

  void add(ReportRow row) { rows_.push_back(std::move(row)); }
  // Appends <prefix>_min, _q1, _median, _q3, _max and _mean summary rows.
  void add_summary(const ReportRow& key, const std::string& prefix, const std::vector<double>& values);
  // add_summary over the replications of every (series, m, deactivation,
  // pairs) group, for each listed metric.
  void summarize_replications(const std::vector<std::string>& metrics);

  const std::string& experiment() const { return experiment_; }
  const std::vector<ReportRow>& rows() const { return rows_; }
  // Summary rows matching the key fields and metric; nullptr if absent.
  const ReportRow* find(const std::string& series, int m, double deactivation, int pairs,
                        const std::string& metric) const;

  // Canonical row order, so output does not depend on evaluation order.
  void sort();
  // Header row, then rows in the current order; values as %.6f.
  void write_csv(std::ostream& os) const;

 private:
  std::string experiment_;
  std::vector<ReportRow> rows_;
};

}  // namespace slr::experiments
