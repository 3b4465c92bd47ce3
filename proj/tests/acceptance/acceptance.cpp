// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "slr/coords/geometry.hpp"
#include "slr/experiments/config_io.hpp"
#include "slr/experiments/evaluations.hpp"
#include "slr/netsim/channel.hpp"
#include "slr/netsim/exchange.hpp"
#include "slr/netsim/flood.hpp"
#include "slr/netsim/random.hpp"
#include "slr/routing/predicates.hpp"
#include "slr/viewport/selection.hpp"

using namespace slr;
namespace fs = std::filesystem;
using experiments::Report;

namespace {

int failures = 0;

void verdict(const char* id, bool ok, const std::string& detail) {
  std::printf("%s %s: %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Line and segment conditions written out with plain products.
long long cross(long long p, long long q, long long p1, long long q1, long long p2, long long q2) {
  return (p - p1) * (q2 - q1) - (q - q1) * (p2 - p1);
}

bool oracle_line(const coords::UsableAddress& u, const coords::UsableAddress& a, const coords::UsableAddress& b,
                 int m) {
  const long long x = u.r_dot, y = u.r_ddot, z = u.r_dddot;
  const long long A = cross(x, y, a.r_dot, a.r_ddot, b.r_dot, b.r_ddot);
  const long long B = cross(x, z, a.r_dot, a.r_dddot, b.r_dot, b.r_dddot);
  const bool in_a = A * cross(x - m, y, a.r_dot, a.r_ddot, b.r_dot, b.r_ddot) <= 0 ||
                    A * cross(x, y - m, a.r_dot, a.r_ddot, b.r_dot, b.r_ddot) <= 0 ||
                    A * cross(x - m, y - m, a.r_dot, a.r_ddot, b.r_dot, b.r_ddot) <= 0;
  const bool in_b = B * cross(x - m, z, a.r_dot, a.r_dddot, b.r_dot, b.r_dddot) <= 0 ||
                    B * cross(x, z - m, a.r_dot, a.r_dddot, b.r_dot, b.r_dddot) <= 0 ||
                    B * cross(x - m, z - m, a.r_dot, a.r_dddot, b.r_dot, b.r_dddot) <= 0;
  return in_a && in_b;
}

bool oracle_segment(const coords::UsableAddress& u, const coords::UsableAddress& a, const coords::UsableAddress& b) {
  auto in = [](int v, int e1, int e2) { return std::min(e1, e2) <= v && v <= std::max(e1, e2); };
  return in(u.r_dot, a.r_dot, b.r_dot) && in(u.r_ddot, a.r_ddot, b.r_ddot) && in(u.r_dddot, a.r_dddot, b.r_dddot);
}

// Radius where free-space spreading plus absorption uses up the link budget,
// found by bisection.
double oracle_radius(const netsim::SimConfig& c) {
  const double budget = c.tx_power_dBnW - c.noise_dBnW - c.sinr_threshold_dB;
  auto loss = [&](double d) {
    return 20.0 * std::log10(4.0 * M_PI * d * c.frequency / 299792458.0) + c.absorption_K_dB_per_km * d / 1000.0;
  };
  double lo = 1e-6, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (loss(mid) < budget ? lo : hi) = mid;
  }
  return lo;
}

void ac1() {
  const auto t0 = std::chrono::steady_clock::now();
  netsim::SimConfig cfg = netsim::desk_config();
  cfg.channel = netsim::ChannelMode::ideal;
  const netsim::Field blank = netsim::build_field(cfg);
  const netsim::Channel channel(blank, cfg);
  const netsim::Field field = netsim::run_setup_flood(blank, channel);
  const auto nodes = field.nodes();
  const std::size_t n = field.size();

  const double r = oracle_radius(cfg);
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && coords::distance(nodes[i].pos, nodes[j].pos) <= r) adj[i].push_back(j);
    }
  }

  netsim::Rng rng(0xAC1);
  int mismatches = 0, runs = 0;
  std::size_t forwarders = 0;
  for (int t = 0; t < 50; ++t) {
    const netsim::NodePair pair{static_cast<netsim::NodeId>(rng.below(n)), static_cast<netsim::NodeId>(rng.below(n))};
    for (int m = 1; m <= 3; ++m) {
      netsim::ExchangeParams p;
      p.m = routing::PathWidth{m};
      p.cycle_key = static_cast<std::uint64_t>(t);
      const auto out = netsim::run_data_exchange(field, channel, std::span<const netsim::NodePair>(&pair, 1), p);
      const auto& po = out.pairs[0];
      const auto vp = po.choice.vp;
      const auto ua1 = po.choice.ua1, ua2 = po.choice.ua2;

      // Zone by zone: which usable addresses present in the field qualify.
      std::map<coords::UsableAddress, bool> zone_ok;
      for (const auto& node : nodes) {
        if (!node.address.complete()) continue;
        const auto ua = coords::project(node.address, vp);
        if (!zone_ok.count(ua)) zone_ok[ua] = oracle_segment(ua, ua1, ua2) && oracle_line(ua, ua1, ua2, m);
      }
      // Reachability: relays are the sender plus qualifying, non-recipient
      // zone nodes that hear a relay.
      std::vector<char> heard(n, 0);
      std::set<netsim::NodeId> expected;
      bool delivered = ua1 == ua2;
      std::queue<std::size_t> q;
      q.push(pair.sender);
      heard[pair.sender] = 1;
      while (!q.empty()) {
        const std::size_t v = q.front();
        q.pop();
        for (std::size_t w : adj[v]) {
          if (heard[w] || !nodes[w].active) continue;
          heard[w] = 1;
          const auto ua = coords::project(nodes[w].address, vp);
          if (ua == ua2) {
            delivered = true;
          } else if (zone_ok.at(ua)) {
            expected.insert(static_cast<netsim::NodeId>(w));
            q.push(w);
          }
        }
      }
      const std::set<netsim::NodeId> got(po.forwarders.begin(), po.forwarders.end());
      if (got != expected || po.delivered != delivered) ++mismatches;
      forwarders += got.size();
      ++runs;
    }
  }
  const double secs = seconds_since(t0);
  verdict("AC1", mismatches == 0 && secs < 30.0,
          fmt("%d runs, %d mismatches, %zu forwarders total, %.1f s", runs, mismatches, forwarders, secs));
}

void ac2() {
  netsim::Rng rng(0xAC2);
  auto c = [&] { return static_cast<std::uint16_t>(rng.below(31)); };
  int violations = 0;
  for (int t = 0; t < 1000; ++t) {
    const coords::UsableAddress u{c(), c(), c()}, a{c(), c(), c()}, b{c(), c(), c()};
    for (int m = 1; m <= 5; ++m) {
      const routing::RouteSpec s{coords::kViewports[0], a, b, routing::PathWidth{m}};
      const routing::RouteSpec wider{coords::kViewports[0], a, b, routing::PathWidth{m + 1}};
      if (routing::on_line(u, s) && !routing::on_line(u, wider)) ++violations;
    }
  }
  verdict("AC2", violations == 0, fmt("1000 triples x m=1..5, %d violations", violations));
}

void ac3() {
  const netsim::SimConfig cfg = netsim::full_config();
  const auto& dims = cfg.dims;
  netsim::Rng rng(0xAC3);
  double worst = 0.0;
  int failed = 0;
  for (int t = 0; t < 1000; ++t) {
    const coords::CartesianPos p{dims.x_len * rng.uniform01(), dims.y_len * rng.uniform01(),
                                 dims.z_len * rng.uniform01()};
    for (const auto& vp : coords::kViewports) {
      try {
        const auto back = coords::curvilinear_to_cartesian(coords::cartesian_to_curvilinear(p, vp, dims), vp, dims);
        worst = std::max(worst, coords::distance(back, p) / dims.diagonal());
      } catch (const std::exception&) {
        ++failed;
      }
    }
  }
  verdict("AC3", failed == 0 && worst <= 1e-9,
          fmt("24000 inversions, max error %.3g of the diagonal, %d failures", worst, failed));
}

// Per-pair rows of one metric, keyed by (m, pair index).
std::map<std::pair<int, int>, double> per_pair(const Report& r, const std::string& series, const std::string& metric) {
  std::map<std::pair<int, int>, double> out;
  for (const auto& row : r.rows()) {
    if (row.series == series && row.metric == metric && row.replication >= 0) out[{row.m, row.replication}] = row.value;
  }
  return out;
}

void ac4() {
  const auto spec = experiments::preset_spec(experiments::Preset::desk, experiments::Experiment::viewport_eval);
  const Report r = experiments::eval_viewport_selection(spec);
  const auto opt = per_pair(r, "optimal", "zones"), res = per_pair(r, "resolution", "zones"),
             worst = per_pair(r, "worst", "zones"), rnd = per_pair(r, "random", "zones");
  int violations = 0;
  for (const auto& [key, o] : opt) {
    if (!(o <= res.at(key) && res.at(key) <= worst.at(key) && rnd.at(key) >= o)) ++violations;
  }
  verdict("AC4", violations == 0 && !opt.empty(),
          fmt("%zu pair/m cases, %d ordering violations", opt.size(), violations));
}

void ac5_ac6() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto spec = experiments::preset_spec(experiments::Preset::full, experiments::Experiment::viewport_eval);
  const Report r = experiments::eval_viewport_selection(spec);
  auto median = [&](const char* series, int m) {
    const auto* row = r.find(series, m, 0.0, spec.pair_count, "excess_median");
    return row ? row->value : NAN;
  };
  const double res = median("resolution", 1), dist = median("distance", 1), rnd = median("random", 1);
  const bool ok5 = res >= 0.2 && res <= 0.9 && rnd >= 1.2 && rnd <= 3.0 && res < dist && res < rnd;
  verdict("AC5", ok5,
          fmt("m=1 median excess: resolution %.3f (want 0.2..0.9), random %.3f (want 1.2..3.0), distance %.3f; "
              "%.1f s",
              res, rnd, dist, seconds_since(t0)));

  bool ok6 = true;
  double lo = INFINITY, hi = -INFINITY;
  std::string detail = "resolution median excess";
  for (int m = 1; m <= 3; ++m) {
    const double v = median("resolution", m);
    ok6 = ok6 && v >= 0.2 && v <= 1.1;
    detail += fmt(" m=%d %.3f", m, v);
    lo = std::min(lo, median("random", m));
    hi = std::max(hi, median("random", m));
  }
  ok6 = ok6 && (hi - lo) < 0.6;
  detail += fmt(" (want 0.2..1.1); random spread across m %.3f (want < 0.6)", hi - lo);
  verdict("AC6", ok6, detail);
}

void ac7() {
  const auto spec = experiments::preset_spec(experiments::Preset::desk, experiments::Experiment::network_eval);
  const Report r = experiments::eval_network_efficiency(spec);
  auto mean = [&](const char* series, int m, double d, const char* metric) {
    const auto* row = r.find(series, m, d, spec.pair_count, (std::string(metric) + "_mean").c_str());
    return row ? row->value : NAN;
  };
  int sweep_violations = 0, width_violations = 0;
  std::vector<std::pair<const char*, int>> series{{"corona", 0}};
  for (int m : spec.m_values) series.push_back({"slr", m});
  for (const auto& [name, m] : series) {
    for (std::size_t i = 1; i < spec.deactivation_sweep.size(); ++i) {
      const double prev = mean(name, m, spec.deactivation_sweep[i - 1], "success_ratio");
      const double cur = mean(name, m, spec.deactivation_sweep[i], "success_ratio");
      if (!(cur <= prev + 0.03)) ++sweep_violations;
    }
  }
  for (double d : spec.deactivation_sweep) {
    for (std::size_t i = 1; i < spec.m_values.size(); ++i) {
      for (const char* metric : {"success_ratio", "retransmitter_pct"}) {
        if (!(mean("slr", spec.m_values[i], d, metric) >= mean("slr", spec.m_values[i - 1], d, metric))) {
          ++width_violations;
        }
      }
    }
  }
  std::string curve;
  for (double d : spec.deactivation_sweep) curve += fmt(" %.3f", mean("slr", 1, d, "success_ratio"));
  verdict("AC7", sweep_violations == 0 && width_violations == 0,
          fmt("%d reps; slr m=1 success along sweep:%s; %d sweep and %d width violations", spec.repetitions,
              curve.c_str(), sweep_violations, width_violations));
}

void ac8() {
  const auto spec = experiments::preset_spec(experiments::Preset::desk, experiments::Experiment::parallel_pairs);
  const Report r = experiments::eval_parallel_pairs(spec);
  bool strict = true;
  double ratio_sum = 0.0;
  for (int k = 1; k <= spec.max_parallel_pairs; ++k) {
    const auto* s = r.find("slr", spec.m_values.front(), 0.0, k, "tx_per_node_mean");
    const auto* c = r.find("corona", 0, 0.0, k, "tx_per_node_mean");
    if (!s || !c) {
      strict = false;
      continue;
    }
    strict = strict && s->value < c->value;
    ratio_sum += c->value / s->value;
  }
  const double ratio = ratio_sum / spec.max_parallel_pairs;
  verdict("AC8", strict && ratio >= 1.2,
          fmt("pairs 1..%d: SLR below CORONA at every count: %s; mean CORONA/SLR %.3f (want >= 1.2)",
              spec.max_parallel_pairs, strict ? "yes" : "no", ratio));
}

void ac9() {
  netsim::Rng rng(0xAC9);
  int bad = 0;
  for (int t = 0; t < 1000; ++t) {
    coords::HopAddress a, b;
    for (int i = 0; i < 8; ++i) {
      a.r[i] = static_cast<std::uint16_t>(rng.below(20));
      b.r[i] = static_cast<std::uint16_t>(rng.below(20));
    }
    for (auto prio : {viewport::Prioritization::resolution, viewport::Prioritization::distance}) {
      viewport::SelectionTrace trace;
      viewport::select_viewport(a, b, prio, &trace);
      if (trace.operations != 101 || trace.loop_iterations != 9) ++bad;
    }
  }
  int containing = 0;
  for (int a = 1; a <= 8; ++a) containing += coords::viewports_containing(coords::AnchorIndex{a}).size() == 9;
  const bool ok = bad == 0 && coords::kViewports.size() == 24 && containing == 8;
  verdict("AC9", ok,
          fmt("2000 selections, %d off the 101-operation/9-iteration count; %zu viewports enumerated", bad,
              coords::kViewports.size()));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void ac10() {
  const fs::path root = fs::temp_directory_path() / "slr_acceptance_rerun";
  fs::remove_all(root);
  fs::create_directories(root);
  int differing = 0;
  std::string detail;
  for (auto e : {experiments::Experiment::viewport_eval, experiments::Experiment::network_eval,
                 experiments::Experiment::parallel_pairs}) {
    auto spec = experiments::preset_spec(experiments::Preset::desk, e);
    spec.repetitions = std::min(spec.repetitions, 3);
    spec.sim.seed = 4242;
    const fs::path cfg = root / (experiments::to_string(e) + ".conf");
    std::ofstream(cfg) << experiments::to_config_text(spec);
    std::string first;
    for (int run = 0; run < 2; ++run) {
      experiments::RunOptions o;
      o.config_path = cfg.string();
      o.out_dir = (root / (experiments::to_string(e) + std::to_string(run))).string();
      std::ostringstream err;
      if (experiments::run_scenario(o, err) != 0) {
        ++differing;
        continue;
      }
      const std::string csv = slurp(fs::path(o.out_dir) / "report.csv");
      if (run == 0) first = csv;
      else if (csv != first || csv.empty()) ++differing;
    }
    detail += fmt(" %s %zu bytes;", experiments::to_string(e).c_str(), first.size());
  }
  fs::remove_all(root);
  verdict("AC10", differing == 0, fmt("reruns byte-identical:%s %d differing", detail.c_str(), differing));
}

}  // namespace

int main() {
  ac1();
  ac2();
  ac3();
  ac4();
  ac5_ac6();
  ac7();
  ac8();
  ac9();
  ac10();
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
