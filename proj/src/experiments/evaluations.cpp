#include "slr/experiments/evaluations.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "slr/netsim/exchange.hpp"
#include "slr/netsim/flood.hpp"
#include "slr/netsim/random.hpp"
#include "slr/netsim/snapshot.hpp"

#ifndef SLR_VERSION
#define SLR_VERSION "0.0.0"
#endif

namespace slr::experiments {

using netsim::Field;
using netsim::NodeId;
using netsim::NodePair;
using netsim::mix_keys;

namespace {

constexpr std::uint64_t kPairStream = 0x9A125ULL;

struct Addressed {
  Field field;
  netsim::Channel channel;
};

// Field with every node on, addressed by one setup flood.
Addressed addressed_field(const netsim::SimConfig& sim) {
  netsim::SimConfig cfg = sim;
  cfg.deactivation_ratio = 0.0;
  Field blank = netsim::build_field(cfg);
  netsim::Channel channel(blank, cfg);
  Field field = netsim::run_setup_flood(blank, channel);
  return {std::move(field), std::move(channel)};
}

bool usable_endpoint(const netsim::Node& n) { return n.active && n.address.complete(); }

// `count` pairs of distinct nodes drawn uniformly from `pool`.
std::vector<NodePair> draw_pairs(const std::vector<NodeId>& pool, int count, std::uint64_t key) {
  std::vector<NodePair> pairs;
  if (pool.size() < 2) return pairs;
  netsim::Rng rng(key);
  for (int i = 0; i < count; ++i) {
    const auto s = pool[rng.below(pool.size())];
    NodeId r = s;
    while (r == s) r = pool[rng.below(pool.size())];
    pairs.push_back({s, r});
  }
  return pairs;
}

std::vector<NodeId> endpoint_pool(const Field& field) {
  std::vector<NodeId> pool;
  for (const auto& n : field.nodes()) {
    if (usable_endpoint(n)) pool.push_back(n.id);
  }
  return pool;
}

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double total = 0.0;
  for (double x : v) total += x;
  return total / static_cast<double>(v.size());
}

}  // namespace

Report eval_viewport_selection(const ScenarioSpec& spec) {
  Report report(to_string(Experiment::viewport_eval));
  const Addressed net = addressed_field(spec.sim);
  const auto addresses = net.field.addresses();
  const auto pairs = draw_pairs(endpoint_pool(net.field), spec.pair_count, mix_keys({spec.sim.seed, kPairStream}));

  const char* series[] = {"optimal", "resolution", "distance", "random", "worst"};
  for (int m : spec.m_values) {
    std::vector<double> zones[5], excess[5];
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto& a1 = addresses[pairs[p].sender];
      const auto& a2 = addresses[pairs[p].recipient];
      const auto bf = viewport::optimal_viewport_bruteforce(a1, a2, addresses, routing::PathWidth{m});
      const auto res = viewport::select_viewport(a1, a2, viewport::Prioritization::resolution);
      const auto dist = viewport::select_viewport(a1, a2, viewport::Prioritization::distance);
      const double best = static_cast<double>(bf.counts[bf.ordinal]);
      const double values[] = {best, static_cast<double>(bf.counts[*coords::viewport_ordinal(res.vp)]),
                               static_cast<double>(bf.counts[*coords::viewport_ordinal(dist.vp)]),
                               viewport::mean_count(bf.counts),
                               static_cast<double>(*std::max_element(bf.counts.begin(), bf.counts.end()))};
      for (int s = 0; s < 5; ++s) {
        const double ex = values[s] / best - 1.0;
        zones[s].push_back(values[s]);
        excess[s].push_back(ex);
        report.add({series[s], m, 0.0, spec.pair_count, static_cast<int>(p), "zones", values[s]});
        report.add({series[s], m, 0.0, spec.pair_count, static_cast<int>(p), "excess", ex});
      }
    }
    for (int s = 0; s < 5; ++s) {
      const ReportRow key{series[s], m, 0.0, spec.pair_count, ReportRow::kSummary, "", 0.0};
      report.add_summary(key, "zones", zones[s]);
      report.add_summary(key, "excess", excess[s]);
    }
  }
  report.sort();
  return report;
}

Report eval_network_efficiency(const ScenarioSpec& spec) {
  Report report(to_string(Experiment::network_eval));
  const Addressed net = addressed_field(spec.sim);
  const double worst_ratio = *std::max_element(spec.deactivation_sweep.begin(), spec.deactivation_sweep.end());

  struct Series {
    std::string name;
    routing::Scheme scheme;
    int m;
  };
  std::vector<Series> series;
  for (int m : spec.m_values) series.push_back({"slr", routing::Scheme::slr, m});
  series.push_back({"corona", routing::Scheme::corona, 0});

  for (int rep = 0; rep < spec.repetitions; ++rep) {
    const std::uint64_t fail_seed = mix_keys({spec.sim.seed, 0xFA11ULL, static_cast<std::uint64_t>(rep)});
    // The failure order is fixed per repetition, so failed sets are nested
    // along the sweep; endpoints come from the nodes that survive all of it.
    Field survivors = net.field;
    survivors.deactivate(worst_ratio, fail_seed);
    const auto pool = endpoint_pool(survivors);

    for (double ratio : spec.deactivation_sweep) {
      Field field = net.field;
      field.deactivate(ratio, fail_seed);
      const double active = static_cast<double>(field.active_count());
      std::vector<std::vector<double>> success(series.size()), forwarding(series.size());
      for (int cycle = 0; cycle < spec.cycles; ++cycle) {
        const std::uint64_t cycle_key = mix_keys({static_cast<std::uint64_t>(rep), static_cast<std::uint64_t>(cycle)});
        const auto pairs = draw_pairs(pool, spec.pair_count, mix_keys({spec.sim.seed, kPairStream, cycle_key}));
        if (pairs.empty()) continue;
        for (std::size_t s = 0; s < series.size(); ++s) {
          netsim::ExchangeParams params;
          params.scheme = series[s].scheme;
          params.m = routing::PathWidth{std::max(series[s].m, 1)};
          params.prio = spec.prio;
          params.cycle_key = cycle_key;
          const auto out = netsim::run_data_exchange(field, net.channel, pairs, params);
          success[s].push_back(static_cast<double>(out.delivered_count()) / static_cast<double>(pairs.size()));
          double pct = 0.0;
          for (const auto& p : out.pairs) pct += 100.0 * static_cast<double>(p.forwarders.size()) / active;
          forwarding[s].push_back(pct / static_cast<double>(out.pairs.size()));
        }
      }
      for (std::size_t s = 0; s < series.size(); ++s) {
        report.add({series[s].name, series[s].m, ratio, spec.pair_count, rep, "success_ratio", mean_of(success[s])});
        report.add({series[s].name, series[s].m, ratio, spec.pair_count, rep, "retransmitter_pct",
                    mean_of(forwarding[s])});
      }
    }
  }
  report.summarize_replications({"success_ratio", "retransmitter_pct"});
  report.sort();
  return report;
}

Report eval_parallel_pairs(const ScenarioSpec& spec) {
  Report report(to_string(Experiment::parallel_pairs));
  const Addressed net = addressed_field(spec.sim);
  const auto pool = endpoint_pool(net.field);
  const double active = static_cast<double>(net.field.active_count());
  const int m = spec.m_values.front();

  for (int rep = 0; rep < spec.repetitions; ++rep) {
    std::vector<std::vector<double>> slr(spec.max_parallel_pairs), corona(spec.max_parallel_pairs);
    for (int cycle = 0; cycle < spec.cycles; ++cycle) {
      const std::uint64_t cycle_key = mix_keys({static_cast<std::uint64_t>(rep), static_cast<std::uint64_t>(cycle)});
      // Larger loads extend the smaller ones.
      const auto all = draw_pairs(pool, spec.max_parallel_pairs, mix_keys({spec.sim.seed, kPairStream, cycle_key}));
      for (int k = 1; k <= static_cast<int>(all.size()); ++k) {
        const std::span<const NodePair> pairs(all.data(), static_cast<std::size_t>(k));
        for (auto scheme : {routing::Scheme::slr, routing::Scheme::corona}) {
          netsim::ExchangeParams params;
          params.scheme = scheme;
          params.m = routing::PathWidth{m};
          params.prio = spec.prio;
          params.cycle_key = cycle_key;
          const auto out = netsim::run_data_exchange(net.field, net.channel, pairs, params);
          auto& sink = scheme == routing::Scheme::slr ? slr : corona;
          sink[k - 1].push_back(static_cast<double>(out.total_transmissions) / active);
        }
      }
    }
    for (int k = 1; k <= spec.max_parallel_pairs; ++k) {
      report.add({"slr", m, 0.0, k, rep, "tx_per_node", mean_of(slr[k - 1])});
      report.add({"corona", 0, 0.0, k, rep, "tx_per_node", mean_of(corona[k - 1])});
    }
  }
  report.summarize_replications({"tx_per_node"});
  report.sort();
  return report;
}

Report evaluate(const ScenarioSpec& spec) {
  spec.validate();
  switch (spec.experiment) {
    case Experiment::viewport_eval: return eval_viewport_selection(spec);
    case Experiment::network_eval: return eval_network_efficiency(spec);
    case Experiment::parallel_pairs: return eval_parallel_pairs(spec);
  }
  return eval_viewport_selection(spec);
}

std::string software_version() { return SLR_VERSION; }

namespace {

std::string hex64(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void write_manifest(const std::string& path, const ScenarioSpec& spec, const std::string& kind,
                    const std::vector<std::pair<std::string, std::string>>& extra) {
  std::ofstream out(path, std::ios::binary);
  const std::string config = to_config_text(spec);
  out << "kind = " << kind << '\n'
      << "software_version = " << software_version() << '\n'
      << "seed = " << spec.sim.seed << '\n'
      << "config_hash = fnv1a64:" << hex64(fnv1a64(config)) << '\n';
  for (const auto& [k, v] : extra) out << k << " = " << v << '\n';
  std::istringstream lines(config);
  std::string line;
  while (std::getline(lines, line)) out << "config." << line << '\n';
  if (!out) throw std::runtime_error("cannot write " + path);
}

std::filesystem::path prepare_dir(const std::string& out_dir) {
  std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

RunArtifacts write_artifacts(const ScenarioSpec& spec, const Report& report, const std::string& out_dir) {
  const auto dir = prepare_dir(out_dir);
  RunArtifacts art{(dir / "report.csv").string(), (dir / "manifest.txt").string()};
  {
    std::ofstream csv(art.report_path, std::ios::binary);
    report.write_csv(csv);
    if (!csv) throw std::runtime_error("cannot write " + art.report_path);
  }
  write_manifest(art.manifest_path, spec, report.experiment(),
                 {{"report", "report.csv"}, {"rows", std::to_string(report.rows().size())}});
  return art;
}

RunArtifacts write_flood_snapshot(const ScenarioSpec& spec, const std::string& out_dir) {
  spec.validate();
  const Field blank = netsim::build_field(spec.sim);
  netsim::FloodReport flood;
  const Field field = netsim::run_setup_flood(blank, spec.sim, &flood);
  const auto dir = prepare_dir(out_dir);
  RunArtifacts art{(dir / "snapshot.csv").string(), (dir / "manifest.txt").string()};
  {
    std::ofstream out(art.report_path, std::ios::binary);
    netsim::write_snapshot(out, field);
    if (!out) throw std::runtime_error("cannot write " + art.report_path);
  }
  write_manifest(art.manifest_path, spec, "flood_snapshot",
                 {{"snapshot", "snapshot.csv"},
                  {"nodes", std::to_string(field.size())},
                  {"active", std::to_string(field.active_count())},
                  {"addressed", std::to_string(flood.addressed)},
                  {"incomplete", std::to_string(flood.incomplete)},
                  {"hop_diameter", std::to_string(flood.hop_diameter)},
                  {"flood_transmissions", std::to_string(flood.transmissions)}});
  return art;
}

ScenarioSpec resolve_spec(const RunOptions& options) {
  ScenarioSpec spec = options.config_path.empty() ? parse_scenario("", options.defaults)
                                                  : load_scenario(options.config_path, options.defaults);
  if (options.seed) spec.sim.seed = *options.seed;
  spec.validate();
  return spec;
}

int run_scenario(const RunOptions& options, std::ostream& err) {
  try {
    const ScenarioSpec spec = resolve_spec(options);
    if (options.snapshot) {
      write_flood_snapshot(spec, options.out_dir);
    } else {
      write_artifacts(spec, evaluate(spec), options.out_dir);
    }
    return 0;
  } catch (const netsim::ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace slr::experiments
