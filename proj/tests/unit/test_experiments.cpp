#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "slr/experiments/config_io.hpp"
#include "slr/experiments/evaluations.hpp"

using namespace slr;
using namespace slr::experiments;
namespace fs = std::filesystem;

namespace {

std::string error_field(const std::string& text, const ParseDefaults& d = {}) {
  try {
    parse_scenario(text, d);
  } catch (const netsim::ConfigError& e) {
    return e.field();
  }
  return "";
}

std::string csv_of(const Report& r) {
  std::ostringstream os;
  r.write_csv(os);
  return os.str();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("slr_test_" + name);
  fs::remove_all(p);
  return p;
}

ScenarioSpec small(Experiment e) {
  ScenarioSpec s = preset_spec(Preset::desk, e);
  s.pair_count = 4;
  s.cycles = 2;
  s.repetitions = 2;
  s.max_parallel_pairs = 3;
  s.deactivation_sweep = {0.0, 0.5};
  return s;
}

}  // namespace

TEST_CASE("presets") {
  const auto v = preset_spec(Preset::full, Experiment::viewport_eval);
  CHECK(v.sim == netsim::full_config());
  CHECK(v.pair_count == 100);
  CHECK(v.repetitions == 1);
  const auto n = preset_spec(Preset::desk, Experiment::network_eval);
  CHECK(n.sim == netsim::desk_config());
  CHECK(n.pair_count == 5);
  const auto p = preset_spec(Preset::desk, Experiment::parallel_pairs);
  CHECK(p.m_values == std::vector<int>{1});
  for (auto e : {Experiment::viewport_eval, Experiment::network_eval, Experiment::parallel_pairs}) {
    CHECK(experiment_from_string(to_string(e)) == e);
    CHECK_NOTHROW(preset_spec(Preset::full, e).validate());
  }
  CHECK_THROWS_AS(experiment_from_string("nope"), netsim::ConfigError);
  CHECK_THROWS_AS(preset_from_string("huge"), netsim::ConfigError);
}

TEST_CASE("scenario parsing") {
  const auto s = parse_scenario(
      "# comment\n"
      "experiment = network_eval   # trailing\n"
      "\n"
      "repetitions = 3\n"
      "m_values = 2, 4\n"
      "deactivation_sweep = 0,0.25\n"
      "sim.dims = 0.005,0.0025,0.00375\n"
      "sim.channel = no_interference\n"
      "sim.seed = 77\n"
      "prio = distance\n");
  CHECK(s.experiment == Experiment::network_eval);
  CHECK(s.repetitions == 3);
  CHECK(s.m_values == std::vector<int>{2, 4});
  CHECK(s.deactivation_sweep == std::vector<double>{0.0, 0.25});
  CHECK(s.sim.dims.y_len == 0.0025);
  CHECK(s.sim.channel == netsim::ChannelMode::no_interference);
  CHECK(s.sim.seed == 77);
  CHECK(s.prio == viewport::Prioritization::distance);
  CHECK(s.cycles == preset_spec(Preset::desk, Experiment::network_eval).cycles);

  const auto full = parse_scenario("repetitions = 4\npreset = full\nexperiment = network_eval\n");
  CHECK(full.sim == netsim::full_config());
  CHECK(full.repetitions == 4);  // preset applies first wherever it appears

  ParseDefaults d;
  d.experiment = Experiment::parallel_pairs;
  CHECK(parse_scenario("", d).experiment == Experiment::parallel_pairs);
}

TEST_CASE("scenario errors name the key") {
  const std::string head = "experiment = network_eval\n";
  CHECK(error_field(head + "bogus = 1\n") == "bogus");
  CHECK(error_field(head + "cycles = 2\ncycles = 3\n") == "cycles");
  CHECK(error_field(head + "cycles =\n") == "cycles");
  CHECK(error_field(head + "cycles = 2x\n") == "cycles");
  CHECK(error_field(head + "m_values = 1,,2\n") == "m_values");
  CHECK(error_field(head + "m_values = 16\n") == "m_values");
  CHECK(error_field(head + "deactivation_sweep = 1.0\n") == "deactivation_sweep");
  CHECK(error_field(head + "sim.dims = 1,2\n") == "sim.dims");
  CHECK(error_field(head + "sim.dims = 0.01,0,0.01\n") == "sim.dims");
  CHECK(error_field(head + "sim.deactivation_ratio = 1.2\n") == "sim.deactivation_ratio");
  CHECK(error_field(head + "sim.channel = lossy\n") == "sim.channel");
  CHECK(error_field(head + "sim.self_interference = maybe\n") == "sim.self_interference");
  CHECK(error_field(head + "pair_count = 0\n") == "pair_count");
  CHECK(error_field("cycles = 2\n") == "experiment");
  ParseDefaults d;
  d.experiment = Experiment::viewport_eval;
  CHECK(error_field(head, d) == "experiment");
  try {
    parse_scenario(head + "just words\n");
    FAIL("expected an error");
  } catch (const netsim::ConfigError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("canonical config text round-trips") {
  for (auto e : {Experiment::viewport_eval, Experiment::network_eval, Experiment::parallel_pairs}) {
    ScenarioSpec s = preset_spec(Preset::desk, e);
    s.sim.seed = 0xFFFFFFFFFFFFULL;
    s.sim.tx_power_dBnW = 0.1 + 0.2;
    s.interarrival_s = 1.0 / 3.0;
    s.deactivation_sweep = {0.0, 0.1, 1.0 / 7.0};
    s.sim.self_interference = true;
    const std::string text = to_config_text(s);
    CHECK(parse_scenario(text) == s);
    CHECK(to_config_text(parse_scenario(text)) == text);
  }
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("quartiles") {
  const auto q = quartiles({4, 1, 3, 2, 5});
  CHECK(q.min == 1);
  CHECK(q.q1 == 2);
  CHECK(q.median == 3);
  CHECK(q.q3 == 4);
  CHECK(q.max == 5);
  CHECK(q.mean == 3);
  const auto e = quartiles({1, 2, 3, 4});
  CHECK(e.q1 == doctest::Approx(1.75));
  CHECK(e.median == doctest::Approx(2.5));
  CHECK(e.q3 == doctest::Approx(3.25));
  const auto one = quartiles({7});
  CHECK(one.min == 7);
  CHECK(one.q3 == 7);
  CHECK(quartiles({}).mean == 0);
}

TEST_CASE("report rows and csv") {
  Report r("demo");
  r.add({"b", 1, 0.0, 5, 1, "x", 2.0});
  r.add({"b", 1, 0.0, 5, 0, "x", 4.0});
  r.add({"a", 2, 0.3, 5, 0, "x", 1.0});
  r.summarize_replications({"x"});
  const auto* med = r.find("b", 1, 0.0, 5, "x_median");
  REQUIRE(med);
  CHECK(med->value == 3.0);
  CHECK(r.find("b", 1, 0.0, 5, "x") == nullptr);  // per-replication rows are not summaries
  r.sort();
  CHECK(r.rows().front().series == "a");
  const std::string csv = csv_of(r);
  CHECK(csv.rfind("experiment,series,m,deactivation,pairs,replication,metric,value\n", 0) == 0);
  CHECK(csv.find("demo,a,2,0.3000,5,0,x,1.000000\n") != std::string::npos);
  CHECK(csv.find("demo,b,1,0.0000,5,summary,x_mean,3.000000\n") != std::string::npos);
}

TEST_CASE("viewport evaluation") {
  const ScenarioSpec s = small(Experiment::viewport_eval);
  const Report r = eval_viewport_selection(s);
  for (int m : s.m_values) {
    const auto* opt = r.find("optimal", m, 0.0, s.pair_count, "excess_max");
    REQUIRE(opt);
    CHECK(opt->value == 0.0);
    for (const char* series : {"resolution", "distance", "random", "worst"}) {
      const auto* ex = r.find(series, m, 0.0, s.pair_count, "excess_min");
      REQUIRE(ex);
      CHECK(ex->value >= 0.0);
    }
    CHECK(r.find("worst", m, 0.0, s.pair_count, "excess_median")->value >=
          r.find("random", m, 0.0, s.pair_count, "excess_median")->value);
  }
  CHECK(csv_of(r) == csv_of(eval_viewport_selection(s)));
}

TEST_CASE("network evaluation") {
  const ScenarioSpec s = small(Experiment::network_eval);
  const Report r = eval_network_efficiency(s);
  for (double d : s.deactivation_sweep) {
    for (const auto& row : r.rows()) {
      if (row.metric == "success_ratio") {
        CHECK(row.value >= 0.0);
        CHECK(row.value <= 1.0);
      }
      if (row.metric == "retransmitter_pct") {
        CHECK(row.value >= 0.0);
        CHECK(row.value <= 100.0);
      }
    }
    REQUIRE(r.find("corona", 0, d, s.pair_count, "success_ratio_mean"));
    for (int m : s.m_values) REQUIRE(r.find("slr", m, d, s.pair_count, "retransmitter_pct_mean"));
  }
  CHECK(csv_of(r) == csv_of(eval_network_efficiency(s)));
}

TEST_CASE("parallel pairs evaluation") {
  const ScenarioSpec s = small(Experiment::parallel_pairs);
  const Report r = eval_parallel_pairs(s);
  for (int k = 1; k <= s.max_parallel_pairs; ++k) {
    const auto* slr = r.find("slr", 1, 0.0, k, "tx_per_node_mean");
    const auto* corona = r.find("corona", 0, 0.0, k, "tx_per_node_mean");
    REQUIRE(slr);
    REQUIRE(corona);
    CHECK(slr->value > 0.0);
    CHECK(slr->value <= k);
    CHECK(corona->value >= slr->value);
  }
}

TEST_CASE("run_scenario writes the report and manifest") {
  const fs::path dir = scratch_dir("run");
  const fs::path cfg = dir.string() + ".conf";
  {
    std::ofstream out(cfg);
    out << to_config_text(small(Experiment::viewport_eval));
  }
  RunOptions o;
  o.config_path = cfg.string();
  o.out_dir = dir.string();
  o.seed = 9;
  std::ostringstream err;
  REQUIRE(run_scenario(o, err) == 0);
  const std::string manifest = slurp(dir / "manifest.txt");
  CHECK(manifest.find("kind = viewport_eval") != std::string::npos);
  CHECK(manifest.find("seed = 9") != std::string::npos);
  CHECK(manifest.find("config_hash = fnv1a64:") != std::string::npos);
  CHECK(manifest.find("software_version = " + software_version()) != std::string::npos);
  const std::string first = slurp(dir / "report.csv");
  CHECK_FALSE(first.empty());
  REQUIRE(run_scenario(o, err) == 0);
  CHECK(slurp(dir / "report.csv") == first);
  CHECK(slurp(dir / "manifest.txt") == manifest);

  {
    std::ofstream out(cfg);
    out << "experiment = viewport_eval\ncycles = -1\n";
  }
  std::ostringstream bad;
  CHECK(run_scenario(o, bad) == 2);
  CHECK(bad.str().find("cycles") != std::string::npos);

  RunOptions snap;
  snap.out_dir = (dir / "snap").string();
  snap.snapshot = true;
  snap.defaults.experiment = Experiment::viewport_eval;
  REQUIRE(run_scenario(snap, err) == 0);
  CHECK(fs::exists(dir / "snap" / "snapshot.csv"));
  CHECK(slurp(dir / "snap" / "manifest.txt").find("addressed") != std::string::npos);
  fs::remove_all(dir);
  fs::remove(cfg);
}
