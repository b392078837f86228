#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nonindiv/cli/scenario.hpp"
#include "nonindiv/error.hpp"
#include "nonindiv/random.hpp"

using namespace nonindiv;
using namespace nonindiv::cli;
namespace fs = std::filesystem;

namespace {

const std::string kEprb = R"({"kind": "eprb", "seed": 7, "a": {"theta": 0, "phi": 0},
                               "b": {"theta": 0, "phi": 0}, "trials": 1000})";

const std::string kEprbAngle = R"({"kind": "eprb", "seed": 31, "a": {"theta": 0.3, "phi": 0.1},
                                    "b": {"theta": 1.2, "phi": 2.0}, "trials": 20000})";

double metric(const RunSummary& s, const std::string& name) {
  for (const auto& m : s.metrics) {
    if (m.name == name) return m.value;
  }
  FAIL("no metric " << name);
  return 0;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("nonindiv_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

int run_binary(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + (env.empty() ? "" : " ") + NONINDIV_CLI_PATH + " " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

fs::path write_file(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

}  // namespace

TEST_CASE("eprb same axis: correlation -1, exit 0") {
  const auto r = run(parse_config(kEprb), {});
  CHECK(metric(r.summary, "correlation") == -1.0);
  CHECK(r.summary.exit_code() == kExitPass);
  CHECK(r.summary.seed == std::uint64_t{7});
  REQUIRE(r.artifacts.size() == 1);
  CHECK(r.artifacts[0].filename == "outcomes.csv");
  CHECK(r.artifacts[0].content.rfind("trial,outcome_a,outcome_b\n0,", 0) == 0);
}

TEST_CASE("qset-suite with default universes passes") {
  const auto r = run(parse_config(R"({"kind": "qset-suite", "seed": 1, "random_universes": 50})"), {});
  CHECK(r.summary.failed() == 0);
  CHECK(r.summary.checks.size() == 11);
}

TEST_CASE("stats kind matches enumeration") {
  const auto r = run(parse_config(R"({"kind": "stats", "n_max": 6, "k_max": 6})"), {});
  CHECK(r.summary.exit_code() == 0);
  CHECK(r.summary.checks.at(0).cases == 42);
  CHECK(r.artifacts.at(0).content.find("\n2,2,4,3\n") != std::string::npos);
  CHECK(r.artifacts.at(0).content.find("\n3,2,8,4\n") != std::string::npos);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_config("not json"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"kind": "nope"})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"seed": 1})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"kind": "eprb", "seed": 7, "a": {"theta": 0, "phi": 0},
                                   "b": {"theta": 0, "phi": 0}})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"kind": "eprb", "a": {"theta": 0}, "b": {"theta": 0, "phi": 0}, "trials": 5})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"kind": "eprb", "a": {"theta": 0, "phi": 0}, "b": {"theta": 0, "phi": 0},
                                   "trials": 0})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"kind": "mss-sim", "bodies": []})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"kind": "stats", "n_max": 3})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"kind": "stats", "n_max": 3, "k_max": 2, "seed": -1})"), ConfigError);
  // seed missing for a randomized kind surfaces at run time, before any output
  const auto noseed = parse_config(R"({"kind": "eprb", "a": {"theta": 0, "phi": 0}, "b": {"theta": 0, "phi": 0},
                                       "trials": 5})");
  CHECK_THROWS_AS(run(noseed, {}), ConfigError);
  RunOptions o;
  o.seed = 3;
  CHECK_NOTHROW(run(noseed, o));
  CHECK_THROWS_AS(parse_seed("12x"), ConfigError);
  CHECK_THROWS_AS(parse_seed(""), ConfigError);
  CHECK(parse_seed("18446744073709551615") == ~std::uint64_t{0});
  CHECK_THROWS_AS(parse_format("xml"), ConfigError);
}

TEST_CASE("seed override changes results, same seed reproduces them") {
  const auto cfg = parse_config(kEprbAngle);
  RunOptions o;
  const auto base = run(cfg, o);
  o.seed = 31;
  CHECK(run(cfg, o).artifacts[0].content == base.artifacts[0].content);
  o.seed = 32;
  CHECK(run(cfg, o).artifacts[0].content != base.artifacts[0].content);
}

TEST_CASE("parallel and serial runs are byte-identical") {
  const auto cfg = parse_config(kEprbAngle);
  RunOptions o;
  o.threads = 1;
  const auto serial = run(cfg, o);
  for (unsigned t : {2u, 4u, 7u}) {
    o.threads = t;
    const auto par = run(cfg, o);
    REQUIRE(par.artifacts.size() == serial.artifacts.size());
    CHECK(par.artifacts[0].content == serial.artifacts[0].content);
    CHECK(emit(par.summary, Format::Jsonl) == emit(serial.summary, Format::Jsonl));
    CHECK(emit(par.summary, Format::Csv) == emit(serial.summary, Format::Csv));
  }
  // without the outcome file the aggregate comes from per-thread counts
  auto j = nlohmann::json::parse(kEprbAngle);
  j["write_outcomes"] = false;
  const auto cfg2 = parse_config(j.dump());
  o.threads = 1;
  const auto s1 = emit(run(cfg2, o).summary, Format::Jsonl);
  o.threads = 5;
  CHECK(emit(run(cfg2, o).summary, Format::Jsonl) == s1);
  CHECK(s1 == emit(serial.summary, Format::Jsonl));
}

TEST_CASE("summary formats: one record per check") {
  const auto r = run(parse_config(kEprb), {});
  const std::string jl = emit(r.summary, Format::Jsonl);
  std::size_t checks = 0, lines = 0;
  std::istringstream in(jl);
  for (std::string line; std::getline(in, line); ++lines) {
    const auto rec = nlohmann::json::parse(line);
    if (rec["record"] == "check") ++checks;
  }
  CHECK(checks == r.summary.checks.size());
  CHECK(lines == 1 + r.summary.checks.size() + r.summary.metrics.size());
  const std::string csv = emit(r.summary, Format::Csv);
  CHECK(csv.rfind("record,name,pass,cases,failures,value,witness\nrun,eprb,true,2,0,,7\n", 0) == 0);
}

TEST_CASE("binary: exit codes and artifacts") {
  const fs::path dir = scratch("bin");
  const fs::path good = write_file(dir / "eprb.json", kEprb);
  const fs::path bad = write_file(dir / "bad.json", R"({"kind": "eprb", "seed": 7, "a": {"theta": 0, "phi": 0},
                                                      "b": {"theta": 0, "phi": 0}})");
  CHECK(run_binary("run " + bad.string() + " --out " + (dir / "bad_out").string()) == kExitConfigError);
  CHECK_FALSE(fs::exists(dir / "bad_out"));
  CHECK(run_binary("run " + (dir / "missing.json").string() + " --out " + (dir / "m").string()) == kExitConfigError);
  CHECK_FALSE(fs::exists(dir / "m"));
  CHECK(run_binary("run " + good.string() + " --format xml --out " + (dir / "x").string()) == kExitConfigError);
  CHECK_FALSE(fs::exists(dir / "x"));
  CHECK(run_binary("run " + good.string() + " --seed abc --out " + (dir / "s").string()) == kExitConfigError);
  CHECK_FALSE(fs::exists(dir / "s"));

  CHECK(run_binary("run " + good.string() + " --out " + (dir / "a").string()) == kExitPass);
  CHECK(run_binary("run " + good.string() + " --out " + (dir / "b").string() + " --threads 3") == kExitPass);
  CHECK(slurp(dir / "a" / "outcomes.csv") == slurp(dir / "b" / "outcomes.csv"));
  CHECK(slurp(dir / "a" / "summary.jsonl") == slurp(dir / "b" / "summary.jsonl"));

  CHECK(run_binary("run " + good.string() + " --format csv --out " + (dir / "c").string()) == kExitPass);
  CHECK(fs::exists(dir / "c" / "summary.csv"));

  // environment seed overrides the file, --seed overrides the environment
  CHECK(run_binary("run " + good.string() + " --out " + (dir / "e").string(), "NONINDIV_SEED=99") == kExitPass);
  CHECK(slurp(dir / "e" / "outcomes.csv") != slurp(dir / "a" / "outcomes.csv"));
  CHECK(run_binary("run " + good.string() + " --seed 7 --out " + (dir / "f").string(), "NONINDIV_SEED=99") ==
        kExitPass);
  CHECK(slurp(dir / "f" / "outcomes.csv") == slurp(dir / "a" / "outcomes.csv"));
  CHECK(run_binary("run " + good.string() + " --out " + (dir / "g").string(), "NONINDIV_SEED=nope") ==
        kExitConfigError);

  // a failing check gives exit 1 with the summary still written
  const fs::path failing = write_file(dir / "fail.json", R"({"kind": "quasi-mss-sim",
      "ensemble": {"species": "x", "n": 2},
      "bodies": [{"mass": 1, "position": [-0.5, 0, 0], "velocity": [0, 0, 0]},
                 {"mass": 1, "position": [0.5, 0, 0], "velocity": [0, 0, 0]}],
      "force_law": {"name": "gravity", "gamma": 1}, "interval": [0, 2], "h": 0.001})");
  CHECK(run_binary("run " + failing.string() + " --out " + (dir / "h").string()) == kExitCheckFailure);
  CHECK(fs::exists(dir / "h" / "summary.jsonl"));
  fs::remove_all(dir);
}
