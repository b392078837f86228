#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "nonindiv/cli/scenario.hpp"
#include "nonindiv/error.hpp"
#include "nonindiv/format.hpp"

namespace cli = nonindiv::cli;

int main(int argc, char** argv) {
  CLI::App app{"Quasi-set, MSS mechanics and quantum scenario runner"};
  app.require_subcommand(1);
  auto* run = app.add_subcommand("run", "Run a scenario file");
  std::string config_path, out_dir, format = "jsonl";
  std::optional<std::string> seed_text;
  unsigned threads = 0;
  run->add_option("config", config_path, "Scenario file (JSON)")->required();
  run->add_option("--seed", seed_text, "Master seed; overrides $NONINDIV_SEED and the file");
  run->add_option("--out", out_dir, "Output directory (default: the file's \"out\", else ./results)");
  run->add_option("--format", format, "Summary format")->check(CLI::IsMember({"csv", "jsonl"}));
  run->add_option("--threads", threads, "Worker threads, 0 = all cores; results do not depend on it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitConfigError;
  }

  cli::RunResult result;
  std::filesystem::path dir;
  cli::Format fmt{};
  try {
    const cli::ScenarioConfig config = cli::load_config(config_path);
    cli::RunOptions opt;
    opt.format = fmt = cli::parse_format(format);
    opt.threads = threads;
    if (seed_text) {
      opt.seed = cli::parse_seed(*seed_text);
    } else if (const char* env = std::getenv(cli::kSeedEnv); env && *env) {
      opt.seed = cli::parse_seed(env);
    }
    dir = !out_dir.empty() ? out_dir : config.out.value_or("results");
    result = cli::run(config, opt);
  } catch (const nonindiv::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return cli::kExitConfigError;
  } catch (const nonindiv::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return cli::kExitConfigError;
  }

  try {
    cli::write_outputs(dir, result, fmt);
  } catch (const nonindiv::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return cli::kExitIoError;
  }

  const auto& s = result.summary;
  for (const auto& c : s.checks) {
    std::printf("%-4s %-32s cases=%llu value=%s%s%s\n", c.pass() ? "ok" : "FAIL", c.name.c_str(),
                static_cast<unsigned long long>(c.cases), nonindiv::fmt_real(c.metric).c_str(),
                c.witness.empty() || c.pass() ? "" : "  witness: ", c.pass() ? "" : c.witness.c_str());
  }
  for (const auto& m : s.metrics) std::printf("     %-32s %s\n", m.name.c_str(), nonindiv::fmt_real(m.value).c_str());
  std::printf("%s: %zu passed, %zu failed, %.3f s -> %s\n", s.kind.c_str(), s.passed(), s.failed(), s.duration_s,
              dir.string().c_str());
  return s.exit_code();
}
