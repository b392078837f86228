#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nonindiv/check.hpp"

namespace nonindiv::cli {

// Scenario files are JSON objects. Common keys:
//   "kind"   qset-suite | mss-sim | quasi-mss-sim | eprb | stats   (required)
//   "seed"   unsigned integer; required by the randomized kinds (qset-suite, eprb)
//   "out"    output directory (optional; --out wins, then "results")
// Kind-specific keys are listed in README.md. Physical parameters have no
// defaults; tolerances do and are echoed into the summary.

enum class Kind { QsetSuite, MssSim, QuasiMssSim, Eprb, Stats };
enum class Format { Csv, Jsonl };

const char* kind_name(Kind k) noexcept;
/// Throws ConfigError for anything other than "csv" or "jsonl".
Format parse_format(const std::string& s);

struct ScenarioConfig {
  Kind kind = Kind::Eprb;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  nlohmann::json params;  // the whole document
};

/// Parses and validates every kind-specific key. Throws ConfigError.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::filesystem::path& path);

struct RunOptions {
  std::optional<std::uint64_t> seed;  // overrides the config
  Format format = Format::Jsonl;
  unsigned threads = 0;  // 0: hardware concurrency; never affects results
};

struct Metric {
  std::string name;
  double value = 0.0;
};

struct Artifact {
  std::string filename;
  std::string content;
};

struct RunSummary {
  std::string kind;
  std::optional<std::uint64_t> seed;  // the seed actually used, if any
  CheckList checks;
  std::vector<Metric> metrics;
  double duration_s = 0.0;  // stdout only, never written to artifacts

  std::size_t passed() const noexcept;
  std::size_t failed() const noexcept;
  int exit_code() const noexcept { return failed() == 0 ? 0 : 1; }
};

struct RunResult {
  RunSummary summary;
  std::vector<Artifact> artifacts;  // data files; the summary file is added by emit
};

/// Seed precedence: options.seed, then the config. Throws ConfigError when
/// a randomized kind ends up without a seed. Does no I/O.
RunResult run(const ScenarioConfig& config, const RunOptions& options);

/// Summary file contents: a "run" record, one record per check, then one
/// per metric. Fields: record,name,pass,cases,failures,value,witness. The
/// run record carries the kind as name, passed/failed check counts as
/// cases/failures and the seed as witness.
std::string emit(const RunSummary& summary, Format format);
std::string summary_filename(Format format);

/// Writes the artifacts and the summary into dir (created if needed).
/// Throws IoError.
void write_outputs(const std::filesystem::path& dir, const RunResult& result, Format format);

/// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitIoError = 3;

/// Environment variable that overrides the config seed (--seed wins over it).
inline constexpr const char* kSeedEnv = "NONINDIV_SEED";

/// Parses a decimal unsigned 64-bit seed. Throws ConfigError.
std::uint64_t parse_seed(const std::string& text);

}  // namespace nonindiv::cli
