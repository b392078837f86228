#include "nonindiv/cli/scenario.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "nonindiv/error.hpp"
#include "nonindiv/format.hpp"
#include "nonindiv/mech/io.hpp"
#include "nonindiv/mech/theorems.hpp"
#include "nonindiv/qmss/io.hpp"
#include "nonindiv/qset/axiom_suite.hpp"
#include "nonindiv/quantum/counting.hpp"
#include "nonindiv/quantum/eprb.hpp"

namespace nonindiv::cli {

using nlohmann::json;

const char* kind_name(Kind k) noexcept {
  switch (k) {
    case Kind::QsetSuite: return "qset-suite";
    case Kind::MssSim: return "mss-sim";
    case Kind::QuasiMssSim: return "quasi-mss-sim";
    case Kind::Eprb: return "eprb";
    case Kind::Stats: return "stats";
  }
  return "?";
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "jsonl") return Format::Jsonl;
  throw ConfigError("unknown format '" + s + "' (expected csv or jsonl)");
}

std::uint64_t parse_seed(const std::string& text) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) throw ConfigError("seed must be an unsigned integer: " + text);
  return v;
}

namespace {

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError(std::string("missing key '") + key + "'");
  return *it;
}

std::uint64_t as_count(const json& v, const char* key) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d >= 0 && d <= 9007199254740992.0 && std::floor(d) == d) return static_cast<std::uint64_t>(d);
  }
  throw ConfigError(std::string("'") + key + "' must be a non-negative integer");
}

double as_real(const json& v, const char* key) {
  if (!v.is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(std::string("'") + key + "' must be finite");
  return d;
}

double optional_positive(const json& j, const char* key, double fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  const double d = as_real(*it, key);
  if (!(d > 0)) throw ConfigError(std::string("'") + key + "' must be positive");
  return d;
}

bool optional_bool(const json& j, const char* key, bool fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) throw ConfigError(std::string("'") + key + "' must be true or false");
  return it->get<bool>();
}

quantum::Direction direction(const json& j, const char* key) {
  const json& d = require(j, key);
  if (!d.is_object()) throw ConfigError(std::string("'") + key + "' must be {\"theta\": .., \"phi\": ..}");
  return quantum::Direction::spherical(as_real(require(d, "theta"), "theta"), as_real(require(d, "phi"), "phi"));
}

struct QsetParams {
  std::size_t random_universes;
  bool exhaustive;
};
struct MssParams {
  mech::SimulationSpec spec;
  double tol;
};
struct QmssParams {
  qmss::GravitySpec spec;
  double tol;
  double individuation_eps;
  bool expect_singularity;
};
struct EprbParams {
  quantum::Direction a, b;
  std::uint64_t trials;
  bool write_outcomes;
};
struct StatsParams {
  std::uint64_t n_max, k_max;
};

constexpr std::uint64_t kMaxTrials = 100'000'000;
constexpr std::uint64_t kOracleBudget = 1'000'000;  // largest k^n enumerated

QsetParams qset_params(const json& j) {
  return {static_cast<std::size_t>(j.contains("random_universes") ? as_count(j["random_universes"], "random_universes")
                                                                   : 1000),
          optional_bool(j, "exhaustive", true)};
}

MssParams mss_params(const json& j) {
  return {mech::simulation_spec_from_json(j), optional_positive(j, "tol", mech::kDefaultAxiomTol)};
}

QmssParams qmss_params(const json& j) {
  return {qmss::gravity_spec_from_json(j), optional_positive(j, "tol", mech::kDefaultAxiomTol),
          optional_positive(j, "individuation_eps", 1e-9), optional_bool(j, "expect_singularity", false)};
}

EprbParams eprb_params(const json& j) {
  EprbParams p{direction(j, "a"), direction(j, "b"), as_count(require(j, "trials"), "trials"),
               optional_bool(j, "write_outcomes", true)};
  if (p.trials == 0 || p.trials > kMaxTrials) throw ConfigError("'trials' must be in [1, 1e8]");
  return p;
}

StatsParams stats_params(const json& j) {
  StatsParams p{as_count(require(j, "n_max"), "n_max"), as_count(require(j, "k_max"), "k_max")};
  if (p.k_max == 0) throw ConfigError("'k_max' must be at least 1");
  if (p.n_max > 64 || p.k_max > 1024) throw ConfigError("stats table limited to n_max <= 64, k_max <= 1024");
  return p;
}

bool randomized(Kind k) { return k == Kind::QsetSuite || k == Kind::Eprb; }

// ---------------------------------------------------------------------------

CheckRecord single(std::string name, bool ok, double metric, const std::string& witness = {}) {
  CheckRecord c(std::move(name));
  c.record(ok, witness);
  c.metric = metric;
  return c;
}

void add_report(RunSummary& s, const mech::ValidationReport& rep) {
  for (const auto& e : rep.entries) {
    std::string w;
    if (e.witness) {
      for (std::size_t i = 0; i < e.witness->particles.size(); ++i) w += (i ? " " : "") + e.witness->particles[i];
      w += " @ t=" + fmt_real(e.witness->t);
    }
    s.checks.push_back(single(e.axiom, e.pass, e.max_residual, w));
  }
}

void run_qset(const QsetParams& p, std::uint64_t seed, RunResult& r) {
  qset::AxiomSuiteOptions o;
  o.seed = seed;
  o.random_universes = p.random_universes;
  o.exhaustive = p.exhaustive;
  r.summary.checks = qset::run_axiom_suite(o);
  r.summary.metrics.push_back({"random_universes", static_cast<double>(p.random_universes)});
}

void run_mss(const MssParams& p, RunResult& r) {
  const mech::MSSSystem sys = mech::simulate(p.spec);
  const auto rep = mech::validate(sys, p.tol);
  add_report(r.summary, rep);
  r.summary.metrics.push_back({"tol", p.tol});
  r.summary.metrics.push_back({"max_residual", rep.max_residual()});
  r.summary.metrics.push_back({"momentum_drift", mech::momentum_drift(sys)});
  r.summary.metrics.push_back({"angular_momentum_drift", mech::angular_momentum_drift(sys)});
  std::ostringstream traj;
  mech::write_trajectory_csv(traj, sys);
  r.artifacts.push_back({"trajectory.csv", traj.str()});
}

void run_qmss(const QmssParams& p, RunResult& r) {
  auto& s = r.summary;
  s.metrics.push_back({"tol", p.tol});
  s.metrics.push_back({"individuation_eps", p.individuation_eps});
  if (p.spec.bodies.size() == 2) {
    const double d0 = norm(p.spec.bodies[1].position - p.spec.bodies[0].position);
    s.metrics.push_back({"free_fall_time",
                         qmss::free_fall_time(d0, p.spec.gamma, p.spec.bodies[0].mass, p.spec.bodies[1].mass)});
  }
  try {
    const qmss::QMSSSystem sys = qmss::simulate_gravity(p.spec);
    s.checks.push_back(single("singularity", !p.expect_singularity, 0.0,
                              p.expect_singularity ? "run finished without a singularity" : ""));
    const auto rep = qmss::validate_q(sys, p.tol);
    add_report(s, rep);
    const auto grid = sys.sample_grid();
    const auto ind = qmss::individuation_report(sys, grid, p.individuation_eps);
    std::size_t worst = sys.particles().size();
    for (const auto& snap : ind.snapshots) worst = std::min(worst, snap.classes.size());
    s.checks.push_back(single("individuation", ind.fully_individuated(), static_cast<double>(worst)));
    s.metrics.push_back({"max_residual", rep.max_residual()});
    std::ostringstream traj, cls;
    mech::write_trajectory_csv(traj, sys.as_mss());
    qmss::write_individuation_csv(cls, ind);
    r.artifacts.push_back({"trajectory.csv", traj.str()});
    r.artifacts.push_back({"individuation.csv", cls.str()});
  } catch (const SingularityError& e) {
    s.checks.push_back(single("singularity", p.expect_singularity, e.time(),
                              std::string("slots ") + std::to_string(e.first()) + "," + std::to_string(e.second()) +
                                  " at t=" + fmt_real(e.time())));
    s.metrics.push_back({"singularity_time", e.time()});
  }
}

void run_eprb(const EprbParams& p, std::uint64_t seed, unsigned threads, RunResult& r) {
  auto& s = r.summary;
  const double expected = -(p.a.x * p.b.x + p.a.y * p.b.y + p.a.z * p.b.z);
  quantum::EprbResult res;
  if (p.write_outcomes) {
    const auto outs = quantum::eprb_outcomes(p.a, p.b, p.trials, seed, threads);
    quantum::EprbCounts c;
    std::string csv = "trial,outcome_a,outcome_b\n";
    csv.reserve(csv.size() + outs.size() * 16);
    for (std::size_t i = 0; i < outs.size(); ++i) {
      c.add(outs[i].first, outs[i].second);
      csv += std::to_string(i) + ',' + std::to_string(outs[i].first) + ',' + std::to_string(outs[i].second) + '\n';
    }
    res = quantum::summarize(c);
    r.artifacts.push_back({"outcomes.csv", std::move(csv)});
  } else {
    res = quantum::eprb_statistics(p.a, p.b, p.trials, seed, threads);
  }
  const double dev = std::abs(res.correlation - expected);
  // 1e-12 absorbs rounding in -a.b when the standard error is exactly zero
  s.checks.push_back(single("correlation_within_3se", dev <= 3 * res.standard_error + 1e-12, dev,
                            "estimate " + fmt_real(res.correlation) + " vs " + fmt_real(expected)));
  s.checks.push_back(single("counts_sum", res.counts.total() == p.trials, static_cast<double>(res.counts.total())));
  s.metrics.push_back({"trials", static_cast<double>(p.trials)});
  s.metrics.push_back({"count_pp", static_cast<double>(res.counts.pp)});
  s.metrics.push_back({"count_pm", static_cast<double>(res.counts.pm)});
  s.metrics.push_back({"count_mp", static_cast<double>(res.counts.mp)});
  s.metrics.push_back({"count_mm", static_cast<double>(res.counts.mm)});
  s.metrics.push_back({"correlation", res.correlation});
  s.metrics.push_back({"standard_error", res.standard_error});
  s.metrics.push_back({"expected_correlation", expected});
}

// Labelled maps and occupation vectors by walking every map {0..n-1} -> {0..k-1}.
std::pair<std::uint64_t, std::uint64_t> enumerate(unsigned n, unsigned k) {
  std::vector<unsigned> assign(n, 0), counts(k);
  std::uint64_t labelled = 0, occupancy = 0;
  while (true) {
    ++labelled;
    // the map is the canonical representative of its occupancy class when sorted
    bool sorted = true;
    for (unsigned i = 1; i < n; ++i) sorted = sorted && assign[i - 1] <= assign[i];
    if (sorted) ++occupancy;
    unsigned i = 0;
    while (i < n && ++assign[i] == k) assign[i++] = 0;
    if (i == n) break;
  }
  return {labelled, occupancy};
}

void run_stats(const StatsParams& p, RunResult& r) {
  using quantum::Statistics;
  CheckRecord oracle("enumeration_oracle");
  std::string csv = "n,k,individuals,non_individuals\n";
  std::uint64_t largest_checked = 0;
  for (std::uint64_t n = 0; n <= p.n_max; ++n) {
    for (std::uint64_t k = 1; k <= p.k_max; ++k) {
      std::string ind, non;
      std::optional<std::uint64_t> vi, vn;
      try {
        vi = quantum::count_configurations(n, k, Statistics::Individuals);
        ind = std::to_string(*vi);
      } catch (const Overflow&) {
        ind = "overflow";
      }
      try {
        vn = quantum::count_configurations(n, k, Statistics::NonIndividuals);
        non = std::to_string(*vn);
      } catch (const Overflow&) {
        non = "overflow";
      }
      csv += std::to_string(n) + ',' + std::to_string(k) + ',' + ind + ',' + non + '\n';
      if (vi && *vi <= kOracleBudget) {
        const auto [lab, occ] = enumerate(static_cast<unsigned>(n), static_cast<unsigned>(k));
        oracle.check(lab == *vi && vn && occ == *vn, [&] {
          return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " oracle " + std::to_string(lab) + "/" +
                 std::to_string(occ);
        });
        largest_checked = std::max(largest_checked, *vi);
      }
    }
  }
  oracle.metric = static_cast<double>(largest_checked);
  r.summary.checks.push_back(oracle);
  r.artifacts.push_back({"counts.csv", std::move(csv)});
}

}  // namespace

std::size_t RunSummary::passed() const noexcept {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass();
  return n;
}

std::size_t RunSummary::failed() const noexcept { return checks.size() - passed(); }

ScenarioConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  ScenarioConfig c;
  const json& kind = require(j, "kind");
  if (!kind.is_string()) throw ConfigError("'kind' must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "qset-suite") c.kind = Kind::QsetSuite;
  else if (k == "mss-sim") c.kind = Kind::MssSim;
  else if (k == "quasi-mss-sim") c.kind = Kind::QuasiMssSim;
  else if (k == "eprb") c.kind = Kind::Eprb;
  else if (k == "stats") c.kind = Kind::Stats;
  else throw ConfigError("unknown kind '" + k + "'");
  if (j.contains("seed")) c.seed = as_count(j["seed"], "seed");
  if (j.contains("out")) {
    if (!j["out"].is_string()) throw ConfigError("'out' must be a string");
    c.out = j["out"].get<std::string>();
  }
  c.params = std::move(j);
  // validate the kind-specific block now so a bad file never gets to run
  switch (c.kind) {
    case Kind::QsetSuite: qset_params(c.params); break;
    case Kind::MssSim: mss_params(c.params); break;
    case Kind::QuasiMssSim: qmss_params(c.params); break;
    case Kind::Eprb: eprb_params(c.params); break;
    case Kind::Stats: stats_params(c.params); break;
  }
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

RunResult run(const ScenarioConfig& config, const RunOptions& options) {
  RunResult r;
  r.summary.kind = kind_name(config.kind);
  const auto seed = options.seed ? options.seed : config.seed;
  if (randomized(config.kind) && !seed) throw ConfigError(std::string("kind ") + r.summary.kind + " needs a seed");
  if (randomized(config.kind)) r.summary.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (config.kind) {
      case Kind::QsetSuite: run_qset(qset_params(config.params), *seed, r); break;
      case Kind::MssSim: run_mss(mss_params(config.params), r); break;
      case Kind::QuasiMssSim: run_qmss(qmss_params(config.params), r); break;
      case Kind::Eprb: run_eprb(eprb_params(config.params), *seed, options.threads, r); break;
      case Kind::Stats: run_stats(stats_params(config.params), r); break;
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    // e.g. a simulation step that went non-finite: a failed check, not a config problem
    r.artifacts.clear();
    r.summary.checks.push_back(single("completed", false, 0.0, e.what()));
  }
  r.summary.duration_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string summary_filename(Format format) { return format == Format::Csv ? "summary.csv" : "summary.jsonl"; }

std::string emit(const RunSummary& s, Format format) {
  const std::string seed = s.seed ? std::to_string(*s.seed) : "";
  std::string out;
  if (format == Format::Jsonl) {
    JsonLine head;
    head.str("record", "run").str("name", s.kind).boolean("pass", s.failed() == 0);
    head.integer("cases", static_cast<long long>(s.passed())).integer("failures", static_cast<long long>(s.failed()));
    head.str("witness", seed);
    out += head.done();
    for (const auto& c : s.checks) {
      out += JsonLine()
                 .str("record", "check")
                 .str("name", c.name)
                 .boolean("pass", c.pass())
                 .integer("cases", static_cast<long long>(c.cases))
                 .integer("failures", static_cast<long long>(c.failures))
                 .real("value", c.metric)
                 .str("witness", c.witness)
                 .done();
    }
    for (const auto& m : s.metrics) out += JsonLine().str("record", "metric").str("name", m.name).real("value", m.value).done();
    return out;
  }
  out = "record,name,pass,cases,failures,value,witness\n";
  out += "run," + csv_field(s.kind) + ',' + (s.failed() == 0 ? "true" : "false") + ',' + std::to_string(s.passed()) +
         ',' + std::to_string(s.failed()) + ",," + seed + '\n';
  for (const auto& c : s.checks) {
    out += "check," + csv_field(c.name) + ',' + (c.pass() ? "true" : "false") + ',' + std::to_string(c.cases) + ',' +
           std::to_string(c.failures) + ',' + fmt_real(c.metric) + ',' + csv_field(c.witness) + '\n';
  }
  for (const auto& m : s.metrics) out += "metric," + csv_field(m.name) + ",,,," + fmt_real(m.value) + ",\n";
  return out;
}

void write_outputs(const std::filesystem::path& dir, const RunResult& result, Format format) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  auto put = [&](const std::string& name, const std::string& content) {
    const auto path = dir / name;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.close();
    if (!f) throw IoError("cannot write " + path.string());
  };
  for (const auto& a : result.artifacts) put(a.filename, a.content);
  put(summary_filename(format), emit(result.summary, format));
}

}  // namespace nonindiv::cli
