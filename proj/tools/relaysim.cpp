#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "relaysim/config.hpp"
#include "relaysim/csv.hpp"
#include "relaysim/sweep.hpp"
#include "relaysim/verify.hpp"

using namespace relaysim;

namespace {

struct Options {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string policy;
  std::optional<long> slots;
  int figure = 0;
  int jobs = 0;
  long draws = 10'000;
  bool serial = false;
};

int jobs_from_env(int flag) {
  if (flag > 0) return flag;
  if (const char *env = std::getenv("RELAYSIM_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j > 0) return j;
    } catch (const std::exception &) {
    }
    throw ConfigError("RELAYSIM_JOBS must be a positive integer");
  }
  return 0;
}

RunSpec load(const Options &o) {
  RunSpec spec;
  if (o.figure != 0)
    spec = figure_preset(o.figure);
  else if (!o.config.empty())
    spec = parse_config(o.config);
  if (!o.policy.empty()) {
    parse_variant(o.policy);
    spec.policies = {o.policy};
  }
  if (o.seed) spec.seed = *o.seed;
  if (o.slots) spec.slots = *o.slots;
  // Re-validate after the command-line overrides.
  return parse_config_text(serialize_config(spec));
}

void emit(const std::vector<SimResult> &results, const Options &o, const RunSpec &spec) {
  const std::string path = !o.out.empty() ? o.out : spec.output;
  if (path.empty() || path == "-")
    std::cout << to_csv(results);
  else
    write_csv(results, path);
}

int cmd_run(const Options &o) {
  const RunSpec spec = load(o);
  const auto configs = expand_sweep(spec.to_sweep());
  if (configs.size() != 1)
    throw ConfigError("config key 'policies': run expects a single configuration, got " +
                      std::to_string(configs.size()) + " (use sweep)");
  emit({run(configs.front())}, o, spec);
  return 0;
}

int cmd_sweep(const Options &o) {
  if (o.figure == 0 && o.config.empty())
    throw ConfigError("sweep needs --config or --figure");
  const RunSpec spec = load(o);
  emit(sweep(spec.to_sweep(), jobs_from_env(o.jobs)), o, spec);
  return 0;
}

int cmd_verify(const Options &o) {
  const std::uint64_t seed = o.seed.value_or(1);
  bool ok = true;
  for (const OracleReport &r : verify_all(o.draws, seed, !o.serial)) {
    std::printf("%-12s draws=%-6ld failures=%-4ld worst=%.3g  %s\n", r.name.c_str(), r.draws,
                r.failures, r.worst, r.passed() ? "PASS" : "FAIL");
    ok = ok && r.passed();
  }
  return ok ? 0 : 2;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Buffer-aided successive relaying simulator"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App *sub) {
    sub->add_option("--config", o.config, "JSON configuration file");
    sub->add_option("--out", o.out, "CSV output path ('-' for stdout)");
    sub->add_option("--seed", o.seed, "Base seed");
    sub->add_option("--policy", o.policy, "Policy name, overrides the config");
    sub->add_option("--slots", o.slots, "Slots per run, overrides the config");
  };
  CLI::App *run_cmd = app.add_subcommand("run", "Single simulation run");
  common(run_cmd);
  CLI::App *sweep_cmd = app.add_subcommand("sweep", "Parameter sweep or figure preset");
  common(sweep_cmd);
  sweep_cmd->add_option("--figure", o.figure, "Figure preset")->check(CLI::Range(2, 7));
  sweep_cmd->add_option("--jobs", o.jobs, "Worker threads (env RELAYSIM_JOBS)")
      ->check(CLI::PositiveNumber);
  CLI::App *verify_cmd = app.add_subcommand("verify", "Closed-form oracle suites");
  verify_cmd->add_option("--draws", o.draws, "Random draws per suite")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", o.seed, "Base seed");
  verify_cmd->add_flag("--serial", o.serial, "Use the single-threaded reference");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*run_cmd) return cmd_run(o);
    if (*sweep_cmd) return cmd_sweep(o);
    return cmd_verify(o);
  } catch (const ConfigError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "fault: " << e.what() << '\n';
    return 2;
  }
}
