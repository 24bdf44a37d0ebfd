#include "relaysim/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace relaysim {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys{
    "policy", "policies", "mode", "K", "nu", "snr_db", "sigma_sr_db", "sigma_rr_db",
    "sigma_rd_db", "q_max", "c0", "delta", "slots", "warmup", "seed", "paired_channels",
    "source_power_factor", "ic_formula", "sinr_denominator", "phase_bits", "output"};

[[noreturn]] void fail(const std::string &key, const std::string &what) {
  throw ConfigError("config key '" + key + "': " + what);
}

double number(const json &v, const std::string &key) {
  if (!v.is_number()) fail(key, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(key, "must be finite");
  return x;
}

long integer(const json &v, const std::string &key) {
  if (!v.is_number_integer()) fail(key, "expected an integer");
  return v.get<long>();
}

std::vector<double> numbers(const json &v, const std::string &key) {
  std::vector<double> out;
  if (v.is_array()) {
    if (v.empty()) fail(key, "list must not be empty");
    for (const auto &x : v) out.push_back(number(x, key));
  } else {
    out.push_back(number(v, key));
  }
  return out;
}

double capacity(const json &v, const std::string &key) {
  if (v.is_string()) {
    if (v.get<std::string>() != "inf") fail(key, "expected a number or \"inf\"");
    return kInfiniteCapacity;
  }
  return number(v, key);
}

std::string text(const json &v, const std::string &key) {
  if (!v.is_string()) fail(key, "expected a string");
  return v.get<std::string>();
}

const char *name_of(IcFormula f) {
  return f == IcFormula::SignalModel ? "signal_model" : "as_printed";
}
const char *name_of(SinrDenominator d) {
  return d == SinrDenominator::ResidualAmplitude ? "residual_amplitude" : "one_minus_omega_sq";
}
const char *name_of(BufferMode m) { return m == BufferMode::Adaptive ? "adaptive" : "fixed"; }

void validate(const RunSpec &s) {
  if (s.policies.empty()) fail("policies", "at least one policy is required");
  for (const std::string &p : s.policies) {
    const PolicyVariant v = parse_variant(p);
    if (!supports(v.policy, s.mode))
      fail("policy", p + " does not support " + name_of(s.mode) + " mode");
    const bool pairs = v.policy == Policy::BaSprs || v.policy == Policy::UpperBound ||
                       v.policy == Policy::BaPars || v.policy == Policy::BaSor;
    for (int K : s.relays)
      if (pairs && K < 2) fail("K", p + " needs at least 2 relays");
  }
  for (int K : s.relays)
    if (K < 1) fail("K", "must be >= 1");
  if (s.antennas < 1) fail("nu", "must be >= 1");
  for (double q : s.q_max) {
    if (!(q > 0.0)) fail("q_max", "must be positive");
    if (s.mode == BufferMode::Fixed && q != kInfiniteCapacity && q != std::floor(q))
      fail("q_max", "must be a whole number of packets in fixed mode");
  }
  for (double c : s.c0)
    if (!(c > 0.0)) fail("c0", "must be positive");
  if (!(s.delta >= 0.0 && s.delta <= 1.0)) fail("delta", "must be in [0, 1]");
  if (s.warmup < 0) fail("warmup", "must be >= 0");
  if (s.slots <= s.warmup) fail("slots", "must exceed warmup");
  if (!(s.source_power_factor > 0.0)) fail("source_power_factor", "must be positive");
  if (s.phase_bits < 0 || s.phase_bits > 30) fail("phase_bits", "must be in [0, 30]");
}

} // namespace

PolicyVariant parse_variant(const std::string &name, double source_power_factor) {
  std::string base = name;
  double factor = source_power_factor;
  if (base.size() > 3 && base.compare(base.size() - 3, 3, "_2p") == 0) {
    base.resize(base.size() - 3);
    factor *= 2.0;
  }
  const auto p = parse_policy(base);
  if (!p) fail("policy", "unknown policy '" + name + "'");
  PolicyVariant v;
  v.policy = *p;
  v.source_power_factor = factor;
  if (base != name) v.label = name;
  return v;
}

RunSpec parse_config_text(const std::string &input) {
  json j;
  try {
    j = json::parse(input);
  } catch (const json::parse_error &e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto &[key, _] : j.items())
    if (!kKnownKeys.count(key)) fail(key, "unknown key");

  RunSpec s;
  if (j.contains("policy") && j.contains("policies"))
    fail("policies", "give either 'policy' or 'policies', not both");
  if (j.contains("policy")) {
    s.policies = {text(j["policy"], "policy")};
  } else if (j.contains("policies")) {
    const json &v = j["policies"];
    if (!v.is_array() || v.empty()) fail("policies", "expected a non-empty list of names");
    s.policies.clear();
    for (const auto &x : v) s.policies.push_back(text(x, "policies"));
  } else {
    throw ConfigError("config key 'policy': required");
  }
  for (const std::string &p : s.policies) parse_variant(p);

  if (j.contains("mode")) {
    const std::string m = text(j["mode"], "mode");
    if (m == "adaptive")
      s.mode = BufferMode::Adaptive;
    else if (m == "fixed")
      s.mode = BufferMode::Fixed;
    else
      fail("mode", "expected \"adaptive\" or \"fixed\"");
  }
  if (j.contains("K")) {
    const json &v = j["K"];
    s.relays.clear();
    if (v.is_array()) {
      if (v.empty()) fail("K", "list must not be empty");
      for (const auto &x : v) s.relays.push_back(static_cast<int>(integer(x, "K")));
    } else {
      s.relays.push_back(static_cast<int>(integer(v, "K")));
    }
  }
  if (j.contains("nu")) s.antennas = static_cast<int>(integer(j["nu"], "nu"));
  if (j.contains("snr_db")) s.snr_db = numbers(j["snr_db"], "snr_db");
  if (j.contains("sigma_sr_db")) s.sigma_sr_db = number(j["sigma_sr_db"], "sigma_sr_db");
  if (j.contains("sigma_rr_db")) s.sigma_rr_db = numbers(j["sigma_rr_db"], "sigma_rr_db");
  if (j.contains("sigma_rd_db")) s.sigma_rd_db = number(j["sigma_rd_db"], "sigma_rd_db");
  if (j.contains("q_max")) {
    const json &v = j["q_max"];
    s.q_max.clear();
    if (v.is_array()) {
      if (v.empty()) fail("q_max", "list must not be empty");
      for (const auto &x : v) s.q_max.push_back(capacity(x, "q_max"));
    } else {
      s.q_max.push_back(capacity(v, "q_max"));
    }
  }
  if (j.contains("c0")) s.c0 = numbers(j["c0"], "c0");
  if (j.contains("delta")) s.delta = number(j["delta"], "delta");
  if (j.contains("slots")) s.slots = integer(j["slots"], "slots");
  if (j.contains("warmup")) s.warmup = integer(j["warmup"], "warmup");
  if (j.contains("seed")) {
    const json &v = j["seed"];
    if (!v.is_number_unsigned()) fail("seed", "expected a non-negative integer");
    s.seed = v.get<std::uint64_t>();
  }
  if (j.contains("paired_channels")) {
    if (!j["paired_channels"].is_boolean()) fail("paired_channels", "expected true or false");
    s.paired_channels = j["paired_channels"].get<bool>();
  }
  if (j.contains("source_power_factor"))
    s.source_power_factor = number(j["source_power_factor"], "source_power_factor");
  if (j.contains("ic_formula")) {
    const std::string f = text(j["ic_formula"], "ic_formula");
    if (f == "signal_model")
      s.ic_formula = IcFormula::SignalModel;
    else if (f == "as_printed")
      s.ic_formula = IcFormula::AsPrinted;
    else
      fail("ic_formula", "expected \"signal_model\" or \"as_printed\"");
  }
  if (j.contains("sinr_denominator")) {
    const std::string d = text(j["sinr_denominator"], "sinr_denominator");
    if (d == "residual_amplitude")
      s.sinr_denominator = SinrDenominator::ResidualAmplitude;
    else if (d == "one_minus_omega_sq")
      s.sinr_denominator = SinrDenominator::OneMinusOmegaSq;
    else
      fail("sinr_denominator", "expected \"residual_amplitude\" or \"one_minus_omega_sq\"");
  }
  if (j.contains("phase_bits")) s.phase_bits = static_cast<int>(integer(j["phase_bits"], "phase_bits"));
  if (j.contains("output")) s.output = text(j["output"], "output");

  validate(s);
  return s;
}

RunSpec parse_config(const std::filesystem::path &path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("config file not found or unreadable: " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

std::string serialize_config(const RunSpec &s) {
  json j;
  j["policies"] = s.policies;
  j["mode"] = name_of(s.mode);
  j["K"] = s.relays;
  j["nu"] = s.antennas;
  j["snr_db"] = s.snr_db;
  j["sigma_sr_db"] = s.sigma_sr_db;
  j["sigma_rr_db"] = s.sigma_rr_db;
  j["sigma_rd_db"] = s.sigma_rd_db;
  json q = json::array();
  for (double v : s.q_max) {
    if (v == kInfiniteCapacity)
      q.push_back("inf");
    else
      q.push_back(v);
  }
  j["q_max"] = q;
  j["c0"] = s.c0;
  j["delta"] = s.delta;
  j["slots"] = s.slots;
  j["warmup"] = s.warmup;
  j["seed"] = s.seed;
  j["paired_channels"] = s.paired_channels;
  j["source_power_factor"] = s.source_power_factor;
  j["ic_formula"] = name_of(s.ic_formula);
  j["sinr_denominator"] = name_of(s.sinr_denominator);
  j["phase_bits"] = s.phase_bits;
  if (!s.output.empty()) j["output"] = s.output;
  return j.dump(2);
}

SweepSpec RunSpec::to_sweep() const {
  SweepSpec sw;
  SimConfig &b = sw.base;
  b.net.num_antennas = antennas;
  b.mode = mode;
  b.slots = slots;
  b.warmup = warmup;
  b.seed = seed;
  b.paired_channels = paired_channels;
  b.policy_cfg.delta = delta;
  b.policy_cfg.ic_formula = ic_formula;
  b.policy_cfg.sinr_denominator = sinr_denominator;
  if (phase_bits > 0) b.policy_cfg.quantizer = QuantizerConfig{phase_bits};
  sw.sigma_sr_db = sigma_sr_db;
  sw.sigma_rd_db = sigma_rd_db;
  sw.snr_db = snr_db;
  sw.sigma_rr_db = sigma_rr_db;
  sw.relays = relays;
  sw.q_max = q_max;
  sw.c0 = c0;
  for (const std::string &p : policies) sw.policies.push_back(parse_variant(p, source_power_factor));
  return sw;
}

RunSpec figure_preset(int figure) {
  const std::vector<double> snr_axis{0, 5, 10, 15, 20, 25, 30};
  const std::vector<std::string> adaptive{"upper_bound",    "ba_sprs", "sfd_mmrs_ideal",
                                          "sfd_mmrs_nonideal", "hd_brs",  "hd_hrs",
                                          "hd_mlrs"};
  const std::vector<std::string> fixed{"ba_pars",           "ba_pars_2p", "ba_sor",
                                       "sfd_mmrs_ideal",    "sfd_mmrs_nonideal", "hd_brs",
                                       "hd_hrs",            "hd_mlrs"};
  RunSpec s;
  s.antennas = 2;
  switch (figure) {
  case 2:
    s.policies = adaptive;
    s.relays = {2};
    s.snr_db = snr_axis;
    s.sigma_rr_db = {-3.0, 0.0, 3.0};
    break;
  case 3:
    s.policies = adaptive;
    s.relays = {2, 3, 4, 5, 6, 7, 8};
    s.sigma_rr_db = {0.0, 3.0};
    break;
  case 4:
    s.policies = adaptive;
    s.relays = {3};
    s.q_max = {5, 10, 25, 50, 100, 200, 500, 1000, 5000, kInfiniteCapacity};
    break;
  case 5:
    s.mode = BufferMode::Fixed;
    s.policies = fixed;
    s.relays = {3};
    s.snr_db = snr_axis;
    break;
  case 6:
    s.mode = BufferMode::Fixed;
    s.policies = fixed;
    s.relays = {3};
    s.q_max = {10};
    s.c0 = {1.5, 2.5};
    s.snr_db = snr_axis;
    break;
  case 7:
    s.mode = BufferMode::Fixed;
    s.policies = {"ba_pars"};
    s.relays = {3};
    s.q_max = {2, 4, 6, 8, 10, 20, kInfiniteCapacity};
    s.snr_db = snr_axis;
    break;
  default:
    throw ConfigError("config key 'figure': no preset for figure " + std::to_string(figure));
  }
  s.output = "figure" + std::to_string(figure) + ".csv";
  return s;
}

} // namespace relaysim
