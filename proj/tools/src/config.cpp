// Copyright 2026 The fockmix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fockmix/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <regex>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace fockmix::cli {

using nlohmann::json;

namespace {

// Largest accepted photon number or cutoff. Dense grids grow quadratically.
constexpr std::size_t kMaxPhotons = 4096;

constexpr double kHalfPi = std::numbers::pi / 2;

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // The parser message carries the line and column.
    throw ConfigInvalid("", std::string("JSON syntax error: ") + e.what());
  }
}

std::size_t read_count(const json& value, const std::string& field) {
  if (!value.is_number_integer()) {
    throw ConfigInvalid(field, "expected a non-negative integer");
  }
  if (value.is_number_unsigned()) {
    const auto v = value.get<std::uint64_t>();
    if (v > kMaxPhotons) {
      throw ConfigInvalid(field, fmt::format("{} exceeds the limit of {}", v, kMaxPhotons));
    }
    return static_cast<std::size_t>(v);
  }
  if (value.get<std::int64_t>() < 0) throw ConfigInvalid(field, "must not be negative");
  return static_cast<std::size_t>(value.get<std::int64_t>());
}

std::uint64_t read_u64(const json& value, const std::string& field) {
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  if (value.is_number_integer() && value.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(value.get<std::int64_t>());
  }
  throw ConfigInvalid(field, "expected a non-negative 64-bit integer");
}

double read_real(const json& value, const std::string& field) {
  if (!value.is_number()) throw ConfigInvalid(field, "expected a number");
  const double v = value.get<double>();
  if (!std::isfinite(v)) throw ConfigInvalid(field, "must be finite");
  return v;
}

Complex read_complex(const json& value, const std::string& field) {
  if (value.is_number()) return {read_real(value, field), 0.0};
  if (value.is_array()) {
    if (value.size() != 2) throw ConfigInvalid(field, "expected [re, im]");
    return {read_real(value[0], field + "[0]"), read_real(value[1], field + "[1]")};
  }
  if (value.is_object()) {
    for (const auto& [key, _] : value.items()) {
      if (key != "re" && key != "im") throw ConfigInvalid(join(field, key), "unknown key");
    }
    const double re = value.contains("re") ? read_real(value["re"], field + ".re") : 0.0;
    const double im = value.contains("im") ? read_real(value["im"], field + ".im") : 0.0;
    return {re, im};
  }
  throw ConfigInvalid(field, "expected a number, [re, im] or {\"re\": .., \"im\": ..}");
}

double read_angle(const json& value, const std::string& field) {
  if (value.is_string()) return parse_angle(value.get<std::string>(), field);
  return read_real(value, field);
}

double read_theta(const json& value, const std::string& field) {
  const double theta = read_angle(value, field);
  if (theta < 0.0 || theta > kHalfPi) {
    throw ConfigInvalid(field, fmt::format("theta must lie in [0, pi/2], got {}", theta));
  }
  return theta;
}

InputKind read_kind(const json& value, const std::string& field) {
  if (value.is_string()) {
    const auto s = value.get<std::string>();
    for (InputKind k :
         {InputKind::fock_fock, InputKind::fock_coherent, InputKind::coherent_coherent}) {
      if (s == to_string(k)) return k;
    }
  }
  throw ConfigInvalid(field, "expected one of fock_fock, fock_coherent, coherent_coherent");
}

Cutoffs read_cutoffs(const json& value, const std::string& field) {
  if (value.is_number()) {
    const std::size_t c = read_count(value, field);
    return {c, c};
  }
  if (value.is_array()) {
    if (value.size() != 2) throw ConfigInvalid(field, "expected [first, second]");
    return {read_count(value[0], field + "[0]"), read_count(value[1], field + "[1]")};
  }
  if (value.is_object()) {
    for (const auto& [key, _] : value.items()) {
      if (key != "first" && key != "second") {
        throw ConfigInvalid(join(field, key), "unknown key");
      }
    }
    if (!value.contains("first") || !value.contains("second")) {
      throw ConfigInvalid(field, "needs both \"first\" and \"second\"");
    }
    return {read_count(value["first"], field + ".first"),
            read_count(value["second"], field + ".second")};
  }
  throw ConfigInvalid(field, "expected \"auto\", an integer, [first, second] or an object");
}

std::set<Output> read_outputs(const json& value, const std::string& field) {
  if (!value.is_array() || value.empty()) {
    throw ConfigInvalid(field, "expected a non-empty array of state, stats, oracle, sample");
  }
  std::set<Output> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string item = fmt::format("{}[{}]", field, i);
    if (!value[i].is_string()) throw ConfigInvalid(item, "expected a string");
    const auto s = value[i].get<std::string>();
    bool known = false;
    for (Output o : {Output::state, Output::stats, Output::oracle, Output::sample}) {
      if (s == to_string(o)) {
        if (!out.insert(o).second) throw ConfigInvalid(item, "duplicate entry \"" + s + "\"");
        known = true;
      }
    }
    if (!known) throw ConfigInvalid(item, "unknown output \"" + s + "\"");
  }
  return out;
}

struct KindFields {
  bool n;
  bool m;
  bool alpha;
  bool beta;
};

KindFields fields_for(InputKind kind) {
  switch (kind) {
    case InputKind::fock_fock: return {true, true, false, false};
    case InputKind::fock_coherent: return {true, false, true, false};
    case InputKind::coherent_coherent: return {false, false, true, true};
  }
  return {};
}

ScenarioConfig scenario_from_json(const json& doc, const std::string& prefix) {
  if (!doc.is_object()) throw ConfigInvalid(prefix, "expected a JSON object");
  static const std::set<std::string> known = {"input_kind", "n",       "m",       "alpha",
                                              "beta",       "theta",   "phi",     "cutoffs",
                                              "outputs",    "shots",   "seed"};
  for (const auto& [key, _] : doc.items()) {
    if (known.count(key) == 0) throw ConfigInvalid(join(prefix, key), "unknown key");
  }
  if (!doc.contains("input_kind")) {
    throw ConfigInvalid(join(prefix, "input_kind"), "required field is missing");
  }

  ScenarioConfig config;
  config.input_kind = read_kind(doc["input_kind"], join(prefix, "input_kind"));
  const KindFields want = fields_for(config.input_kind);
  const auto kind_name = std::string(to_string(config.input_kind));
  auto check = [&](const char* key, bool required) {
    const bool present = doc.contains(key);
    if (required && !present) {
      throw ConfigInvalid(join(prefix, key), "required for input_kind " + kind_name);
    }
    if (!required && present) {
      throw ConfigInvalid(join(prefix, key), "not allowed for input_kind " + kind_name);
    }
    return present;
  };
  if (check("n", want.n)) config.n = read_count(doc["n"], join(prefix, "n"));
  if (check("m", want.m)) config.m = read_count(doc["m"], join(prefix, "m"));
  if (check("alpha", want.alpha)) config.alpha = read_complex(doc["alpha"], join(prefix, "alpha"));
  if (check("beta", want.beta)) config.beta = read_complex(doc["beta"], join(prefix, "beta"));

  if (!doc.contains("theta")) throw ConfigInvalid(join(prefix, "theta"), "required field is missing");
  config.theta = read_theta(doc["theta"], join(prefix, "theta"));
  config.phi = doc.contains("phi") ? read_angle(doc["phi"], join(prefix, "phi")) : kHalfPi;

  if (doc.contains("cutoffs")) {
    const json& c = doc["cutoffs"];
    if (!(c.is_string() && c.get<std::string>() == "auto")) {
      config.cutoffs = read_cutoffs(c, join(prefix, "cutoffs"));
    }
  }
  config.outputs = doc.contains("outputs") ? read_outputs(doc["outputs"], join(prefix, "outputs"))
                                           : std::set<Output>{Output::stats, Output::oracle};
  if (doc.contains("shots")) {
    config.shots = read_u64(doc["shots"], join(prefix, "shots"));
    if (config.shots == 0) throw ConfigInvalid(join(prefix, "shots"), "must be at least 1");
  }
  if (doc.contains("seed")) config.seed = read_u64(doc["seed"], join(prefix, "seed"));
  return config;
}

SweepVariable read_variable(const json& value, const std::string& field) {
  if (value.is_string()) {
    const auto s = value.get<std::string>();
    for (SweepVariable v :
         {SweepVariable::n, SweepVariable::m, SweepVariable::alpha_modulus, SweepVariable::theta}) {
      if (s == to_string(v)) return v;
    }
  }
  throw ConfigInvalid(field, "expected one of n, m, alpha_modulus, theta");
}

std::vector<double> read_values(const json& value, SweepVariable variable,
                                const std::string& field) {
  std::vector<double> out;
  if (value.is_array()) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      const std::string item = fmt::format("{}[{}]", field, i);
      out.push_back(variable == SweepVariable::theta ? read_angle(value[i], item)
                                                     : read_real(value[i], item));
    }
  } else if (value.is_object()) {
    for (const auto& [key, _] : value.items()) {
      if (key != "start" && key != "step" && key != "count") {
        throw ConfigInvalid(join(field, key), "unknown key");
      }
    }
    if (!value.contains("step") || !value.contains("count")) {
      throw ConfigInvalid(field, "a range needs \"step\" and \"count\"");
    }
    const double start = value.contains("start") ? read_real(value["start"], field + ".start") : 0.0;
    const double step = read_real(value["step"], field + ".step");
    const std::size_t count = read_count(value["count"], field + ".count");
    // start + k * step, so grid points do not accumulate rounding.
    for (std::size_t k = 0; k < count; ++k) out.push_back(start + static_cast<double>(k) * step);
  } else {
    throw ConfigInvalid(field, "expected an array of values or {start, step, count}");
  }
  if (out.empty()) throw ConfigInvalid(field, "must not be empty");

  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::string item = fmt::format("{}[{}]", field, i);
    const double v = out[i];
    switch (variable) {
      case SweepVariable::n:
      case SweepVariable::m:
        if (v < 0 || v != std::floor(v) || v > static_cast<double>(kMaxPhotons)) {
          throw ConfigInvalid(item, fmt::format("photon numbers must be integers in [0, {}]",
                                                kMaxPhotons));
        }
        break;
      case SweepVariable::alpha_modulus:
        if (v < 0) throw ConfigInvalid(item, "modulus must not be negative");
        break;
      case SweepVariable::theta:
        if (v < 0 || v > kHalfPi) throw ConfigInvalid(item, "theta must lie in [0, pi/2]");
        break;
    }
  }
  return out;
}

// JSON value used to stand in for a swept field missing from the base.
json placeholder(SweepVariable variable, double value) {
  if (variable == SweepVariable::n || variable == SweepVariable::m) {
    return static_cast<std::uint64_t>(value);
  }
  return value;
}

}  // namespace

ConfigInvalid::ConfigInvalid(std::string field, const std::string& message)
    : Error(field.empty() ? message : "field \"" + field + "\": " + message),
      field_(std::move(field)) {}

std::string_view to_string(InputKind kind) {
  switch (kind) {
    case InputKind::fock_fock: return "fock_fock";
    case InputKind::fock_coherent: return "fock_coherent";
    case InputKind::coherent_coherent: return "coherent_coherent";
  }
  return "";
}

std::string_view to_string(Output output) {
  switch (output) {
    case Output::state: return "state";
    case Output::stats: return "stats";
    case Output::oracle: return "oracle";
    case Output::sample: return "sample";
  }
  return "";
}

std::string_view to_string(SweepVariable variable) {
  switch (variable) {
    case SweepVariable::n: return "n";
    case SweepVariable::m: return "m";
    case SweepVariable::alpha_modulus: return "alpha_modulus";
    case SweepVariable::theta: return "theta";
  }
  return "";
}

double parse_angle(std::string_view text, const std::string& field) {
  static const std::regex pattern(R"(^\s*(?:(\d+)\s*\*?\s*)?pi\s*(?:/\s*(\d+))?\s*$)");
  const std::string s(text);
  std::smatch match;
  if (!std::regex_match(s, match, pattern)) {
    throw ConfigInvalid(field, "angle string \"" + s + "\" is not of the form pi, pi/k or j*pi/k");
  }
  const double numerator = match[1].matched ? std::stod(match[1].str()) : 1.0;
  const double denominator = match[2].matched ? std::stod(match[2].str()) : 1.0;
  if (denominator == 0.0) throw ConfigInvalid(field, "angle denominator must not be zero");
  if (numerator == 1.0) return std::numbers::pi / denominator;
  return numerator * std::numbers::pi / denominator;
}

ScenarioConfig validate_config(std::string_view text) {
  return scenario_from_json(parse_document(text), "");
}

SweepSpec validate_sweep(std::string_view text) {
  json doc = parse_document(text);
  if (!doc.is_object()) throw ConfigInvalid("", "expected a JSON object");
  static const std::set<std::string> known = {"base", "sweep_variable", "values",
                                              "series_variable", "series_values"};
  for (const auto& [key, _] : doc.items()) {
    if (known.count(key) == 0) throw ConfigInvalid(key, "unknown key");
  }
  for (const char* key : {"base", "sweep_variable", "values"}) {
    if (!doc.contains(key)) throw ConfigInvalid(key, "required field is missing");
  }

  SweepSpec spec;
  spec.sweep_variable = read_variable(doc["sweep_variable"], "sweep_variable");
  spec.values = read_values(doc["values"], spec.sweep_variable, "values");
  if (doc.contains("series_variable") != doc.contains("series_values")) {
    throw ConfigInvalid(doc.contains("series_variable") ? "series_values" : "series_variable",
                        "series_variable and series_values go together");
  }
  if (doc.contains("series_variable")) {
    spec.series_variable = read_variable(doc["series_variable"], "series_variable");
    if (*spec.series_variable == spec.sweep_variable) {
      throw ConfigInvalid("series_variable", "must differ from sweep_variable");
    }
    spec.series_values = read_values(doc["series_values"], *spec.series_variable, "series_values");
  }

  // Swept fields may be left out of the base; fill in the first value so the
  // base validates, and so a swept field the input kind forbids is reported.
  json& base = doc["base"];
  if (!base.is_object()) throw ConfigInvalid("base", "expected a JSON object");
  auto fill = [&](SweepVariable variable, double first) {
    const std::string key =
        variable == SweepVariable::alpha_modulus ? "alpha" : std::string(to_string(variable));
    if (!base.contains(key)) base[key] = placeholder(variable, first);
  };
  fill(spec.sweep_variable, spec.values.front());
  if (spec.series_variable) fill(*spec.series_variable, spec.series_values.front());
  spec.base = scenario_from_json(base, "base");
  return spec;
}

std::size_t auto_coherent_cutoff(Complex alpha) {
  if (alpha == Complex{}) return 0;
  return coherent_cutoff(alpha, kDefaultTailTolerance * std::min(1.0, std::norm(alpha) * std::norm(alpha)));
}

Cutoffs resolve_cutoffs(const ScenarioConfig& config) {
  if (config.cutoffs) return *config.cutoffs;
  switch (config.input_kind) {
    case InputKind::fock_fock: {
      const std::size_t c = config.n + config.m;
      return {c, c};
    }
    case InputKind::fock_coherent: {
      const std::size_t c = config.n + auto_coherent_cutoff(config.alpha);
      return {c, c};
    }
    case InputKind::coherent_coherent: {
      const std::size_t c = auto_coherent_cutoff(config.alpha) + auto_coherent_cutoff(config.beta);
      return {c, c};
    }
  }
  return {};
}

void assign(ScenarioConfig& config, SweepVariable variable, double value) {
  switch (variable) {
    case SweepVariable::n: config.n = static_cast<std::size_t>(value); break;
    case SweepVariable::m: config.m = static_cast<std::size_t>(value); break;
    case SweepVariable::alpha_modulus:
      config.alpha = std::polar(value, config.alpha == Complex{} ? 0.0 : std::arg(config.alpha));
      break;
    case SweepVariable::theta: config.theta = value; break;
  }
}

SweepSpec figure_spec(int which) {
  SweepSpec spec;
  spec.base.theta = std::numbers::pi / 4;
  spec.base.phi = kHalfPi;
  spec.base.outputs = {Output::stats, Output::oracle};
  spec.series_variable = SweepVariable::n;
  spec.series_values = {0, 1, 2, 5, 10};
  switch (which) {
    case 2:
    case 3:
      spec.base.input_kind = InputKind::fock_fock;
      spec.sweep_variable = SweepVariable::m;
      for (int m = 0; m <= 30; ++m) spec.values.push_back(m);
      break;
    case 4:
    case 5:
      spec.base.input_kind = InputKind::fock_coherent;
      spec.sweep_variable = SweepVariable::alpha_modulus;
      // |alpha| in [0, 3] with step 0.05, generated as k * 0.05.
      for (int k = 0; k <= 60; ++k) spec.values.push_back(k * 0.05);
      break;
    default:
      throw ConfigInvalid("which", fmt::format("no built-in figure {}; choose 2, 3, 4 or 5", which));
  }
  return spec;
}

std::string schema_help() {
  return R"(Scenario document (JSON object):
  input_kind  "fock_fock" | "fock_coherent" | "coherent_coherent" (required)
  n           photons in the first input mode; fock_fock and fock_coherent only
  m           photons in the second input mode; fock_fock only
  alpha       coherent amplitude; fock_coherent (second mode) and
              coherent_coherent (first mode) only
  beta        coherent amplitude of the second mode; coherent_coherent only
              amplitudes: a number, [re, im] or {"re": x, "im": y}
  theta       mixing angle in [0, pi/2], radians or "pi/4", "pi/3", "pi/2",
              "j*pi/k" (required); transmission cos(theta)
  phi         beamsplitter phase, same forms as theta (default pi/2)
  cutoffs     "auto" (default), an integer for both modes, [first, second]
              or {"first": a, "second": b}. auto: n+m for fock_fock,
              n + K(alpha) for fock_coherent, K(alpha) + K(beta) for
              coherent_coherent, where K keeps the Poisson tail below
              1e-12 * min(1, |alpha|^4)
  outputs     subset of ["state", "stats", "oracle", "sample"]
              (default ["stats", "oracle"])
  shots       number of samples when "sample" is requested (default 100000)
  seed        unsigned 64-bit sampler seed (default 0)

Sweep document (JSON object):
  base             scenario document; swept fields may be omitted
  sweep_variable   "n" | "m" | "alpha_modulus" | "theta"
  values           array of values, or {"start": a, "step": s, "count": k}
                   giving a + i*s for i = 0..k-1
  series_variable  optional outer variable, same choices
  series_values    values for series_variable (required with it)

CSV columns: series_var, sweep_var, mean_c, mean_d, var_c, q_c, g2_c,
g2_cross, q_c_oracle, g2_c_oracle, q_c_paper_verbatim (fock_coherent only),
norm_deficit. Undefined values (zero mean) are empty cells.

Exit codes: 0 success, 2 config error, 3 numerical or cutoff error,
4 I/O error. FOCKMIX_LOG=trace|debug|info|warn|error|off sets log verbosity.
)";
}

}  // namespace fockmix::cli
