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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fockmix/errors.hpp"
#include "fockmix/fock_state.hpp"

namespace fockmix::cli {

/// Schema violation in a scenario or sweep document. `field()` is the dotted
/// path of the offending key, empty for syntax errors.
class ConfigInvalid : public Error {
 public:
  ConfigInvalid(std::string field, const std::string& message);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Failure to read or write a file.
class IoError : public Error {
 public:
  using Error::Error;
};

enum class InputKind { fock_fock, fock_coherent, coherent_coherent };
enum class Output { state, stats, oracle, sample };

std::string_view to_string(InputKind kind);
std::string_view to_string(Output output);

struct Cutoffs {
  std::size_t first = 0;
  std::size_t second = 0;
};

inline constexpr std::uint64_t kDefaultShots = 100000;

struct ScenarioConfig {
  InputKind input_kind = InputKind::fock_fock;
  std::size_t n = 0;
  std::size_t m = 0;
  Complex alpha;
  Complex beta;
  double theta = 0.0;
  double phi = 0.0;
  std::optional<Cutoffs> cutoffs;  // empty means auto
  std::set<Output> outputs;
  std::uint64_t shots = kDefaultShots;
  std::uint64_t seed = 0;

  bool wants(Output o) const { return outputs.count(o) != 0; }
};

enum class SweepVariable { n, m, alpha_modulus, theta };

std::string_view to_string(SweepVariable variable);

struct SweepSpec {
  ScenarioConfig base;
  SweepVariable sweep_variable = SweepVariable::m;
  std::vector<double> values;
  std::optional<SweepVariable> series_variable;
  std::vector<double> series_values;
};

/// Parses a mixing angle given as radians or as "pi", "pi/k", "j*pi/k".
double parse_angle(std::string_view text, const std::string& field);

/// Parses and validates a scenario document.
ScenarioConfig validate_config(std::string_view text);

/// Parses and validates a sweep document.
SweepSpec validate_sweep(std::string_view text);

/// Smallest cutoff whose Poisson tail is below 1e-12 * min(1, |alpha|^4).
/// Scaling with the squared mean keeps g2 = <N(N-1)>/<N>^2 accurate for
/// weak amplitudes.
std::size_t auto_coherent_cutoff(Complex alpha);

/// Cutoffs actually used: explicit ones, or the automatic rule.
Cutoffs resolve_cutoffs(const ScenarioConfig& config);

/// Applies one sweep coordinate to a scenario.
void assign(ScenarioConfig& config, SweepVariable variable, double value);

/// Built-in figure sweeps (2 and 3: Fock pairs, 4 and 5: Fock plus coherent).
SweepSpec figure_spec(int which);

/// Schema reference printed by --help.
std::string schema_help();

}  // namespace fockmix::cli
