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

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "fockmix/cli/config.hpp"
#include "fockmix/fock_state.hpp"

namespace fockmix::cli {

/// Input product state for a scenario on its resolved cutoffs.
TwoModeState input_state(const ScenarioConfig& config);

/// Output state after the beamsplitter.
TwoModeState output_state(const ScenarioConfig& config);

/// Runs one scenario and returns the result document. Undefined statistics
/// are null; oracle deltas are numeric minus closed form.
nlohmann::json run_scenario(const ScenarioConfig& config);

struct SweepOptions {
  bool undefined_as_zero = false;
};

/// CSV text for a sweep, series values outermost, rows in spec order.
std::string sweep_csv(const SweepSpec& spec, const SweepOptions& options = {});

/// Writes sweep_csv to `path`; throws IoError on failure.
void run_sweep(const SweepSpec& spec, const std::filesystem::path& path,
               const SweepOptions& options = {});

/// Reads a whole file; throws IoError on failure. "-" reads stdin.
std::string read_text(const std::filesystem::path& path);

/// Writes a whole file in binary mode; throws IoError on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace fockmix::cli
