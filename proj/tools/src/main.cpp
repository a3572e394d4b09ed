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

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fockmix/cli/config.hpp"
#include "fockmix/cli/runner.hpp"
#include "fockmix/errors.hpp"
#include "fockmix/log.hpp"
#include "fockmix/version.hpp"

namespace fs = std::filesystem;
using namespace fockmix;
using namespace fockmix::cli;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("error while writing to stdout");
  } else {
    write_text(out_path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fockmix: two-mode beamsplitter simulator for Fock and coherent inputs"};
  app.footer(schema_help());
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string spec_path;
  bool undefined_as_zero = false;
  std::optional<std::uint64_t> shots;
  std::optional<std::uint64_t> seed;
  std::vector<int> which;

  auto* run = app.add_subcommand("run", "Evolve one scenario and print the result document (JSON)");
  run->add_option("config", config_path, "Scenario JSON file, or - for stdin")->required();
  run->add_option("-o,--out", out_path, "Write the result here instead of stdout");
  run->footer(schema_help());

  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and write CSV");
  sweep->add_option("-s,--spec", spec_path, "Sweep JSON file, or - for stdin")->required();
  sweep->add_option("-o,--out", out_path, "CSV output path")->required();
  sweep->add_flag("--undefined-as-zero", undefined_as_zero,
                  "Write 0 instead of an empty cell for undefined Q and g2");
  sweep->footer(schema_help());

  auto* sample = app.add_subcommand("sample", "Sample photon counts at both outputs (JSON)");
  sample->add_option("config", config_path, "Scenario JSON file, or - for stdin")->required();
  sample->add_option("--shots", shots, "Number of shots (overrides the config)")
      ->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "64-bit seed (overrides the config)");
  sample->add_option("-o,--out", out_path, "Write the result here instead of stdout");
  sample->footer(schema_help());

  auto* figures = app.add_subcommand("figures", "Write the built-in figure sweeps as CSV");
  figures->add_option("-w,--which", which, "Figure numbers among 2, 3, 4, 5 (default: all)")
      ->check(CLI::IsMember({2, 3, 4, 5}));
  figures->add_option("-o,--out", out_path, "Output directory")->required();
  figures->add_flag("--undefined-as-zero", undefined_as_zero,
                    "Write 0 instead of an empty cell for undefined Q and g2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (run->parsed()) {
      const ScenarioConfig config = validate_config(read_text(config_path));
      emit(run_scenario(config).dump(2) + "\n", out_path);
    } else if (sweep->parsed()) {
      const SweepSpec spec = validate_sweep(read_text(spec_path));
      run_sweep(spec, out_path, {undefined_as_zero});
    } else if (sample->parsed()) {
      ScenarioConfig config = validate_config(read_text(config_path));
      config.outputs.insert(Output::sample);
      if (shots) config.shots = *shots;
      if (seed) config.seed = *seed;
      emit(run_scenario(config).dump(2) + "\n", out_path);
    } else if (figures->parsed()) {
      if (which.empty()) which = {2, 3, 4, 5};
      std::error_code ec;
      fs::create_directories(out_path, ec);
      if (ec) throw IoError("cannot create directory " + out_path + ": " + ec.message());
      for (int w : which) {
        const fs::path file = fs::path(out_path) / fmt::format("figure{}.csv", w);
        run_sweep(figure_spec(w), file, {undefined_as_zero});
        logger().info("wrote {}", file.string());
      }
    }
  } catch (const ConfigInvalid& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InvalidArgument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}
