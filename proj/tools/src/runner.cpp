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

#include "fockmix/cli/runner.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <fmt/format.h>

#include "fockmix/beamsplitter.hpp"
#include "fockmix/log.hpp"
#include "fockmix/oracles.hpp"
#include "fockmix/sampler.hpp"
#include "fockmix/statistics.hpp"
#include "fockmix/version.hpp"

namespace fockmix::cli {

using nlohmann::json;

namespace {

// Closed-form values for both output modes.
struct OracleValues {
  double mean[2] = {0.0, 0.0};
  double variance[2] = {0.0, 0.0};
  std::optional<double> q[2];
  std::optional<double> g2[2];
  std::optional<double> g2_cross;
  std::optional<double> printed_q_first;
};

OracleValues closed_form(const ScenarioConfig& c) {
  const BeamsplitterParams bs(c.theta, c.phi);
  OracleValues o;
  const Mode modes[2] = {Mode::first, Mode::second};
  switch (c.input_kind) {
    case InputKind::fock_fock: {
      const oracles::FockFockParams p{c.n, c.m, bs};
      for (int i = 0; i < 2; ++i) {
        o.mean[i] = oracles::fock_mean(p, modes[i]);
        o.variance[i] = oracles::fock_variance(p);
        o.q[i] = oracles::fock_q(p, modes[i]);
        o.g2[i] = oracles::fock_g2(p, modes[i]);
      }
      break;
    }
    case InputKind::fock_coherent: {
      const oracles::HybridParams p{c.n, c.alpha, bs};
      for (int i = 0; i < 2; ++i) {
        o.mean[i] = oracles::hybrid_mean(p, modes[i]);
        o.variance[i] = oracles::hybrid_variance(p, modes[i]);
        o.q[i] = oracles::hybrid_q(p, modes[i]);
        o.g2[i] = oracles::hybrid_g2(p, modes[i]);
      }
      o.printed_q_first = oracles::printed::hybrid_q(p);
      break;
    }
    case InputKind::coherent_coherent: {
      const auto s = oracles::coherent_stats({c.alpha, c.beta, bs});
      for (int i = 0; i < 2; ++i) {
        const ModeStats& m = s.mode(modes[i]);
        o.mean[i] = m.mean;
        o.variance[i] = m.variance;
        o.q[i] = m.mandel_q;
        o.g2[i] = m.g2;
      }
      o.g2_cross = s.g2_cross;
      break;
    }
  }
  return o;
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json delta_json(const std::optional<double>& numeric, const std::optional<double>& oracle) {
  if (numeric && oracle) return *numeric - *oracle;
  return nullptr;
}

json mode_stats_json(const ModeStats& s) {
  return {{"mean", s.mean},
          {"second_moment", s.second_moment},
          {"variance", s.variance},
          {"mandel_q", optional_json(s.mandel_q)},
          {"g2", optional_json(s.g2)},
          {"mean_error_scale", s.mean_error_scale}};
}

json estimates_json(const MomentEstimates& e) {
  auto per_mode = [](const MomentEstimates::PerMode& m) {
    return json{{"mean", m.mean},
                {"variance", m.variance},
                {"mandel_q", optional_json(m.mandel_q)},
                {"g2", optional_json(m.g2)}};
  };
  return {{"first", per_mode(e.first)},
          {"second", per_mode(e.second)},
          {"mean_product", e.mean_product},
          {"g2_cross", optional_json(e.g2_cross)}};
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json config_json(const ScenarioConfig& c, const Cutoffs& cut) {
  json j = {{"input_kind", to_string(c.input_kind)}};
  switch (c.input_kind) {
    case InputKind::fock_fock:
      j["n"] = c.n;
      j["m"] = c.m;
      break;
    case InputKind::fock_coherent:
      j["n"] = c.n;
      j["alpha"] = complex_json(c.alpha);
      break;
    case InputKind::coherent_coherent:
      j["alpha"] = complex_json(c.alpha);
      j["beta"] = complex_json(c.beta);
      break;
  }
  j["theta"] = c.theta;
  j["phi"] = c.phi;
  j["cutoffs"] = json::array({cut.first, cut.second});
  j["cutoffs_auto"] = !c.cutoffs.has_value();
  json outputs = json::array();
  for (Output o : c.outputs) outputs.push_back(to_string(o));
  j["outputs"] = outputs;
  return j;
}

std::string cell(const std::optional<double>& v, const SweepOptions& options) {
  if (v) return fmt::format("{:.17g}", *v);
  return options.undefined_as_zero ? "0" : "";
}

std::string cell(double v) { return fmt::format("{:.17g}", v); }

}  // namespace

TwoModeState input_state(const ScenarioConfig& config) {
  const Cutoffs cut = resolve_cutoffs(config);
  switch (config.input_kind) {
    case InputKind::fock_fock:
      return fock_pair(config.n, config.m, cut.first, cut.second);
    case InputKind::fock_coherent:
      return product_state(fock_coefficients(config.n, cut.first),
                           coherent_amplitudes(config.alpha, cut.second));
    case InputKind::coherent_coherent:
      return product_state(coherent_amplitudes(config.alpha, cut.first),
                           coherent_amplitudes(config.beta, cut.second));
  }
  throw InvalidArgument("unknown input kind");
}

TwoModeState output_state(const ScenarioConfig& config) {
  return apply_bs_general(input_state(config), BeamsplitterParams(config.theta, config.phi));
}

json run_scenario(const ScenarioConfig& config) {
  const Cutoffs cut = resolve_cutoffs(config);
  logger().info("running {} scenario with cutoffs ({}, {})", to_string(config.input_kind),
                cut.first, cut.second);
  const TwoModeState out = output_state(config);
  const StatsSummary stats = summarize(out);

  json doc = {{"tool", "fockmix"}, {"version", std::string(kVersion)}};
  doc["config"] = config_json(config, cut);
  doc["norm_deficit"] = out.norm_deficit();

  if (config.wants(Output::stats)) {
    doc["stats"] = {{"first", mode_stats_json(stats.first)},
                    {"second", mode_stats_json(stats.second)},
                    {"mean_product", stats.mean_product},
                    {"g2_cross", optional_json(stats.g2_cross)}};
  }

  if (config.wants(Output::oracle)) {
    const OracleValues o = closed_form(config);
    const ModeStats* numeric[2] = {&stats.first, &stats.second};
    const char* names[2] = {"first", "second"};
    json oracle;
    for (int i = 0; i < 2; ++i) {
      oracle[names[i]] = {
          {"mean", {{"value", o.mean[i]}, {"delta", numeric[i]->mean - o.mean[i]}}},
          {"variance", {{"value", o.variance[i]}, {"delta", numeric[i]->variance - o.variance[i]}}},
          {"mandel_q",
           {{"value", optional_json(o.q[i])}, {"delta", delta_json(numeric[i]->mandel_q, o.q[i])}}},
          {"g2", {{"value", optional_json(o.g2[i])}, {"delta", delta_json(numeric[i]->g2, o.g2[i])}}}};
    }
    if (config.input_kind == InputKind::coherent_coherent) {
      oracle["g2_cross"] = {{"value", optional_json(o.g2_cross)},
                            {"delta", delta_json(stats.g2_cross, o.g2_cross)}};
    }
    if (config.input_kind == InputKind::fock_coherent) {
      oracle["first"]["mandel_q_printed"] = optional_json(o.printed_q_first);
    }
    doc["oracle"] = oracle;
  }

  if (config.wants(Output::state)) {
    json entries = json::array();
    for (std::size_t i = 0; i <= out.cutoff_first(); ++i) {
      for (std::size_t j = 0; j <= out.cutoff_second(); ++j) {
        const Complex a = out.amplitude(i, j);
        if (a == Complex{}) continue;
        entries.push_back({{"n_first", i}, {"n_second", j}, {"re", a.real()}, {"im", a.imag()}});
      }
    }
    doc["state"] = {{"cutoffs", json::array({out.cutoff_first(), out.cutoff_second()})},
                    {"norm_squared", out.norm_squared()},
                    {"amplitudes", entries}};
  }

  if (config.wants(Output::sample)) {
    const SampleReport report = sample_counts(out, config.shots, config.seed);
    json counts = json::array();
    for (const auto& [at, count] : report.counts) {
      counts.push_back({{"n_first", at.n_first}, {"n_second", at.n_second}, {"count", count}});
    }
    doc["sample"] = {
        {"shots", report.shots},
        {"seed", report.seed},
        {"prng", fmt::format("xoshiro256** seeded by SplitMix64; chunk k of {} shots uses "
                             "the generator advanced by k jumps of 2^128",
                             report.chunk_size)},
        {"renormalization", report.renormalization},
        {"counts", counts},
        {"estimates", estimates_json(report.estimates)},
        {"std_errors", estimates_json(report.std_errors)},
        {"std_error_method",
         "plug-in moments; delta method over (N1, N1^2, N2, N2^2, N1 N2) for variance, Q and g2"}};
  }
  return doc;
}

std::string sweep_csv(const SweepSpec& spec, const SweepOptions& options) {
  const bool hybrid = spec.base.input_kind == InputKind::fock_coherent;
  std::ostringstream csv;
  csv << "series_var,sweep_var,mean_c,mean_d,var_c,q_c,g2_c,g2_cross,q_c_oracle,g2_c_oracle";
  if (hybrid) csv << ",q_c_paper_verbatim";
  csv << ",norm_deficit\n";

  const std::vector<double> no_series = {0.0};
  const auto& series = spec.series_variable ? spec.series_values : no_series;
  for (double s : series) {
    for (double v : spec.values) {
      ScenarioConfig point = spec.base;
      if (spec.series_variable) assign(point, *spec.series_variable, s);
      assign(point, spec.sweep_variable, v);
      const TwoModeState out = output_state(point);
      const StatsSummary st = summarize(out);
      const OracleValues o = closed_form(point);
      csv << (spec.series_variable ? cell(s) : "") << ',' << cell(v) << ',' << cell(st.first.mean)
          << ',' << cell(st.second.mean) << ',' << cell(st.first.variance) << ','
          << cell(st.first.mandel_q, options) << ',' << cell(st.first.g2, options) << ','
          << cell(st.g2_cross, options) << ',' << cell(o.q[0], options) << ','
          << cell(o.g2[0], options);
      if (hybrid) csv << ',' << cell(o.printed_q_first, options);
      csv << ',' << cell(out.norm_deficit()) << '\n';
    }
  }
  return csv.str();
}

void run_sweep(const SweepSpec& spec, const std::filesystem::path& path,
               const SweepOptions& options) {
  write_text(path, sweep_csv(spec, options));
}

std::string read_text(const std::filesystem::path& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("error while reading " + path.string());
  return text;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("error while writing " + path.string());
}

}  // namespace fockmix::cli
