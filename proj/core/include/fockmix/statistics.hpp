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

#include <optional>
#include <vector>

#include "fockmix/fock_state.hpp"

namespace fockmix {

/// Means below this are treated as vacuum: Q and g2 are then undefined.
inline constexpr double kZeroMeanThreshold = 1e-12;

/// Photon-number statistics of one output mode.
///
/// mean_error_scale = norm_deficit * cutoff is the size of the mean shift the
/// truncation would cause if all lost mass sat at the cutoff. It indicates the
/// magnitude of the truncation error; it is not a rigorous bound, since lost
/// mass further out shifts the mean more. Undefined Q/g2 (zero mean) are empty
/// optionals.
struct ModeStats {
  double mean = 0.0;
  double second_moment = 0.0;
  double variance = 0.0;
  std::optional<double> mandel_q;
  std::optional<double> g2;
  std::vector<double> marginal;
  double mean_error_scale = 0.0;
};

struct StatsSummary {
  ModeStats first;
  ModeStats second;
  double mean_product = 0.0;  // <N_first N_second>
  std::optional<double> g2_cross;
  double norm_deficit = 0.0;

  const ModeStats& mode(Mode m) const { return m == Mode::first ? first : second; }
};

/// p(n) with the other mode traced out. Sums to 1 - norm_deficit up to rounding.
std::vector<double> marginal_distribution(const TwoModeState& state, Mode mode);

double mean_photon(const TwoModeState& state, Mode mode);
double second_moment(const TwoModeState& state, Mode mode);

/// <N^2> - <N>^2, clamped at zero.
double variance(const TwoModeState& state, Mode mode);

/// (variance - mean) / mean, or nullopt for (numerically) vacuum output.
std::optional<double> mandel_q(const TwoModeState& state, Mode mode);

/// (<N^2> - <N>) / <N>^2, or nullopt for (numerically) vacuum output.
std::optional<double> g2_zero(const TwoModeState& state, Mode mode);

/// <N_first N_second> / (<N_first><N_second>), nullopt if either mean vanishes.
std::optional<double> g2_cross(const TwoModeState& state);

/// Every quantity above in one pass.
StatsSummary summarize(const TwoModeState& state);

/// Moments of a photon-number distribution, shared with the sampler.
ModeStats stats_from_marginal(std::vector<double> marginal);

}  // namespace fockmix
