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


#include "fockmix/statistics.hpp"

#include <cmath>
#include <utility>

#include "fockmix/log.hpp"

namespace fockmix {

std::vector<double> marginal_distribution(const TwoModeState& state, Mode mode) {
  const std::size_t c1 = state.cutoff_first();
  const std::size_t c2 = state.cutoff_second();
  std::vector<double> p(state.cutoff(mode) + 1, 0.0);
  for (std::size_t n = 0; n <= c1; ++n) {
    for (std::size_t m = 0; m <= c2; ++m) {
      const double w = std::norm(state.amplitude(n, m));
      p[mode == Mode::first ? n : m] += w;
    }
  }
  return p;
}

ModeStats stats_from_marginal(std::vector<double> marginal) {
  ModeStats s;
  // The factorial moment <N(N-1)> keeps Q and g2 accurate for dim states,
  // where <N^2> - <N> would cancel.
  double mean = 0.0;
  double factorial2 = 0.0;
  for (std::size_t n = 0; n < marginal.size(); ++n) {
    const double k = static_cast<double>(n);
    mean += k * marginal[n];
    factorial2 += k * (k - 1.0) * marginal[n];
  }
  s.mean = mean;
  s.second_moment = factorial2 + mean;
  double var = s.second_moment - mean * mean;
  if (var < 0.0) {
    logger().debug("clamping variance {:.3e} to zero", var);
    var = 0.0;
  }
  s.variance = var;
  if (mean >= kZeroMeanThreshold) {
    s.mandel_q = (factorial2 - mean * mean) / mean;
    s.g2 = factorial2 / (mean * mean);
  }
  s.marginal = std::move(marginal);
  return s;
}

double mean_photon(const TwoModeState& state, Mode mode) {
  return stats_from_marginal(marginal_distribution(state, mode)).mean;
}

double second_moment(const TwoModeState& state, Mode mode) {
  return stats_from_marginal(marginal_distribution(state, mode)).second_moment;
}

double variance(const TwoModeState& state, Mode mode) {
  return stats_from_marginal(marginal_distribution(state, mode)).variance;
}

std::optional<double> mandel_q(const TwoModeState& state, Mode mode) {
  return stats_from_marginal(marginal_distribution(state, mode)).mandel_q;
}

std::optional<double> g2_zero(const TwoModeState& state, Mode mode) {
  return stats_from_marginal(marginal_distribution(state, mode)).g2;
}

namespace {

double mean_product(const TwoModeState& state) {
  double sum = 0.0;
  for (std::size_t n = 1; n <= state.cutoff_first(); ++n) {
    for (std::size_t m = 1; m <= state.cutoff_second(); ++m) {
      sum += static_cast<double>(n) * static_cast<double>(m) * std::norm(state.amplitude(n, m));
    }
  }
  return sum;
}

std::optional<double> cross_ratio(double product, double mean_first, double mean_second) {
  if (mean_first < kZeroMeanThreshold || mean_second < kZeroMeanThreshold) return std::nullopt;
  return product / (mean_first * mean_second);
}

}  // namespace

std::optional<double> g2_cross(const TwoModeState& state) {
  return cross_ratio(mean_product(state), mean_photon(state, Mode::first),
                     mean_photon(state, Mode::second));
}

StatsSummary summarize(const TwoModeState& state) {
  StatsSummary out;
  out.first = stats_from_marginal(marginal_distribution(state, Mode::first));
  out.second = stats_from_marginal(marginal_distribution(state, Mode::second));
  out.norm_deficit = state.norm_deficit();
  out.first.mean_error_scale = state.norm_deficit() * static_cast<double>(state.cutoff_first());
  out.second.mean_error_scale = state.norm_deficit() * static_cast<double>(state.cutoff_second());
  out.mean_product = mean_product(state);
  out.g2_cross = cross_ratio(out.mean_product, out.first.mean, out.second.mean);
  return out;
}

}  // namespace fockmix
