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

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>

#include "fockmix/fock_state.hpp"

namespace fockmix {

/// xoshiro256** (Blackman & Vigna) seeded through SplitMix64. Independent
/// streams are obtained with jump(), which advances the state by 2^128 draws.
class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256StarStar(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform double in [0, 1) built from the top 53 bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  void jump();

 private:
  std::array<std::uint64_t, 4> s_;
};

/// Plug-in estimates (or their standard errors) in the same layout as
/// StatsSummary.
struct MomentEstimates {
  struct PerMode {
    double mean = 0.0;
    double variance = 0.0;
    std::optional<double> mandel_q;
    std::optional<double> g2;
  };
  PerMode first;
  PerMode second;
  double mean_product = 0.0;
  std::optional<double> g2_cross;
};

/// Outcome of simulated photon-number-resolving detection on both ports.
///
/// Shots are drawn in chunks of `chunk_size`; chunk c uses the generator
/// seeded with `seed` and jumped c times. Counts therefore do not depend on
/// how many workers drew them.
///
/// Standard errors: sqrt(g^T S g / shots), where S is the sample covariance of
/// the per-shot features (N1, N1^2, N2, N2^2, N1 N2) and g the gradient of the
/// estimator with respect to their means (delta method). For the mean this is
/// the usual sqrt(var / shots).
struct SampleReport {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::map<BasisIndex, std::uint64_t> counts;
  MomentEstimates estimates;
  MomentEstimates std_errors;
  /// 1 / sum |amplitude|^2 applied to turn the truncated state into a distribution.
  double renormalization = 1.0;
  std::size_t chunk_size = 0;
};

inline constexpr std::size_t kSampleChunk = std::size_t{1} << 16;
inline constexpr double kMaxSamplingDeficit = 0.01;

/// Draws `shots` outcomes from |amp(n, m)|^2 / ||amp||^2 by inverse CDF over
/// the flattened grid. Throws InvalidArgument for zero shots and
/// TruncationTooLossy when norm_deficit >= kMaxSamplingDeficit.
SampleReport sample_counts(const TwoModeState& state, std::uint64_t shots, std::uint64_t seed,
                           unsigned workers = 1);

/// Estimates and delta-method errors from a table of counts.
void estimate_from_counts(SampleReport& report);

}  // namespace fockmix
