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
#include <optional>

#include "fockmix/beamsplitter.hpp"
#include "fockmix/fock_state.hpp"
#include "fockmix/statistics.hpp"

/// Closed-form output statistics for the three input families. These are the
/// reference values the numeric pipeline (construct -> evolve -> summarize)
/// is checked against.
///
/// Every Q / g2 function returns nullopt when the corresponding mean is below
/// kZeroMeanThreshold. Use undefined_as_zero() to apply the "vacuum is
/// coherent, Q = 0" plotting convention.
namespace fockmix::oracles {

/// |n>|m> input.
struct FockFockParams {
  std::size_t n = 0;
  std::size_t m = 0;
  BeamsplitterParams bs{std::numbers::pi / 4};
};

/// |n>|alpha> input.
struct HybridParams {
  std::size_t n = 0;
  Complex alpha;
  BeamsplitterParams bs{std::numbers::pi / 4};
};

/// |alpha>|beta> input.
struct CoherentCoherentParams {
  Complex alpha;
  Complex beta;
  BeamsplitterParams bs{std::numbers::pi / 4};
};

/// n|t|^2 + m|r|^2 for the first mode, n|r|^2 + m|t|^2 for the second.
double fock_mean(const FockFockParams& p, Mode mode);
/// |t|^2 |r|^2 (n + m + 2nm), identical for both modes.
double fock_variance(const FockFockParams& p);
std::optional<double> fock_q(const FockFockParams& p, Mode mode);
std::optional<double> fock_g2(const FockFockParams& p, Mode mode);

/// n|t|^2 + |r|^2|alpha|^2 (first), n|r|^2 + |t|^2|alpha|^2 (second).
double hybrid_mean(const HybridParams& p, Mode mode);
/// |r|^4|alpha|^2 + |t|^2|r|^2 (2n|alpha|^2 + n + |alpha|^2) for the first
/// mode; the second mode swaps t and r.
double hybrid_variance(const HybridParams& p, Mode mode);
/// variance / mean - 1. Zero for n = 0 at any alpha.
std::optional<double> hybrid_q(const HybridParams& p, Mode mode);
/// 1 + Q / mean.
std::optional<double> hybrid_g2(const HybridParams& p, Mode mode);

/// Balanced (theta = pi/4) |1>|alpha> closed forms, first mode:
/// Q = (2|a|^2 - 1) / (2 (1 + |a|^2)), g2 = 1 + (2|a|^2 - 1) / (1 + |a|^2)^2.
double single_photon_coherent_q(Complex alpha);
double single_photon_coherent_g2(Complex alpha);

/// Poissonian output: means |gamma_c|^2, |gamma_d|^2, variance = mean, Q = 0,
/// g2 = 1 (per mode and across modes) whenever the mean is non-zero. The
/// marginals are Poisson weights up to coherent_cutoff(gamma).
StatsSummary coherent_stats(const CoherentCoherentParams& p);

/// Hybrid Q / g2 as they are usually printed, with |alpha|^4 in place of
/// |alpha|^2 in the |r|^4 term. These disagree with hybrid_variance and do not
/// vanish for n = 0; they exist so the gap can be measured. First mode only.
namespace printed {

std::optional<double> hybrid_q(const HybridParams& p);
std::optional<double> hybrid_g2(const HybridParams& p);
/// (|a|^4 + 3|a|^2 + 1) / (2 (1 + |a|^2)) - 1
double single_photon_coherent_q(Complex alpha);
/// 1 + (|a|^4 + |a|^2 - 1) / (1 + |a|^2)^2
double single_photon_coherent_g2(Complex alpha);

}  // namespace printed

inline double undefined_as_zero(std::optional<double> value) { return value.value_or(0.0); }

}  // namespace fockmix::oracles
