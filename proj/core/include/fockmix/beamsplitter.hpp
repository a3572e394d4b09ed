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
#include <numbers>
#include <utility>
#include <vector>

#include "fockmix/fock_state.hpp"

namespace fockmix {

/// Lossless beamsplitter U(theta, phi) = exp[theta (e^{i phi} a^dag b - e^{-i phi} a b^dag)].
///
/// The creation operators map as
///   a^dag -> cos(theta) c^dag - e^{-i phi} sin(theta) d^dag
///   b^dag -> e^{i phi} sin(theta) c^dag + cos(theta) d^dag
/// so phi = pi/2 gives the symmetric convention a_c = t a_a + i r a_b,
/// a_d = i r a_a + t a_b with t = cos(theta), r = sin(theta).
class BeamsplitterParams {
 public:
  static constexpr double kSymmetricPhase = std::numbers::pi / 2;

  /// theta must lie in [0, pi/2]; phi is any finite angle and is wrapped into
  /// [0, 2 pi). Throws InvalidArgument otherwise.
  explicit BeamsplitterParams(double theta, double phi = kSymmetricPhase);

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  /// Same mixing angle, phase advanced by pi: the inverse unitary.
  BeamsplitterParams inverse() const;

 private:
  double theta_;
  double phi_;
};

/// Real transmission and reflection magnitudes t = cos(theta), r = sin(theta).
/// The phase on reflection is applied by the evolution routines.
struct TransmissionReflection {
  Complex t;
  Complex r;
};

TransmissionReflection amplitudes(const BeamsplitterParams& params);

/// Reflection factors including phase: a^dag picks up `into_second` on its
/// d^dag component and b^dag picks up `into_first` on its c^dag component.
/// Both equal i r at phi = pi/2.
struct ReflectionPhases {
  Complex into_second;
  Complex into_first;
};

ReflectionPhases reflection_phases(const BeamsplitterParams& params);

/// (total + 1) x (total + 1) unitary restricted to the sector of fixed total
/// photon number. Rows and columns are indexed by the photon count k in the
/// first mode, i.e. the basis state |k, total - k>.
class SectorBlock {
 public:
  explicit SectorBlock(std::size_t total);

  std::size_t total() const { return total_; }
  std::size_t dim() const { return total_ + 1; }

  Complex& operator()(std::size_t out, std::size_t in) { return data_[in * dim() + out]; }
  Complex operator()(std::size_t out, std::size_t in) const { return data_[in * dim() + out]; }

  /// max_ij |(B^dag B - I)_ij|
  double unitarity_residual() const;

 private:
  std::size_t total_;
  std::vector<Complex> data_;  // column-major
};

/// U(theta, phi)|n>|m> = (t c^dag + rho_a d^dag)^n (rho_b c^dag + t d^dag)^m
/// |0,0> / sqrt(n! m!), whose binomial expansion is
///   sum_{p,q} C(n,p) C(m,q) t^{n-p+q} rho_a^p rho_b^{m-q}
///     sqrt((n-p+m-q)! (p+q)! / (n! m!)) |n-p+m-q, p+q>
/// with rho_a, rho_b the reflection factors above. The amplitudes are taken
/// from the (n+m)-photon sector block rather than summed term by term; the
/// expanded sum cancels badly once n + m passes a few dozen photons. Output
/// cutoffs default to n + m; smaller cutoffs throw CutoffExceeded.
TwoModeState apply_bs_fock_pair(std::size_t n, std::size_t m, const BeamsplitterParams& params);
TwoModeState apply_bs_fock_pair(std::size_t n, std::size_t m, const BeamsplitterParams& params,
                                std::size_t cutoff_first, std::size_t cutoff_second);

/// Same expansion returned as the column over the sector basis |k, n+m-k>.
std::vector<Complex> fock_pair_column(std::size_t n, std::size_t m,
                                      const BeamsplitterParams& params);

/// Sector block built up one photon at a time from the vacuum block. Cost is
/// cubic in the photon number.
SectorBlock sector_block(std::size_t total, const BeamsplitterParams& params);

/// Applies U(theta, phi) to an arbitrary truncated state, one number-conserving
/// sector at a time.
///
/// A sector with total photon number N only fits when N <= min(cutoffs). If
/// the input has weight in a sector that does not fit, the sector is dropped
/// and its weight is added to the output norm_deficit; for an exact input
/// (norm_deficit == 0) this throws CutoffExceeded instead.
TwoModeState apply_bs_general(const TwoModeState& state, const BeamsplitterParams& params);

/// Output coherent amplitudes for |alpha>|beta> in: (t alpha + rho_b beta,
/// rho_a alpha + t beta), i.e. (t alpha + i r beta, i r alpha + t beta) at
/// phi = pi/2.
std::pair<Complex, Complex> coherent_transform(Complex alpha, Complex beta,
                                               const BeamsplitterParams& params);

inline constexpr std::size_t kDefaultOracleLimit = 12;

/// Independent cross-check: exponentiates the sector-restricted generator by
/// a scaled Taylor series (truncation below 1e-13) followed by repeated
/// squaring. Throws OracleLimitExceeded for total > limit.
SectorBlock bs_matrix_exponential_oracle(std::size_t total, const BeamsplitterParams& params,
                                         std::size_t limit = kDefaultOracleLimit);

}  // namespace fockmix
