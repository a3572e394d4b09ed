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

#include <compare>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fockmix {

using Complex = std::complex<double>;

/// Output/input port selector. `first` is mode a (input) or c (output),
/// `second` is mode b or d.
enum class Mode { first, second };

/// Label of the product basis state |n_first>|n_second>.
struct BasisIndex {
  std::size_t n_first = 0;
  std::size_t n_second = 0;

  auto operator<=>(const BasisIndex&) const = default;
};

/// Amplitudes of a single-mode state over |0>..|cutoff>, together with the
/// probability mass that the truncation discarded.
struct SingleModeCoefficients {
  std::vector<Complex> coefficients;
  double norm_deficit = 0.0;

  std::size_t cutoff() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
};

/// Truncated pure state of two bosonic modes.
///
/// Amplitudes are stored densely, row-major in the first mode: the entry for
/// |n>|m> lives at n * (cutoff_second + 1) + m. The state is immutable once
/// built. `norm_deficit` is the probability mass that was cut off when the
/// state was constructed; amplitudes are never renormalized to hide it.
class TwoModeState {
 public:
  /// Takes ownership of a (cutoff_first + 1) x (cutoff_second + 1) grid.
  /// Throws InvalidArgument on a size mismatch, a non-finite amplitude or a
  /// negative deficit.
  TwoModeState(std::size_t cutoff_first, std::size_t cutoff_second,
               std::vector<Complex> amplitudes, double norm_deficit = 0.0);

  std::size_t cutoff_first() const { return cutoff_first_; }
  std::size_t cutoff_second() const { return cutoff_second_; }
  std::size_t cutoff(Mode mode) const {
    return mode == Mode::first ? cutoff_first_ : cutoff_second_;
  }
  double norm_deficit() const { return norm_deficit_; }

  std::size_t index(std::size_t n_first, std::size_t n_second) const {
    return n_first * (cutoff_second_ + 1) + n_second;
  }

  /// Amplitude of |n_first>|n_second>; zero outside the grid.
  Complex amplitude(std::size_t n_first, std::size_t n_second) const;
  Complex amplitude(BasisIndex at) const { return amplitude(at.n_first, at.n_second); }

  std::span<const Complex> amplitudes() const { return amplitudes_; }

  /// Sum of |amplitude|^2 over the grid.
  double norm_squared() const;

 private:
  std::size_t cutoff_first_;
  std::size_t cutoff_second_;
  std::vector<Complex> amplitudes_;
  double norm_deficit_;
};

/// |n>|m> on a grid with the given cutoffs. Throws CutoffExceeded when n or m
/// does not fit.
TwoModeState fock_pair(std::size_t n, std::size_t m, std::size_t cutoff_first,
                       std::size_t cutoff_second);

/// Single-mode Fock state |n> padded with zeros to `cutoff`.
SingleModeCoefficients fock_coefficients(std::size_t n, std::size_t cutoff);

/// Coherent-state expansion e^{-|alpha|^2/2} alpha^n / sqrt(n!) for n <= cutoff.
///
/// Coefficients come from the recurrence c(n+1) = c(n) alpha / sqrt(n+1), so
/// no factorial is ever formed. The result is not renormalized; the Poisson
/// tail above the cutoff is summed directly and reported as norm_deficit.
SingleModeCoefficients coherent_amplitudes(Complex alpha, std::size_t cutoff);

/// Poisson probability mass above `cutoff` for mean photon number `mean`,
/// summed term by term (no 1 - sum cancellation).
double poisson_tail(double mean, std::size_t cutoff);

inline constexpr double kDefaultTailTolerance = 1e-12;

/// Smallest cutoff whose Poisson tail for |alpha|^2 is below `tail_tolerance`.
std::size_t coherent_cutoff(Complex alpha, double tail_tolerance = kDefaultTailTolerance);

/// Tensor product first (x) second. Deficits combine as 1 - (1 - d1)(1 - d2).
TwoModeState product_state(const SingleModeCoefficients& first,
                           const SingleModeCoefficients& second);

/// <a|b>. Throws CutoffMismatch unless both grids have the same cutoffs.
Complex inner_product(const TwoModeState& a, const TwoModeState& b);

/// |<a|b>|^2 without renormalizing either argument.
double fidelity(const TwoModeState& a, const TwoModeState& b);

}  // namespace fockmix
