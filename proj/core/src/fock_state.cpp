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


#include "fockmix/fock_state.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "fockmix/errors.hpp"

namespace fockmix {

namespace {

// Poisson weights p(0..) for `mean`, generated in the log domain so that large
// means do not underflow e^{-mean}. Generation stops once past the peak and
// below `floor`.
std::vector<double> poisson_weights(double mean, std::size_t at_least, double floor) {
  std::vector<double> weights;
  if (mean == 0.0) {
    weights.assign(at_least + 1, 0.0);
    weights[0] = 1.0;
    return weights;
  }
  const double log_mean = std::log(mean);
  double log_p = -mean;
  for (std::size_t n = 0;; ++n) {
    const double p = std::exp(log_p);
    weights.push_back(p);
    if (n >= at_least && static_cast<double>(n) > mean && p < floor) break;
    log_p += log_mean - std::log(static_cast<double>(n + 1));
  }
  return weights;
}

}  // namespace

TwoModeState::TwoModeState(std::size_t cutoff_first, std::size_t cutoff_second,
                           std::vector<Complex> amplitudes, double norm_deficit)
    : cutoff_first_(cutoff_first),
      cutoff_second_(cutoff_second),
      amplitudes_(std::move(amplitudes)),
      norm_deficit_(norm_deficit) {
  if (amplitudes_.size() != (cutoff_first_ + 1) * (cutoff_second_ + 1)) {
    throw InvalidArgument("amplitude grid has " + std::to_string(amplitudes_.size()) +
                          " entries, expected (" + std::to_string(cutoff_first_) + "+1)x(" +
                          std::to_string(cutoff_second_) + "+1)");
  }
  for (const Complex& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw InvalidArgument("non-finite amplitude in two-mode state");
    }
  }
  if (!(norm_deficit_ >= 0.0) || !std::isfinite(norm_deficit_)) {
    throw InvalidArgument("norm deficit must be a finite non-negative number");
  }
}

Complex TwoModeState::amplitude(std::size_t n_first, std::size_t n_second) const {
  if (n_first > cutoff_first_ || n_second > cutoff_second_) return {};
  return amplitudes_[index(n_first, n_second)];
}

double TwoModeState::norm_squared() const {
  double sum = 0.0;
  for (const Complex& a : amplitudes_) sum += std::norm(a);
  return sum;
}

TwoModeState fock_pair(std::size_t n, std::size_t m, std::size_t cutoff_first,
                       std::size_t cutoff_second) {
  if (n > cutoff_first || m > cutoff_second) {
    throw CutoffExceeded("fock_pair(" + std::to_string(n) + ", " + std::to_string(m) +
                         ") does not fit cutoffs (" + std::to_string(cutoff_first) + ", " +
                         std::to_string(cutoff_second) + ")");
  }
  std::vector<Complex> amps((cutoff_first + 1) * (cutoff_second + 1));
  amps[n * (cutoff_second + 1) + m] = 1.0;
  return TwoModeState(cutoff_first, cutoff_second, std::move(amps), 0.0);
}

SingleModeCoefficients fock_coefficients(std::size_t n, std::size_t cutoff) {
  if (n > cutoff) {
    throw CutoffExceeded("Fock state |" + std::to_string(n) + "> exceeds cutoff " +
                         std::to_string(cutoff));
  }
  SingleModeCoefficients out;
  out.coefficients.assign(cutoff + 1, Complex{});
  out.coefficients[n] = 1.0;
  return out;
}

SingleModeCoefficients coherent_amplitudes(Complex alpha, std::size_t cutoff) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw InvalidArgument("coherent amplitude must be finite");
  }
  SingleModeCoefficients out;
  out.coefficients.assign(cutoff + 1, Complex{});
  const double modulus = std::abs(alpha);
  if (modulus == 0.0) {
    out.coefficients[0] = 1.0;
    return out;
  }

  // e^{-|alpha|^2/2} underflows for very bright states; walk the log-magnitude
  // until the coefficient is representable, then switch to the plain
  // multiplicative recurrence.
  constexpr double kLogSmallest = -700.0;
  const double log_modulus = std::log(modulus);
  const double arg = std::arg(alpha);
  double log_mag = -0.5 * modulus * modulus;
  bool started = false;
  Complex c;
  for (std::size_t n = 0; n <= cutoff; ++n) {
    if (started) {
      c *= alpha / std::sqrt(static_cast<double>(n));
    } else if (log_mag > kLogSmallest) {
      c = std::polar(std::exp(log_mag), static_cast<double>(n) * arg);
      started = true;
    } else {
      log_mag += log_modulus - 0.5 * std::log(static_cast<double>(n + 1));
      continue;
    }
    out.coefficients[n] = c;
  }
  out.norm_deficit = poisson_tail(modulus * modulus, cutoff);
  return out;
}

double poisson_tail(double mean, std::size_t cutoff) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw InvalidArgument("Poisson mean must be finite and non-negative");
  }
  if (mean == 0.0) return 0.0;
  const auto weights = poisson_weights(mean, cutoff + 1, 1e-300);
  double tail = 0.0;
  // Smallest terms first.
  for (std::size_t n = weights.size(); n-- > cutoff + 1;) tail += weights[n];
  return tail;
}

std::size_t coherent_cutoff(Complex alpha, double tail_tolerance) {
  if (!(tail_tolerance > 0.0)) {
    throw InvalidArgument("tail tolerance must be positive");
  }
  const double mean = std::norm(alpha);
  if (mean == 0.0) return 0;
  const auto weights = poisson_weights(mean, 0, tail_tolerance * 1e-6);
  // suffix[k] = sum_{n >= k} p(n), accumulated from the small end.
  std::vector<double> suffix(weights.size() + 1, 0.0);
  for (std::size_t n = weights.size(); n-- > 0;) suffix[n] = suffix[n + 1] + weights[n];
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (suffix[k + 1] < tail_tolerance) return k;
  }
  return weights.size();
}

TwoModeState product_state(const SingleModeCoefficients& first,
                           const SingleModeCoefficients& second) {
  if (first.coefficients.empty() || second.coefficients.empty()) {
    throw InvalidArgument("product_state needs non-empty coefficient arrays");
  }
  const std::size_t rows = first.coefficients.size();
  const std::size_t cols = second.coefficients.size();
  std::vector<Complex> amps(rows * cols);
  for (std::size_t n = 0; n < rows; ++n) {
    for (std::size_t m = 0; m < cols; ++m) {
      amps[n * cols + m] = first.coefficients[n] * second.coefficients[m];
    }
  }
  // 1 - (1 - d1)(1 - d2) without losing tiny deficits to rounding.
  const double deficit =
      first.norm_deficit + second.norm_deficit - first.norm_deficit * second.norm_deficit;
  return TwoModeState(rows - 1, cols - 1, std::move(amps), deficit);
}

Complex inner_product(const TwoModeState& a, const TwoModeState& b) {
  if (a.cutoff_first() != b.cutoff_first() || a.cutoff_second() != b.cutoff_second()) {
    throw CutoffMismatch("inner_product: cutoffs (" + std::to_string(a.cutoff_first()) + ", " +
                         std::to_string(a.cutoff_second()) + ") vs (" +
                         std::to_string(b.cutoff_first()) + ", " +
                         std::to_string(b.cutoff_second()) + ")");
  }
  Complex sum;
  const auto lhs = a.amplitudes();
  const auto rhs = b.amplitudes();
  for (std::size_t i = 0; i < lhs.size(); ++i) sum += std::conj(lhs[i]) * rhs[i];
  return sum;
}

double fidelity(const TwoModeState& a, const TwoModeState& b) {
  return std::norm(inner_product(a, b));
}

}  // namespace fockmix
