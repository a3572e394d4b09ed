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


#include "fockmix/beamsplitter.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "fockmix/errors.hpp"
#include "fockmix/log.hpp"

namespace fockmix {

namespace {

using Matrix = std::vector<Complex>;  // square, column-major

Matrix multiply(const Matrix& a, const Matrix& b, std::size_t dim) {
  Matrix c(dim * dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      const Complex bkj = b[j * dim + k];
      if (bkj == Complex{}) continue;
      for (std::size_t i = 0; i < dim; ++i) c[j * dim + i] += a[k * dim + i] * bkj;
    }
  }
  return c;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (const Complex& x : a) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

BeamsplitterParams::BeamsplitterParams(double theta, double phi) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi / 2) {
    throw InvalidArgument("mixing angle theta must lie in [0, pi/2], got " +
                          std::to_string(theta));
  }
  if (!std::isfinite(phi)) throw InvalidArgument("phase phi must be finite");
  constexpr double two_pi = 2 * std::numbers::pi;
  phi = std::fmod(phi, two_pi);
  if (phi < 0.0) phi += two_pi;
  if (phi >= two_pi) phi = 0.0;
  theta_ = theta;
  phi_ = phi;
}

BeamsplitterParams BeamsplitterParams::inverse() const {
  return BeamsplitterParams(theta_, phi_ + std::numbers::pi);
}

TransmissionReflection amplitudes(const BeamsplitterParams& params) {
  return {std::cos(params.theta()), std::sin(params.theta())};
}

ReflectionPhases reflection_phases(const BeamsplitterParams& params) {
  const double r = std::sin(params.theta());
  const double c = std::cos(params.phi());
  const double s = std::sin(params.phi());
  // -e^{-i phi} r and e^{i phi} r
  return {Complex(-c * r, s * r), Complex(c * r, s * r)};
}

SectorBlock::SectorBlock(std::size_t total) : total_(total), data_((total + 1) * (total + 1)) {}

double SectorBlock::unitarity_residual() const {
  const std::size_t d = dim();
  double worst = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Complex sum;
      for (std::size_t k = 0; k < d; ++k) sum += std::conj((*this)(k, i)) * (*this)(k, j);
      if (i == j) sum -= 1.0;
      worst = std::max(worst, std::abs(sum));
    }
  }
  return worst;
}

namespace {

// Block for total + 1 photons from the block for total photons. Column k of
// the new block is U|k, N-k> with N = total + 1, written as the weighted mean
//   (sqrt(k) A U|k-1, N-k> + sqrt(N-k) B U|k, N-k-1>) / N
// where A = U a^dag U^dag and B = U b^dag U^dag act as linear combinations of
// output creation operators. The step is a symmetrized product with a 2x2
// unitary, so rounding errors grow at most linearly in the photon number.
SectorBlock grow_sector(const SectorBlock& prev, const BeamsplitterParams& params) {
  const std::size_t total = prev.total() + 1;
  const Complex t = std::cos(params.theta());
  const auto rho = reflection_phases(params);
  const double inv_total = 1.0 / static_cast<double>(total);
  SectorBlock next(total);
  auto add_creation = [&](std::size_t out_col, std::size_t in_col, Complex to_first,
                          Complex to_second, double weight) {
    for (std::size_t j = 0; j < total; ++j) {
      const Complex v = prev(j, in_col) * weight;
      next(j + 1, out_col) += to_first * std::sqrt(static_cast<double>(j + 1)) * v;
      next(j, out_col) += to_second * std::sqrt(static_cast<double>(total - j)) * v;
    }
  };
  for (std::size_t k = 0; k <= total; ++k) {
    if (k > 0) {
      add_creation(k, k - 1, t, rho.into_second,
                   std::sqrt(static_cast<double>(k)) * inv_total);
    }
    if (k < total) {
      add_creation(k, k, rho.into_first, t,
                   std::sqrt(static_cast<double>(total - k)) * inv_total);
    }
  }
  return next;
}

}  // namespace

std::vector<Complex> fock_pair_column(std::size_t n, std::size_t m,
                                      const BeamsplitterParams& params) {
  const SectorBlock block = sector_block(n + m, params);
  std::vector<Complex> column(n + m + 1);
  for (std::size_t j = 0; j <= n + m; ++j) column[j] = block(j, n);
  return column;
}

TwoModeState apply_bs_fock_pair(std::size_t n, std::size_t m, const BeamsplitterParams& params) {
  return apply_bs_fock_pair(n, m, params, n + m, n + m);
}

TwoModeState apply_bs_fock_pair(std::size_t n, std::size_t m, const BeamsplitterParams& params,
                                std::size_t cutoff_first, std::size_t cutoff_second) {
  const std::size_t total = n + m;
  if (cutoff_first < total || cutoff_second < total) {
    throw CutoffExceeded("output of |" + std::to_string(n) + "," + std::to_string(m) +
                         "> needs cutoffs >= " + std::to_string(total) + " on both modes");
  }
  const auto column = fock_pair_column(n, m, params);
  std::vector<Complex> amps((cutoff_first + 1) * (cutoff_second + 1));
  for (std::size_t k = 0; k <= total; ++k) amps[k * (cutoff_second + 1) + (total - k)] = column[k];
  return TwoModeState(cutoff_first, cutoff_second, std::move(amps), 0.0);
}

SectorBlock sector_block(std::size_t total, const BeamsplitterParams& params) {
  SectorBlock block(0);
  block(0, 0) = 1.0;
  while (block.total() < total) block = grow_sector(block, params);
  return block;
}

TwoModeState apply_bs_general(const TwoModeState& state, const BeamsplitterParams& params) {
  const std::size_t c1 = state.cutoff_first();
  const std::size_t c2 = state.cutoff_second();
  const std::size_t fits = std::min(c1, c2);
  std::vector<Complex> out((c1 + 1) * (c2 + 1));
  double dropped = 0.0;

  std::vector<Complex> sector_in;
  SectorBlock block(0);
  block(0, 0) = 1.0;
  for (std::size_t total = 0; total <= c1 + c2; ++total) {
    // Input amplitudes on |k, total - k> that exist on the grid.
    const std::size_t k_lo = total > c2 ? total - c2 : 0;
    const std::size_t k_hi = std::min(total, c1);
    sector_in.assign(total + 1, Complex{});
    bool occupied = false;
    double weight = 0.0;
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
      sector_in[k] = state.amplitude(k, total - k);
      if (sector_in[k] != Complex{}) {
        occupied = true;
        weight += std::norm(sector_in[k]);
      }
    }
    if (!occupied) continue;

    if (total > fits) {
      if (state.norm_deficit() == 0.0) {
        throw CutoffExceeded("input has weight in the " + std::to_string(total) +
                             "-photon sector but cutoffs (" + std::to_string(c1) + ", " +
                             std::to_string(c2) + ") only hold sectors up to " +
                             std::to_string(fits) + "; raise both cutoffs to at least " +
                             std::to_string(total));
      }
      logger().debug("dropping {}-photon sector with weight {:.3e}", total, weight);
      dropped += weight;
      continue;
    }

    while (block.total() < total) block = grow_sector(block, params);
    for (std::size_t j = 0; j <= total; ++j) {
      Complex sum;
      for (std::size_t k = k_lo; k <= k_hi; ++k) sum += block(j, k) * sector_in[k];
      out[j * (c2 + 1) + (total - j)] = sum;
    }
  }
  return TwoModeState(c1, c2, std::move(out), state.norm_deficit() + dropped);
}

std::pair<Complex, Complex> coherent_transform(Complex alpha, Complex beta,
                                               const BeamsplitterParams& params) {
  const double t = std::cos(params.theta());
  const auto rho = reflection_phases(params);
  return {t * alpha + rho.into_first * beta, rho.into_second * alpha + t * beta};
}

SectorBlock bs_matrix_exponential_oracle(std::size_t total, const BeamsplitterParams& params,
                                         std::size_t limit) {
  if (total > limit) {
    throw OracleLimitExceeded("matrix-exponential oracle limited to sectors <= " +
                              std::to_string(limit) + ", asked for " + std::to_string(total));
  }
  const std::size_t dim = total + 1;
  const double theta = params.theta();
  const Complex raise = theta * std::polar(1.0, params.phi());
  const Complex lower = -theta * std::polar(1.0, -params.phi());

  // theta (e^{i phi} a^dag b - e^{-i phi} a b^dag) on |k, total - k>
  Matrix generator(dim * dim);
  for (std::size_t k = 0; k <= total; ++k) {
    if (k < total) {
      generator[k * dim + (k + 1)] =
          raise * std::sqrt(static_cast<double>((k + 1) * (total - k)));
    }
    if (k > 0) {
      generator[k * dim + (k - 1)] =
          lower * std::sqrt(static_cast<double>(k * (total - k + 1)));
    }
  }

  double norm1 = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < dim; ++i) col += std::abs(generator[j * dim + i]);
    norm1 = std::max(norm1, col);
  }
  int squarings = 0;
  while (norm1 > 0.5) {
    norm1 /= 2;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  for (Complex& g : generator) g *= scale;

  Matrix result(dim * dim);
  Matrix term(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) result[i * dim + i] = term[i * dim + i] = 1.0;
  for (int order = 1; order < 64; ++order) {
    term = multiply(generator, term, dim);
    for (Complex& x : term) x /= static_cast<double>(order);
    for (std::size_t i = 0; i < term.size(); ++i) result[i] += term[i];
    if (max_abs(term) < 1e-17) break;
  }
  for (int s = 0; s < squarings; ++s) result = multiply(result, result, dim);

  SectorBlock block(total);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < dim; ++i) block(i, j) = result[j * dim + i];
  }
  return block;
}

}  // namespace fockmix
