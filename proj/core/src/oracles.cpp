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


#include "fockmix/oracles.hpp"

#include <cmath>

namespace fockmix::oracles {

namespace {

struct Weights {
  double t2;  // |t|^2
  double r2;  // |r|^2
};

Weights weights(const BeamsplitterParams& bs) {
  const double t = std::cos(bs.theta());
  const double r = std::sin(bs.theta());
  return {t * t, r * r};
}

std::optional<double> q_from(double variance, double mean) {
  if (mean < kZeroMeanThreshold) return std::nullopt;
  return (variance - mean) / mean;
}

std::optional<double> g2_from(std::optional<double> q, double mean) {
  if (!q) return std::nullopt;
  return 1.0 + *q / mean;
}

std::vector<double> poisson_marginal(double mean) {
  const auto coeffs = coherent_amplitudes(std::sqrt(mean), coherent_cutoff(std::sqrt(mean)));
  std::vector<double> p;
  p.reserve(coeffs.coefficients.size());
  for (const Complex& c : coeffs.coefficients) p.push_back(std::norm(c));
  return p;
}

}  // namespace

double fock_mean(const FockFockParams& p, Mode mode) {
  const auto [t2, r2] = weights(p.bs);
  const double n = static_cast<double>(p.n);
  const double m = static_cast<double>(p.m);
  return mode == Mode::first ? n * t2 + m * r2 : n * r2 + m * t2;
}

double fock_variance(const FockFockParams& p) {
  const auto [t2, r2] = weights(p.bs);
  const double n = static_cast<double>(p.n);
  const double m = static_cast<double>(p.m);
  return t2 * r2 * (n + m + 2.0 * n * m);
}

std::optional<double> fock_q(const FockFockParams& p, Mode mode) {
  return q_from(fock_variance(p), fock_mean(p, mode));
}

std::optional<double> fock_g2(const FockFockParams& p, Mode mode) {
  return g2_from(fock_q(p, mode), fock_mean(p, mode));
}

double hybrid_mean(const HybridParams& p, Mode mode) {
  const auto [t2, r2] = weights(p.bs);
  const double n = static_cast<double>(p.n);
  const double a2 = std::norm(p.alpha);
  return mode == Mode::first ? n * t2 + r2 * a2 : n * r2 + t2 * a2;
}

double hybrid_variance(const HybridParams& p, Mode mode) {
  auto [t2, r2] = weights(p.bs);
  if (mode == Mode::second) std::swap(t2, r2);
  const double n = static_cast<double>(p.n);
  const double a2 = std::norm(p.alpha);
  return r2 * r2 * a2 + t2 * r2 * (2.0 * n * a2 + n + a2);
}

std::optional<double> hybrid_q(const HybridParams& p, Mode mode) {
  return q_from(hybrid_variance(p, mode), hybrid_mean(p, mode));
}

std::optional<double> hybrid_g2(const HybridParams& p, Mode mode) {
  return g2_from(hybrid_q(p, mode), hybrid_mean(p, mode));
}

double single_photon_coherent_q(Complex alpha) {
  const double a2 = std::norm(alpha);
  return (2.0 * a2 - 1.0) / (2.0 * (1.0 + a2));
}

double single_photon_coherent_g2(Complex alpha) {
  const double a2 = std::norm(alpha);
  return 1.0 + (2.0 * a2 - 1.0) / ((1.0 + a2) * (1.0 + a2));
}

StatsSummary coherent_stats(const CoherentCoherentParams& p) {
  const auto [gamma_c, gamma_d] = coherent_transform(p.alpha, p.beta, p.bs);
  StatsSummary out;
  auto fill = [](ModeStats& s, Complex gamma) {
    s.mean = std::norm(gamma);
    s.variance = s.mean;
    s.second_moment = s.mean + s.mean * s.mean;
    if (s.mean >= kZeroMeanThreshold) {
      s.mandel_q = 0.0;
      s.g2 = 1.0;
    }
    s.marginal = poisson_marginal(s.mean);
  };
  fill(out.first, gamma_c);
  fill(out.second, gamma_d);
  out.mean_product = out.first.mean * out.second.mean;
  if (out.first.mean >= kZeroMeanThreshold && out.second.mean >= kZeroMeanThreshold) {
    out.g2_cross = 1.0;
  }
  return out;
}

namespace printed {

std::optional<double> hybrid_q(const HybridParams& p) {
  const auto [t2, r2] = weights(p.bs);
  const double n = static_cast<double>(p.n);
  const double a2 = std::norm(p.alpha);
  const double mean = n * t2 + r2 * a2;
  if (mean < kZeroMeanThreshold) return std::nullopt;
  return (r2 * r2 * a2 * a2 + t2 * r2 * (n + a2 + 2.0 * n * a2)) / mean - 1.0;
}

std::optional<double> hybrid_g2(const HybridParams& p) {
  const auto [t2, r2] = weights(p.bs);
  const double mean = static_cast<double>(p.n) * t2 + r2 * std::norm(p.alpha);
  return g2_from(hybrid_q(p), mean);
}

double single_photon_coherent_q(Complex alpha) {
  const double a2 = std::norm(alpha);
  return (a2 * a2 + 3.0 * a2 + 1.0) / (2.0 * (1.0 + a2)) - 1.0;
}

double single_photon_coherent_g2(Complex alpha) {
  const double a2 = std::norm(alpha);
  return 1.0 + (a2 * a2 + a2 - 1.0) / ((1.0 + a2) * (1.0 + a2));
}

}  // namespace printed

}  // namespace fockmix::oracles
