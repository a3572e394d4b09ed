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


#include "fockmix/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "fockmix/errors.hpp"
#include "fockmix/statistics.hpp"

namespace fockmix {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

constexpr std::size_t kFeatures = 5;  // N1, N1^2, N2, N2^2, N1 N2

double quadratic_form(const std::array<double, kFeatures>& g,
                      const std::array<std::array<double, kFeatures>, kFeatures>& cov) {
  double sum = 0.0;
  for (std::size_t i = 0; i < kFeatures; ++i) {
    for (std::size_t j = 0; j < kFeatures; ++j) sum += g[i] * cov[i][j] * g[j];
  }
  return std::max(sum, 0.0);
}

}  // namespace

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& word : s_) word = splitmix64(sm);
}

Xoshiro256StarStar::result_type Xoshiro256StarStar::operator()() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

void Xoshiro256StarStar::jump() {
  static constexpr std::array<std::uint64_t, 4> kJump = {
      0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL, 0xa9582618e03fc9aaULL,
      0x39abdc4529b1661cULL};
  std::array<std::uint64_t, 4> acc{};
  for (const std::uint64_t word : kJump) {
    for (int b = 0; b < 64; ++b) {
      if (word & (std::uint64_t{1} << b)) {
        for (std::size_t i = 0; i < 4; ++i) acc[i] ^= s_[i];
      }
      (*this)();
    }
  }
  s_ = acc;
}

void estimate_from_counts(SampleReport& report) {
  const double shots = static_cast<double>(report.shots);
  std::array<double, kFeatures> mu{};
  for (const auto& [at, count] : report.counts) {
    const double n1 = static_cast<double>(at.n_first);
    const double n2 = static_cast<double>(at.n_second);
    const double w = static_cast<double>(count) / shots;
    mu[0] += w * n1;
    mu[1] += w * n1 * n1;
    mu[2] += w * n2;
    mu[3] += w * n2 * n2;
    mu[4] += w * n1 * n2;
  }
  std::array<std::array<double, kFeatures>, kFeatures> cov{};
  for (const auto& [at, count] : report.counts) {
    const double n1 = static_cast<double>(at.n_first);
    const double n2 = static_cast<double>(at.n_second);
    const double w = static_cast<double>(count) / shots;
    const std::array<double, kFeatures> d = {n1 - mu[0], n1 * n1 - mu[1], n2 - mu[2],
                                             n2 * n2 - mu[3], n1 * n2 - mu[4]};
    for (std::size_t i = 0; i < kFeatures; ++i) {
      for (std::size_t j = 0; j < kFeatures; ++j) cov[i][j] += w * d[i] * d[j];
    }
  }
  auto se = [&](const std::array<double, kFeatures>& g) {
    return std::sqrt(quadratic_form(g, cov) / shots);
  };

  auto per_mode = [&](std::size_t i1, std::size_t i2, MomentEstimates::PerMode& est,
                      MomentEstimates::PerMode& err) {
    const double m1 = mu[i1];
    const double m2 = mu[i2];
    std::array<double, kFeatures> g{};
    est.mean = m1;
    g[i1] = 1.0;
    err.mean = se(g);

    est.variance = std::max(m2 - m1 * m1, 0.0);
    g = {};
    g[i1] = -2.0 * m1;
    g[i2] = 1.0;
    err.variance = se(g);

    if (m1 >= kZeroMeanThreshold) {
      est.mandel_q = m2 / m1 - m1 - 1.0;
      g = {};
      g[i1] = -m2 / (m1 * m1) - 1.0;
      g[i2] = 1.0 / m1;
      err.mandel_q = se(g);

      est.g2 = (m2 - m1) / (m1 * m1);
      g = {};
      g[i1] = (m1 - 2.0 * m2) / (m1 * m1 * m1);
      g[i2] = 1.0 / (m1 * m1);
      err.g2 = se(g);
    }
  };
  report.estimates = {};
  report.std_errors = {};
  per_mode(0, 1, report.estimates.first, report.std_errors.first);
  per_mode(2, 3, report.estimates.second, report.std_errors.second);

  report.estimates.mean_product = mu[4];
  report.std_errors.mean_product = se({0, 0, 0, 0, 1});
  if (mu[0] >= kZeroMeanThreshold && mu[2] >= kZeroMeanThreshold) {
    const double denom = mu[0] * mu[2];
    report.estimates.g2_cross = mu[4] / denom;
    report.std_errors.g2_cross =
        se({-mu[4] / (mu[0] * denom), 0.0, -mu[4] / (mu[2] * denom), 0.0, 1.0 / denom});
  }
}

SampleReport sample_counts(const TwoModeState& state, std::uint64_t shots, std::uint64_t seed,
                           unsigned workers) {
  if (shots == 0) throw InvalidArgument("shots must be at least 1");
  if (state.norm_deficit() >= kMaxSamplingDeficit) {
    throw TruncationTooLossy("state has norm deficit " + std::to_string(state.norm_deficit()) +
                             " (limit " + std::to_string(kMaxSamplingDeficit) +
                             "); raise the cutoffs before sampling");
  }
  const auto amps = state.amplitudes();
  std::vector<double> cdf(amps.size());
  double total = 0.0;
  std::size_t last_supported = 0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double w = std::norm(amps[i]);
    total += w;
    cdf[i] = total;
    if (w > 0.0) last_supported = i;
  }
  if (!(total > 0.0)) throw InvalidArgument("cannot sample from a zero state");

  const std::uint64_t chunks = (shots + kSampleChunk - 1) / kSampleChunk;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(chunks)));

  auto draw = [&](unsigned worker, std::vector<std::uint64_t>& hist) {
    Xoshiro256StarStar gen(seed);
    for (unsigned j = 0; j < worker; ++j) gen.jump();
    for (std::uint64_t chunk = worker; chunk < chunks; chunk += workers) {
      Xoshiro256StarStar stream = gen;
      const std::uint64_t begin = chunk * kSampleChunk;
      const std::uint64_t end = std::min<std::uint64_t>(begin + kSampleChunk, shots);
      for (std::uint64_t s = begin; s < end; ++s) {
        const double u = stream.uniform() * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
        if (idx > last_supported) idx = last_supported;
        ++hist[idx];
      }
      for (unsigned j = 0; j < workers; ++j) gen.jump();
    }
  };

  std::vector<std::vector<std::uint64_t>> hists(workers,
                                                std::vector<std::uint64_t>(amps.size(), 0));
  if (workers == 1) {
    draw(0, hists[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(draw, w, std::ref(hists[w]));
    for (auto& th : pool) th.join();
  }

  SampleReport report;
  report.shots = shots;
  report.seed = seed;
  report.renormalization = 1.0 / total;
  report.chunk_size = kSampleChunk;
  const std::size_t cols = state.cutoff_second() + 1;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    std::uint64_t c = 0;
    for (const auto& h : hists) c += h[i];
    if (c > 0) report.counts[{i / cols, i % cols}] = c;
  }
  estimate_from_counts(report);
  return report;
}

}  // namespace fockmix
