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


// Test-only reference computations. Nothing here calls into the library's
// evolution or expansion code.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace fockmix::testing {

using Cx = std::complex<double>;

/// Dense two-mode grid with cutoff `dim - 1` on both modes.
struct Grid {
  std::size_t dim;
  std::vector<Cx> a;

  explicit Grid(std::size_t d) : dim(d), a(d * d) {}
  Cx& at(std::size_t n, std::size_t m) { return a[n * dim + m]; }
  Cx at(std::size_t n, std::size_t m) const { return a[n * dim + m]; }
};

/// (x c^dag + y d^dag) applied to `g`, using only the creation-operator rule
/// c^dag |n> = sqrt(n+1) |n+1>.
inline Grid apply_linear_creation(const Grid& g, Cx x, Cx y) {
  Grid out(g.dim);
  for (std::size_t n = 0; n < g.dim; ++n) {
    for (std::size_t m = 0; m < g.dim; ++m) {
      const Cx v = g.at(n, m);
      if (v == Cx{}) continue;
      if (n + 1 < g.dim) out.at(n + 1, m) += x * std::sqrt(double(n + 1)) * v;
      if (m + 1 < g.dim) out.at(n, m + 1) += y * std::sqrt(double(m + 1)) * v;
    }
  }
  return out;
}

/// U(theta, phi)|n, m> by literally applying
///   (cos th c^dag - e^{-i phi} sin th d^dag)^n (e^{i phi} sin th c^dag + cos th d^dag)^m / sqrt(n! m!)
/// to the vacuum.
inline Grid brute_force_bs_output(std::size_t n, std::size_t m, double theta, double phi) {
  const double t = std::cos(theta);
  const double r = std::sin(theta);
  const Cx rho_a = -std::polar(r, -phi);
  const Cx rho_b = std::polar(r, phi);
  Grid g(n + m + 1);
  g.at(0, 0) = 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    g = apply_linear_creation(g, rho_b, t);
    for (auto& v : g.a) v /= std::sqrt(double(k + 1));
  }
  for (std::size_t k = 0; k < n; ++k) {
    g = apply_linear_creation(g, t, rho_a);
    for (auto& v : g.a) v /= std::sqrt(double(k + 1));
  }
  return g;
}

inline Cx ipow(Cx base, std::size_t e) {
  Cx r = 1.0;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

/// U(theta, phi)|n, m> from the fully expanded double binomial sum
///   sum_{p,q} C(n,p) C(m,q) t^{n-p+q} rho_a^p rho_b^{m-q}
///     sqrt((n-p+m-q)! (p+q)! / (n! m!)) |n-p+m-q, p+q>.
/// Plain factorials: only meant for small photon numbers.
inline Grid expanded_sum_bs_output(std::size_t n, std::size_t m, double theta, double phi) {
  auto fact = [](std::size_t k) { return std::tgamma(double(k) + 1.0); };
  auto binom = [&](std::size_t a, std::size_t b) { return fact(a) / (fact(b) * fact(a - b)); };
  const double t = std::cos(theta);
  const Cx rho_a = -std::polar(std::sin(theta), -phi);
  const Cx rho_b = std::polar(std::sin(theta), phi);
  Grid g(n + m + 1);
  for (std::size_t p = 0; p <= n; ++p) {
    for (std::size_t q = 0; q <= m; ++q) {
      const std::size_t kc = n - p + m - q;
      const std::size_t kd = p + q;
      const Cx coef = binom(n, p) * binom(m, q) * ipow(Cx(t), n - p + q) * ipow(rho_a, p) * ipow(rho_b, m - q) *
                      std::sqrt(fact(kc) * fact(kd) / (fact(n) * fact(m)));
      g.at(kc, kd) += coef;
    }
  }
  return g;
}

/// Poisson mass above `cutoff` via lgamma, summed from the far tail inwards.
inline double poisson_tail_lgamma(double mean, std::size_t cutoff) {
  if (mean == 0.0) return 0.0;
  double sum = 0.0;
  const std::size_t stop = cutoff + 2000 + static_cast<std::size_t>(10 * mean);
  for (std::size_t k = stop; k > cutoff; --k) {
    sum += std::exp(-mean + double(k) * std::log(mean) - std::lgamma(double(k) + 1.0));
  }
  return sum;
}

/// e^{-|a|^2/2} a^k / sqrt(k!) via lgamma.
inline Cx coherent_coefficient_lgamma(Cx alpha, std::size_t k) {
  if (alpha == Cx{}) return k == 0 ? 1.0 : 0.0;
  const double lm = -0.5 * std::norm(alpha) + double(k) * std::log(std::abs(alpha)) -
                    0.5 * std::lgamma(double(k) + 1.0);
  return std::polar(std::exp(lm), double(k) * std::arg(alpha));
}

struct Moments {
  double mean = 0;
  double second = 0;
  double cross = 0;  // <N_1 N_2>
};

inline Moments first_mode_moments(const Grid& g) {
  Moments mo;
  for (std::size_t n = 0; n < g.dim; ++n) {
    for (std::size_t m = 0; m < g.dim; ++m) {
      const double p = std::norm(g.at(n, m));
      mo.mean += double(n) * p;
      mo.second += double(n * n) * p;
      mo.cross += double(n * m) * p;
    }
  }
  return mo;
}

/// Output of U|n>|alpha> as the superposition of brute-force Fock outputs,
/// keeping coherent components up to `k_max`.
inline Grid brute_force_hybrid_output(std::size_t n, Cx alpha, double theta, double phi,
                                      std::size_t k_max) {
  Grid out(n + k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    const Cx c = coherent_coefficient_lgamma(alpha, k);
    if (c == Cx{}) continue;
    const Grid part = brute_force_bs_output(n, k, theta, phi);
    for (std::size_t i = 0; i < part.dim; ++i) {
      for (std::size_t j = 0; j < part.dim; ++j) out.at(i, j) += c * part.at(i, j);
    }
  }
  return out;
}

}  // namespace fockmix::testing
