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

// Acceptance suite: one PASS/FAIL line per criterion. Closed forms are
// written out here rather than taken from the oracle module.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <sys/wait.h>
#include <unistd.h>

#include "fockmix/beamsplitter.hpp"
#include "fockmix/cli/config.hpp"
#include "fockmix/cli/runner.hpp"
#include "fockmix/fock_state.hpp"
#include "fockmix/oracles.hpp"
#include "fockmix/sampler.hpp"
#include "fockmix/statistics.hpp"

namespace fs = std::filesystem;
using namespace fockmix;

namespace {

constexpr double kPi = std::numbers::pi;

// Collects failures for one criterion.
class Check {
 public:
  void near(double got, double want, double tol, const std::string& what) {
    ++count_;
    if (!(std::abs(got - want) <= tol)) {
      fail(fmt::format("{}: got {:.17g}, want {:.17g} (tol {:g})", what, got, want, tol));
    }
  }
  void defined_near(const std::optional<double>& got, double want, double tol,
                    const std::string& what) {
    if (!got) {
      ++count_;
      fail(what + ": undefined");
      return;
    }
    near(*got, want, tol, what);
  }
  void that(bool ok, const std::string& what) {
    ++count_;
    if (!ok) fail(what);
  }
  bool ok() const { return failures_ == 0; }
  std::size_t count() const { return count_; }
  const std::string& first_failure() const { return first_; }

 private:
  void fail(const std::string& msg) {
    if (failures_++ == 0) first_ = msg;
  }
  std::size_t count_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

struct Result {
  int id;
  bool pass;
  std::string detail;
};

Result run_criterion(int id, const std::string& title, double limit_seconds,
                     const std::function<void(Check&, std::string&)>& body) {
  Check check;
  std::string note;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check, note);
  } catch (const std::exception& e) {
    check.that(false, std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0) {
    check.that(seconds < limit_seconds,
               fmt::format("runtime {:.3f} s exceeds {:.0f} s", seconds, limit_seconds));
  }
  const bool pass = check.ok();
  std::string line = fmt::format("{} criterion {}: {} [{} checks, {:.3f} s", pass ? "PASS" : "FAIL",
                                 id, title, check.count(), seconds);
  if (limit_seconds > 0) line += fmt::format(" < {:.0f} s", limit_seconds);
  line += "]";
  if (!note.empty()) line += " " + note;
  if (!pass) line += " -- " + check.first_failure();
  std::printf("%s\n", line.c_str());
  std::fflush(stdout);
  return {id, pass, line};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream fields(line);
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw std::runtime_error("missing CSV column " + name);
  return static_cast<std::size_t>(it - header.begin());
}

// 1. Single photon on one port.
void single_photon(Check& c, std::string&) {
  for (double theta : {kPi / 6, kPi / 4, kPi / 3}) {
    const double t2 = std::cos(theta) * std::cos(theta);
    const double r2 = std::sin(theta) * std::sin(theta);
    const auto s = summarize(apply_bs_fock_pair(1, 0, BeamsplitterParams(theta)));
    const std::string at = fmt::format(" at theta={:.4f}", theta);
    c.near(s.first.mean, t2, 1e-10, "mean" + at);
    c.near(s.first.variance, t2 * r2, 1e-10, "variance" + at);
    c.defined_near(s.first.mandel_q, -t2, 1e-10, "Q" + at);
    c.defined_near(s.first.g2, 0.0, 1e-10, "g2" + at);
  }
}

// 2. Two-photon interference at a balanced splitter.
void hong_ou_mandel(Check& c, std::string& note) {
  const auto out = apply_bs_fock_pair(1, 1, BeamsplitterParams(kPi / 4));
  const double coincidence = std::abs(out.amplitude(1, 1));
  c.that(coincidence < 1e-14, fmt::format("|<1,1|out>| = {:g} not below 1e-14", coincidence));
  const auto s = summarize(out);
  for (Mode m : {Mode::first, Mode::second}) {
    const std::string tag = m == Mode::first ? " (first)" : " (second)";
    c.near(s.mode(m).mean, 1.0, 1e-10, "mean" + tag);
    c.near(s.mode(m).variance, 1.0, 1e-10, "variance" + tag);
    c.defined_near(s.mode(m).mandel_q, 0.0, 1e-10, "Q" + tag);
    c.defined_near(s.mode(m).g2, 1.0, 1e-10, "g2" + tag);
  }
  c.defined_near(s.g2_cross, 0.0, 1e-14, "g2_cross");
  note = fmt::format("(|<1,1|out>| = {:.1e})", coincidence);
}

// 3. Fock pairs against the closed forms, and sector blocks against the
// matrix-exponential cross-check.
void fock_equivalence(Check& c, std::string& note) {
  const double thetas[] = {0.0, kPi / 6, kPi / 4, kPi / 3, kPi / 2};
  const double phis[] = {0.0, kPi / 2, 1.0};
  double worst_block = 0.0;
  double worst_unitarity = 0.0;
  for (double theta : thetas) {
    for (double phi : phis) {
      const BeamsplitterParams bs(theta, phi);
      const double t2 = std::cos(theta) * std::cos(theta);
      const double r2 = std::sin(theta) * std::sin(theta);
      for (std::size_t n = 0; n <= 6; ++n) {
        for (std::size_t m = 0; m <= 6; ++m) {
          const auto s = summarize(apply_bs_fock_pair(n, m, bs));
          const double dn = static_cast<double>(n);
          const double dm = static_cast<double>(m);
          const double var = t2 * r2 * (dn + dm + 2 * dn * dm);
          const double mean[2] = {dn * t2 + dm * r2, dn * r2 + dm * t2};
          const std::string at = fmt::format(" at n={} m={} theta={:.4f} phi={:.4f}", n, m,
                                             theta, phi);
          for (int i = 0; i < 2; ++i) {
            const ModeStats& ms = i == 0 ? s.first : s.second;
            c.near(ms.mean, mean[i], 1e-10, "mean" + at);
            c.near(ms.variance, var, 1e-10, "variance" + at);
            if (mean[i] > 1e-9) {
              const double q = var / mean[i] - 1.0;
              c.defined_near(ms.mandel_q, q, 1e-10, "Q" + at);
              c.defined_near(ms.g2, 1.0 + q / mean[i], 1e-10, "g2" + at);
            } else {
              c.that(!ms.mandel_q && !ms.g2, "zero-mean Q/g2 must be undefined" + at);
            }
          }
        }
      }
      for (std::size_t total = 0; total <= 12; ++total) {
        const SectorBlock block = sector_block(total, bs);
        const SectorBlock oracle = bs_matrix_exponential_oracle(total, bs);
        for (std::size_t i = 0; i <= total; ++i) {
          for (std::size_t j = 0; j <= total; ++j) {
            worst_block = std::max(worst_block, std::abs(block(i, j) - oracle(i, j)));
          }
        }
        worst_unitarity = std::max(worst_unitarity, block.unitarity_residual());
      }
    }
  }
  c.that(worst_block < 1e-10, fmt::format("block vs matrix exponential differs by {:g}", worst_block));
  c.that(worst_unitarity < 1e-10, fmt::format("unitarity residual {:g}", worst_unitarity));
  note = fmt::format("(max |block - expm| = {:.1e}, unitarity residual {:.1e})", worst_block,
                     worst_unitarity);
}

double hybrid_numeric_q(std::size_t n, double alpha) {
  cli::ScenarioConfig cfg;
  cfg.input_kind = cli::InputKind::fock_coherent;
  cfg.n = n;
  cfg.alpha = alpha;
  cfg.theta = kPi / 4;
  cfg.phi = kPi / 2;
  const auto s = summarize(cli::output_state(cfg));
  // Vacuum convention: an undefined Q is the vacuum, which is coherent.
  return oracles::undefined_as_zero(s.first.mandel_q);
}

// 4. Limits of the Fock plus coherent input at a balanced splitter.
void hybrid_limits(Check& c, std::string& note) {
  double worst_poisson = 0.0;
  for (int k = 0; k <= 300; ++k) {
    const double alpha = k * 0.01;
    const double q = hybrid_numeric_q(0, alpha);
    worst_poisson = std::max(worst_poisson, std::abs(q));
    c.near(q, 0.0, 1e-9, fmt::format("Q(n=0, alpha={:.2f})", alpha));
  }
  for (std::size_t n : {1u, 2u, 5u, 10u}) {
    c.near(hybrid_numeric_q(n, 1e-3), -0.5, 1e-4, fmt::format("Q(n={}, alpha=1e-3)", n));
  }

  const auto rows = parse_csv(cli::sweep_csv(cli::figure_spec(4)));
  const auto& header = rows.front();
  const std::size_t series = column(header, "series_var");
  const std::size_t sweep = column(header, "sweep_var");
  const std::size_t qc = column(header, "q_c");
  std::map<std::string, std::vector<std::pair<double, double>>> curves;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][qc].empty()) continue;
    curves[rows[i][series]].emplace_back(std::stod(rows[i][sweep]), std::stod(rows[i][qc]));
  }
  std::string crossings;
  for (const char* n : {"1", "2", "5", "10"}) {
    const auto& curve = curves[n];
    c.that(curve.size() == 61, fmt::format("series n={} has {} rows", n, curve.size()));
    bool monotone = true;
    int sign_changes = 0;
    double crossing = -1.0;
    for (std::size_t i = 1; i < curve.size(); ++i) {
      if (curve[i].second < curve[i - 1].second) monotone = false;
      if ((curve[i - 1].second < 0) != (curve[i].second < 0)) {
        ++sign_changes;
        crossing = curve[i].first;
      }
    }
    c.that(monotone, fmt::format("Q not monotone in alpha for n={}", n));
    c.that(sign_changes == 1 && curve.back().second > 0,
           fmt::format("n={}: expected one crossing to Q > 0, saw {}", n, sign_changes));
    crossings += fmt::format("{}n={}: Q>0 from |alpha|={:.2f}", crossings.empty() ? "" : ", ", n,
                             crossing);
  }
  note = fmt::format("(max |Q(n=0)| = {:.1e}; {})", worst_poisson, crossings);
}

// 5. The printed Q formula keeps |alpha|^4 in the first term.
void printed_formula(Check& c, std::string& note) {
  const double alpha = 2.0;
  const double t2 = 0.5;
  const double r2 = 0.5;
  const double a2 = alpha * alpha;
  // Printed: (r^4 |a|^4 + t^2 r^2 (n + |a|^2 + 2 n |a|^2)) / (n t^2 + r^2 |a|^2) - 1 at n = 0.
  const double printed_by_hand = (r2 * r2 * a2 * a2 + t2 * r2 * a2) / (r2 * a2) - 1.0;
  const oracles::HybridParams p{0, alpha, BeamsplitterParams(kPi / 4)};
  const auto printed = oracles::printed::hybrid_q(p);
  c.defined_near(printed, printed_by_hand, 1e-12, "printed oracle vs hand evaluation");
  c.defined_near(printed, r2 * (a2 - 1.0), 1e-12, "printed Q - 0 = r^2 (|a|^2 - 1)");
  c.defined_near(printed, 1.5, 1e-12, "printed Q at alpha=2");
  c.defined_near(oracles::hybrid_q(p, Mode::first), 0.0, 1e-9, "corrected Q");
  c.near(hybrid_numeric_q(0, alpha), 0.0, 1e-9, "numeric Q");
  c.that(printed && std::abs(*printed - hybrid_numeric_q(0, alpha)) > 1.0,
         "printed and numeric Q should disagree");
  note = fmt::format("(printed {:.17g}, numeric {:.1e})", printed.value_or(NAN),
                     hybrid_numeric_q(0, alpha));
}

// 6. Coherent pairs stay coherent.
void coherent_inputs(Check& c, std::string& note) {
  std::mt19937_64 rng(0x5eed0006);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw_amplitude = [&] {
    // Uniform on the disk of radius 2.
    return std::polar(2.0 * std::sqrt(unit(rng)), 2 * kPi * unit(rng));
  };
  double worst_infidelity = 0.0;
  double worst_q = 0.0;
  double worst_g2 = 0.0;
  for (int draw = 0; draw < 100; ++draw) {
    const Complex alpha = draw_amplitude();
    const Complex beta = draw_amplitude();
    const double theta = unit(rng) * kPi / 2;
    cli::ScenarioConfig cfg;
    cfg.input_kind = cli::InputKind::coherent_coherent;
    cfg.alpha = alpha;
    cfg.beta = beta;
    cfg.theta = theta;
    cfg.phi = kPi / 2;
    const auto out = cli::output_state(cfg);
    // Expected product state t*alpha + i r*beta, i r*alpha + t*beta.
    const double t = std::cos(theta);
    const double r = std::sin(theta);
    const Complex i(0.0, 1.0);
    const Complex gamma_c = t * alpha + i * r * beta;
    const Complex gamma_d = i * r * alpha + t * beta;
    const auto expected = product_state(coherent_amplitudes(gamma_c, out.cutoff_first()),
                                        coherent_amplitudes(gamma_d, out.cutoff_second()));
    const double f = fidelity(out, expected);
    worst_infidelity = std::max(worst_infidelity, 1.0 - f);
    const std::string at = fmt::format(" draw {} alpha=({:.3f},{:.3f}) beta=({:.3f},{:.3f})", draw,
                                       alpha.real(), alpha.imag(), beta.real(), beta.imag());
    c.that(f >= 1.0 - 1e-8, fmt::format("fidelity {:.12f}{}", f, at));
    const auto s = summarize(out);
    for (Mode m : {Mode::first, Mode::second}) {
      const ModeStats& ms = s.mode(m);
      c.defined_near(ms.mandel_q, 0.0, 1e-8, "Q" + at);
      c.defined_near(ms.g2, 1.0, 1e-8, "g2" + at);
      if (ms.mandel_q) worst_q = std::max(worst_q, std::abs(*ms.mandel_q));
      if (ms.g2) worst_g2 = std::max(worst_g2, std::abs(*ms.g2 - 1.0));
    }
    c.near(s.first.mean + s.second.mean, std::norm(alpha) + std::norm(beta), 1e-8,
           "mean sum" + at);
  }
  note = fmt::format("(max 1-F = {:.1e}, max |Q| = {:.1e}, max |g2-1| = {:.1e})",
                     worst_infidelity, worst_q, worst_g2);
}

// 7. Sampler convergence for the split single photon.
void sampler_convergence(Check& c, std::string& note) {
  constexpr std::uint64_t kSeed = 20261016;
  constexpr int kReplicates = 32;
  const auto state = apply_bs_fock_pair(1, 0, BeamsplitterParams(kPi / 4));
  const std::uint64_t shot_counts[] = {1000, 10000, 100000};

  // Exact values: Bernoulli(1/2) on each port.
  auto within = [&](double estimate, double exact, double se, const std::string& what) {
    c.that(std::abs(estimate - exact) <= 5.0 * se,
           fmt::format("{}: {:.6f} vs {:.6f} exceeds 5 SE ({:.2e})", what, estimate, exact, se));
  };

  std::vector<double> log_shots;
  std::vector<double> log_rms;
  for (std::uint64_t shots : shot_counts) {
    const SampleReport a = sample_counts(state, shots, kSeed);
    const SampleReport b = sample_counts(state, shots, kSeed);
    c.that(a.counts == b.counts, "counts differ between identical runs");
    c.that(a.estimates.first.mean == b.estimates.first.mean &&
               a.std_errors.first.mean == b.std_errors.first.mean,
           "estimates differ between identical runs");
    const auto& e = a.estimates;
    const auto& se = a.std_errors;
    const std::string tag = fmt::format(" (shots={})", shots);
    within(e.first.mean, 0.5, se.first.mean, "mean_first" + tag);
    within(e.second.mean, 0.5, se.second.mean, "mean_second" + tag);
    within(e.first.variance, 0.25, se.first.variance, "variance_first" + tag);
    within(e.second.variance, 0.25, se.second.variance, "variance_second" + tag);
    within(e.first.mandel_q.value_or(NAN), -0.5, se.first.mandel_q.value_or(NAN), "Q_first" + tag);
    within(e.first.g2.value_or(NAN), 0.0, se.first.g2.value_or(NAN), "g2_first" + tag);
    within(e.g2_cross.value_or(NAN), 0.0, se.g2_cross.value_or(NAN), "g2_cross" + tag);

    // RMS of the mean error over replicate seeds derived from the fixed seed.
    double sum_sq = 0.0;
    for (int r = 0; r < kReplicates; ++r) {
      const SampleReport rep = sample_counts(state, shots, kSeed + static_cast<std::uint64_t>(r));
      const double err = rep.estimates.first.mean - 0.5;
      sum_sq += err * err;
    }
    log_shots.push_back(std::log10(static_cast<double>(shots)));
    log_rms.push_back(std::log10(std::sqrt(sum_sq / kReplicates)));
  }
  const double mx = (log_shots[0] + log_shots[1] + log_shots[2]) / 3;
  const double my = (log_rms[0] + log_rms[1] + log_rms[2]) / 3;
  double sxy = 0.0;
  double sxx = 0.0;
  for (int i = 0; i < 3; ++i) {
    sxy += (log_shots[i] - mx) * (log_rms[i] - my);
    sxx += (log_shots[i] - mx) * (log_shots[i] - mx);
  }
  const double slope = sxy / sxx;
  c.near(slope, -0.5, 0.1, "log-log slope of mean error");
  note = fmt::format("(slope {:.3f} from RMS over {} seeds)", slope, kReplicates);
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(FOCKMIX_CLI_BINARY) + " " + args;
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 8. Figure CSVs from the command-line tool.
void figure_files(Check& c, std::string& note) {
  const fs::path root = fs::temp_directory_path() /
                        fmt::format("fockmix_acceptance_{}", static_cast<long>(::getpid()));
  const fs::path first = root / "a";
  const fs::path second = root / "b";
  const fs::path zeroed = root / "z";
  for (const fs::path& dir : {first, second}) {
    c.that(run_binary("figures --which 2 --which 4 --out " + dir.string()) == 0,
           "figures command failed");
  }
  c.that(run_binary("figures --which 4 --undefined-as-zero --out " + zeroed.string()) == 0,
         "figures --undefined-as-zero failed");
  for (const char* name : {"figure2.csv", "figure4.csv"}) {
    c.that(cli::read_text(first / name) == cli::read_text(second / name),
           std::string(name) + " differs between runs");
  }

  const auto fig2 = parse_csv(cli::read_text(first / "figure2.csv"));
  const std::size_t series = column(fig2.front(), "series_var");
  const std::size_t sweep = column(fig2.front(), "sweep_var");
  const std::size_t qc = column(fig2.front(), "q_c");
  bool found = false;
  for (std::size_t i = 1; i < fig2.size(); ++i) {
    if (fig2[i][series] == "1" && fig2[i][sweep] == "1") {
      found = true;
      c.that(!fig2[i][qc].empty(), "q_c empty at n=m=1");
      if (!fig2[i][qc].empty()) c.near(std::stod(fig2[i][qc]), 0.0, 1e-12, "q_c at n=m=1");
    }
  }
  c.that(found, "no (n=1, m=1) row in figure2.csv");

  std::size_t poisson_rows = 0;
  for (const fs::path& dir : {first, zeroed}) {
    const auto fig4 = parse_csv(cli::read_text(dir / "figure4.csv"));
    const auto& h = fig4.front();
    const std::size_t s4 = column(h, "series_var");
    const std::size_t q4 = column(h, "q_c");
    const std::size_t mean = column(h, "mean_c");
    const std::size_t var = column(h, "var_c");
    for (std::size_t i = 1; i < fig4.size(); ++i) {
      if (fig4[i][s4] != "0") continue;
      ++poisson_rows;
      const double m = std::stod(fig4[i][mean]);
      c.near(std::stod(fig4[i][var]), m, 1e-9, "var_c = mean_c in the n=0 series");
      if (fig4[i][q4].empty()) {
        // Only the vacuum row may be undefined, and only without the flag.
        c.that(dir == first && m == 0.0, "undefined q_c outside the vacuum row");
      } else {
        c.near(std::stod(fig4[i][q4]), 0.0, 1e-9, "q_c in the n=0 series");
      }
    }
  }
  c.that(poisson_rows == 122, fmt::format("expected 2 x 61 n=0 rows, saw {}", poisson_rows));
  fs::remove_all(root);
  note = "(figure2.csv and figure4.csv byte-identical across runs)";
}

}  // namespace

int main() {
  std::vector<Result> results;
  results.push_back(run_criterion(1, "single photon |1,0> statistics", 1, single_photon));
  results.push_back(run_criterion(2, "Hong-Ou-Mandel |1,1> at theta=pi/4", 1, hong_ou_mandel));
  results.push_back(run_criterion(3, "Fock pair closed forms and sector blocks", 10, fock_equivalence));
  results.push_back(run_criterion(4, "Fock plus coherent limits", 30, hybrid_limits));
  results.push_back(run_criterion(5, "printed hybrid Q discrepancy", 1, printed_formula));
  results.push_back(run_criterion(6, "coherent pairs stay coherent", 60, coherent_inputs));
  results.push_back(run_criterion(7, "sampler convergence and reproducibility", 30,
                                  sampler_convergence));
  results.push_back(run_criterion(8, "figure CSV golden files", 0, figure_files));
  const auto failed = std::count_if(results.begin(), results.end(),
                                    [](const Result& r) { return !r.pass; });
  std::printf("%zu/%zu criteria passed\n", results.size() - static_cast<std::size_t>(failed),
              results.size());
  return failed == 0 ? 0 : 1;
}
