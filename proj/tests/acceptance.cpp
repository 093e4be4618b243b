// Copyright 2026 The vtlssi Authors. All Rights Reserved.
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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "vtlssi/axis.hpp"
#include "vtlssi/eval.hpp"
#include "vtlssi/ssi.hpp"
#include "vtlssi/synth.hpp"
#include "vtlssi/vtl.hpp"

using namespace vtlssi;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(const char* id, bool pass, const std::string& what) {
  std::printf("%s [%s] %s\n", pass ? "PASS" : "FAIL", id, what.c_str());
  std::fflush(stdout);
  failures += pass ? 0 : 1;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double rms_where(const Estimation& est, const std::vector<ManifestEntry>& entries,
                 double min_f0) {
  std::vector<double> e, m;
  for (const auto& p : est.points) {
    if (entries[p.utterance].f0_hz < min_f0) continue;
    e.push_back(p.l_est);
    m.push_back(p.l_meas);
  }
  return rms_error(e, m);
}

// Channel shift on the analysis axis equivalent to `ratio` at 2 kHz.
double shift_for_ratio(const FrequencyAxis& axis, double ratio) {
  double lo = 0.0, hi = 30.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (channel_shift_to_ratio(axis, mid, 2000.0) < ratio ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> pinv_oracle(const ShiftMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n * (n - 1), n);
  Eigen::VectorXd rhs(n * (n - 1));
  Eigen::Index row = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      a(row, j) = 1.0;
      a(row, i) = -1.0;
      rhs(row) = m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      ++row;
    }
  }
  const Eigen::VectorXd x = a.completeOrthogonalDecomposition().pseudoInverse() * rhs;
  return {x.data(), x.data() + x.size()};
}

Spectrum profile(double shift) {
  std::vector<double> v(100);
  for (std::size_t c = 0; c < v.size(); ++c) {
    const double x = static_cast<double>(c) - shift;
    v[c] = std::exp(-0.5 * std::pow((x - 30.0) / 4.0, 2)) +
           0.6 * std::exp(-0.5 * std::pow((x - 52.0) / 5.0, 2)) +
           0.3 * std::exp(-0.5 * std::pow((x - 70.0) / 6.0, 2));
  }
  return Spectrum(v, canonical_erb_axis());
}

bool same_report(const EvalReport& a, const EvalReport& b) {
  if (a.rms_cm != b.rms_cm || a.q != b.q || a.trials.size() != b.trials.size() ||
      a.estimation.points.size() != b.estimation.points.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.trials.size(); ++i) {
    if (a.trials[i].excluded != b.trials[i].excluded ||
        a.trials[i].rms_cm != b.trials[i].rms_cm) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.estimation.points.size(); ++i) {
    if (a.estimation.points[i].s != b.estimation.points[i].s ||
        a.estimation.points[i].l_est != b.estimation.points[i].l_est) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  vtlssi::testing::TempDir scratch;
  const std::vector<Vowel> vowels(kAllVowels.begin(), kAllVowels.end());
  const FrequencyAxis erb = canonical_erb_axis();
  const auto ep = Representation::parse("Ep");
  const auto ep_ssi = Representation::parse("Ep_SSI");

  // 1-2: female/male pair.
  {
    const auto t0 = Clock::now();
    const auto entries = make_corpus(pair_demo_speakers(), vowels, scratch / "pair");
    Corpus corpus(entries, AnalysisConfig{});
    const double true_shift = shift_for_ratio(erb, 18.5 / 15.0);
    std::map<std::string, double> mean_shift, mean_err;
    for (const auto& rep : {ep, ep_ssi}) {
      const ShiftTables tables = compute_shift_tables(corpus, rep, kDefaultHmax);
      double sum = 0.0, err = 0.0;
      for (const auto& pv : tables.vowels) {
        // Positive when the shorter tract's spectrum sits higher.
        const std::size_t female = entries[pv.utterances[0]].speaker_id == "female" ? 0 : 1;
        const auto s = relative_shifts(pv.matrix);
        const double d = s[female] - s[1 - female];
        sum += d;
        err += std::abs(d - true_shift);
      }
      mean_shift[rep.id()] = sum / static_cast<double>(tables.vowels.size());
      mean_err[rep.id()] = err / static_cast<double>(tables.vowels.size());
    }
    const double ratio = channel_shift_to_ratio(erb, mean_shift["Ep_SSI"], 2000.0);
    const double elapsed = seconds_since(t0);
    report("1", ratio >= 1.15 && ratio <= 1.31 && elapsed < 5.0,
           fmt("pair ratio Ep_SSI = %.4f (want [1.15, 1.31], true 1.2333), "
               "shift %.2f ch, %.2f s (want < 5 s)",
               ratio, mean_shift["Ep_SSI"], elapsed));
    report("2", mean_err["Ep"] > mean_err["Ep_SSI"],
           fmt("pair shift error vs true %.2f ch: Ep %.2f > Ep_SSI %.2f "
               "(mean shifts %.2f / %.2f)",
               true_shift, mean_err["Ep"], mean_err["Ep_SSI"], mean_shift["Ep"],
               mean_shift["Ep_SSI"]));
  }

  // 3-5: default ladder.
  const auto t0 = Clock::now();
  const auto ladder = make_corpus(default_speakers(), vowels, scratch / "ladder");
  Corpus corpus(ladder, AnalysisConfig{});
  const EvalReport weighted = evaluate(corpus, ep_ssi, {});
  const double elapsed = seconds_since(t0);
  EvalOptions no_trials;
  no_trials.trials = 0;
  const EvalReport plain = evaluate(corpus, ep, no_trials);
  {
    double mean_vtl = 0.0;
    for (const auto& p : weighted.estimation.points) mean_vtl += p.l_meas;
    mean_vtl /= static_cast<double>(weighted.estimation.points.size());
    const double hi_plain = rms_where(plain.estimation, ladder, 160.0);
    const double hi_weighted = rms_where(weighted.estimation, ladder, 160.0);
    report("3",
           weighted.all_r >= 0.90 && weighted.rms_cm <= 0.05 * mean_vtl &&
               hi_plain > hi_weighted && elapsed < 60.0,
           fmt("ladder Ep_SSI r = %.4f (want >= 0.90), RMS %.3f cm (want <= %.3f), "
               "F0>=160 Hz RMS Ep %.3f > Ep_SSI %.3f, %.2f s (want < 60 s)",
               weighted.all_r, weighted.rms_cm, 0.05 * mean_vtl, hi_plain, hi_weighted,
               elapsed));

    const double slope = std::log(channel_shift_to_ratio(erb, 6.0, 2000.0)) / 6.0;
    const double rel = std::abs(std::abs(weighted.q) - slope) / slope;
    report("q", rel <= 0.15,
           fmt("fitted |q| = %.5f vs ERB slope at 2 kHz %.5f, off by %.1f%% (want <= 15%%)",
               std::abs(weighted.q), slope, 100.0 * rel));
  }
  {
    bool ok = true;
    std::string what = "RMS SSI <= plain:";
    for (const char* base : {"Ep", "F_log", "M_log"}) {
      const auto rep = Representation::parse(base);
      Representation w = rep;
      w.ssi = true;
      const double a = evaluate(corpus, rep, no_trials).rms_cm;
      const double b = evaluate(corpus, w, no_trials).rms_cm;
      ok = ok && b <= a;
      what += fmt(" %s %.3f <= %.3f;", w.id().c_str(), b, a);
    }
    report("4", ok, what);
  }
  {
    const std::vector<double> grid = {0.0, 3.5, 6.0};
    const auto rows = hmax_sweep(corpus, ep, grid);
    report("5", rows[1].all_r >= rows[0].all_r && rows[1].all_r >= rows[2].all_r,
           fmt("sweep r(0) = %.4f, r(3.5) = %.4f, r(6) = %.4f (want r(3.5) >= both)",
               rows[0].all_r, rows[1].all_r, rows[2].all_r));
  }

  // 6: estimator oracles.
  {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> val(-10.0, 10.0);
    double worst = 0.0;
    const int matrices = 250;
    for (int k = 0; k < matrices; ++k) {
      const std::size_t n = 2 + static_cast<std::size_t>(k % 4);
      ShiftMatrix m(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, val(rng));
      }
      const auto got = relative_shifts(m);
      const auto want = pinv_oracle(m);
      for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(got[i] - want[i]));
    }
    double worst_shift = 0.0;
    const Spectrum ref = profile(0.0);
    for (double s : {-7.0, -3.0, 1.0, 2.0, 5.0, -2.5, -0.5, 0.5, 3.5}) {
      worst_shift = std::max(worst_shift, std::abs(xcorr_shift(ref, profile(s)) - s));
    }
    report("6", worst <= 1e-9 && worst_shift <= 0.1,
           fmt("generalized inverse on %d matrices: max diff %.2e (want <= 1e-9); "
               "constructed shifts max error %.3f ch (want <= 0.1)",
               matrices, worst, worst_shift));
  }

  // 7: unit invariants and determinism.
  {
    const FrequencyAxis lin = make_axis(AxisKind::kLinearHz, 3, 318.5, 955.5);
    const auto w = ssi_weight(lin, SsiParams(3.5, 182.0));
    const auto unvoiced = ssi_weight(lin, SsiParams(3.5, 0.0));
    const bool weight_ok = w[0] == 0.5 && w[1] == 1.0 && w[2] == 1.0 &&
                           std::all_of(unvoiced.begin(), unvoiced.end(),
                                       [](double x) { return x == 1.0; });
    const bool erb_ok = hz_to_erbn(0.0) == 0.0 && std::abs(hz_to_erbn(1000.0) - 15.62) <= 0.01 &&
                        std::abs(erbn_to_hz(hz_to_erbn(8000.0)) / 8000.0 - 1.0) <= 1e-6 &&
                        std::abs(erb.native_spacing() - 0.3013) <= 0.002;
    const bool mel_ok = std::abs(hz_to_mel(1000.0) - 1000.0) <= 0.5;

    bool matrix_ok = true;
    double worst_sum = 0.0;
    const ShiftTables tables = compute_shift_tables(corpus, ep_ssi, kDefaultHmax);
    for (const auto& pv : tables.vowels) {
      for (std::size_t i = 0; i < pv.matrix.size(); ++i) {
        for (std::size_t j = 0; j < pv.matrix.size(); ++j) {
          matrix_ok = matrix_ok && pv.matrix.at(i, j) == -pv.matrix.at(j, i);
        }
      }
      double sum = 0.0;
      for (double s : relative_shifts(pv.matrix)) sum += s;
      worst_sum = std::max(worst_sum, std::abs(sum));
    }
    Corpus again(ladder, AnalysisConfig{});
    const bool deterministic = same_report(weighted, evaluate(again, ep_ssi, {}));
    report("7",
           weight_ok && erb_ok && mel_ok && matrix_ok && worst_sum <= 1e-12 && deterministic,
           fmt("weight boundary/saturation/unvoiced %s; ERB spot values %s "
               "(1000 Hz -> %.3f, spacing %.5f); mel(1000) = %.2f; antisymmetry %s, "
               "max |sum S| %.1e; repeated run %s",
               weight_ok ? "exact" : "WRONG", erb_ok ? "ok" : "WRONG", hz_to_erbn(1000.0),
               erb.native_spacing(), hz_to_mel(1000.0), matrix_ok ? "exact" : "BROKEN",
               worst_sum, deterministic ? "bit-identical" : "DIFFERS"));
  }

  // 8: channel shift to frequency ratio.
  {
    const double ratio = channel_shift_to_ratio(erb, 6.0, 2000.0);
    report("8", std::abs(ratio - 1.21) <= 0.02,
           fmt("ERB shift 6 ch at 2 kHz -> ratio %.4f (want 1.21 +/- 0.02)", ratio));
  }

  std::printf("%d criterion line(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
