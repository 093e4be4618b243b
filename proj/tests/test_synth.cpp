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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "test_support.hpp"
#include "vtlssi/errors.hpp"
#include "vtlssi/frontends.hpp"
#include "vtlssi/synth.hpp"
#include "vtlssi/vtl.hpp"
#include "vtlssi/wav.hpp"

using namespace vtlssi;

namespace {

// |H(f)| of a finite impulse response by direct evaluation.
double magnitude(const std::vector<double>& h, double f, double fs) {
  std::complex<double> acc = 0.0;
  const double w = -2.0 * std::numbers::pi * f / fs;
  for (std::size_t n = 0; n < h.size(); ++n) {
    acc += h[n] * std::polar(1.0, w * static_cast<double>(n));
  }
  return std::abs(acc);
}

// Frequency of the largest |H| on a 0.5 Hz grid over [lo, hi].
double envelope_peak(const std::vector<double>& h, double lo, double hi,
                     double fs) {
  double best_f = lo, best = -1.0;
  for (double f = lo; f <= hi; f += 0.5) {
    const double m = magnitude(h, f, fs);
    if (m > best) {
      best = m;
      best_f = f;
    }
  }
  return best_f;
}

}  // namespace

TEST_CASE("vowel names") {
  for (Vowel v : kAllVowels) CHECK(parse_vowel(to_string(v)) == v);
  CHECK_THROWS_AS(parse_vowel("y"), InputError);
}

TEST_CASE("baseline table") {
  const auto a = baseline_vowel(Vowel::kA, 120.0);
  CHECK(a.formants == std::array<double, 4>{700, 1200, 2600, 3400});
  CHECK(a.bandwidths == std::array<double, 4>{60, 90, 120, 150});
  CHECK(baseline_vowel(Vowel::kU, 120.0).formants ==
        std::array<double, 4>{330, 800, 2300, 3300});
  CHECK(a.vtl_cm == 16.0);
  CHECK(a.fs == 48000.0);
}

TEST_CASE("scale_vtl") {
  const auto a = baseline_vowel(Vowel::kA, 120.0);
  const auto same = scale_vtl(a, 1.0);
  CHECK(same.formants == a.formants);
  CHECK(same.vtl_cm == a.vtl_cm);
  const auto s = scale_vtl(a, 1.23);
  CHECK(s.formants[0] == doctest::Approx(861.0));
  CHECK(s.bandwidths[3] == doctest::Approx(150.0 * 1.23));
  CHECK(s.vtl_cm == doctest::Approx(16.0 / 1.23));
  CHECK_THROWS_AS(scale_vtl(a, 0.0), ConfigError);
  CHECK_THROWS_AS(scale_vtl(a, 8.0), ConfigError);  // F4 past Nyquist
}

TEST_CASE("synthesis is deterministic and peak-normalised") {
  const auto spec = scale_vtl(baseline_vowel(Vowel::kE, 137.5), 1.08);
  const auto x = synth_vowel(spec);
  CHECK(x == synth_vowel(spec));
  CHECK(x.size() == static_cast<std::size_t>(spec.duration * spec.fs));
  double peak = 0.0;
  for (double v : x) peak = std::max(peak, std::abs(v));
  CHECK(peak == 0.5);
}

TEST_CASE("synthesis rejects bad specs") {
  auto spec = baseline_vowel(Vowel::kA, 100.0);
  spec.duration = 0.1;
  CHECK_THROWS_AS(synth_vowel(spec), ConfigError);
  spec = baseline_vowel(Vowel::kA, 100.0, 0.4, 7000.0);
  CHECK_THROWS_AS(synth_vowel(spec), ConfigError);
  spec = baseline_vowel(Vowel::kA, 0.0);
  CHECK_THROWS_AS(synth_vowel(spec), ConfigError);
}

TEST_CASE("F1 of /a/ shows in the STFT envelope") {
  const auto spec = baseline_vowel(Vowel::kA, 100.0);
  const auto sg = stft_spectrum(synth_vowel(spec), spec.fs);
  std::vector<double> mean(sg.channels(), 0.0);
  for (std::size_t k = 0; k < sg.frames(); ++k) {
    for (std::size_t c = 0; c < sg.channels(); ++c) mean[c] += sg.at(k, c);
  }
  std::size_t best = 0;
  for (std::size_t c = 0; c < sg.channels(); ++c) {
    const double f = sg.axis().center_freq(c);
    if (f < 400.0 || f > 1000.0) continue;
    if (best == 0 || mean[c] > mean[best]) best = c;
  }
  CHECK(std::abs(sg.axis().center_freq(best) - 700.0) <= erb_bandwidth_hz(700.0));
}

TEST_CASE("envelope peaks move by alpha") {
  for (Vowel v : kAllVowels) {
    for (double alpha : {0.8, 1.12, 1.25}) {
      CAPTURE(to_string(v));
      CAPTURE(alpha);
      const auto base = baseline_vowel(v, 100.0);
      const auto scaled = scale_vtl(base, alpha);
      const auto h0 = vowel_impulse_response(base, 4800);
      const auto h1 = vowel_impulse_response(scaled, 4800);
      for (std::size_t k = 0; k < 2; ++k) {
        const double f = base.formants[k];
        const double p0 = envelope_peak(h0, 0.85 * f, 1.15 * f, base.fs);
        const double p1 =
            envelope_peak(h1, 0.85 * alpha * f, 1.15 * alpha * f, base.fs);
        CHECK(std::abs(p1 / p0 / alpha - 1.0) < 0.03);
      }
    }
  }
}

TEST_CASE("scaling the tract translates the log-frequency envelope") {
  const double alpha = 1.15;
  const auto base = baseline_vowel(Vowel::kO, 100.0);
  const auto env = [&](const VowelSpec& spec) {
    const auto h = vowel_impulse_response(spec, 1200);
    const auto sg = stft_spectrum(h, spec.fs);
    const Spectrum s(std::vector<double>(sg.frame(0).begin(), sg.frame(0).end()),
                     sg.axis());
    return resample_to_axis(compress(s, Compression::log()), canonical_log_axis());
  };
  const double expect = 99.0 * std::log10(alpha) / std::log10(80.0);
  const double got = xcorr_shift(env(base), env(scale_vtl(base, alpha)));
  CHECK(std::abs(got - expect) <= 0.3);
}

TEST_CASE("speaker sets") {
  const auto speakers = default_speakers();
  REQUIRE(speakers.size() == 8);
  CHECK(speakers.front().alpha == 0.80);
  CHECK(speakers.back().alpha == 1.25);
  CHECK(speakers.front().f0 == 100.0);
  CHECK(speakers.back().f0 == 220.0);
  for (std::size_t i = 1; i < speakers.size(); ++i) {
    CHECK(speakers[i].alpha > speakers[i - 1].alpha);
    CHECK(speakers[i].f0 > speakers[i - 1].f0);
  }
  const auto pair = pair_demo_speakers();
  REQUIRE(pair.size() == 2);
  CHECK(pair[0].f0 == 182.0);
  CHECK(pair[1].f0 == 101.0);
  CHECK(kBaselineVtlCm / pair[0].alpha == doctest::Approx(15.0));
  CHECK(kBaselineVtlCm / pair[1].alpha == doctest::Approx(18.5));
  CHECK(pair[0].alpha / pair[1].alpha == doctest::Approx(18.5 / 15.0));
}

TEST_CASE("corpus on disk") {
  vtlssi::testing::TempDir dir;
  const std::vector<Vowel> vowels(kAllVowels.begin(), kAllVowels.end());
  CorpusOptions opt;
  opt.duration = 0.2;
  const auto entries = make_corpus(default_speakers(), vowels, dir.path(), opt);
  CHECK(entries.size() == 40);
  const auto back = read_manifest(dir / "manifest.csv");
  REQUIRE(back.size() == 40);
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].speaker_id == entries[i].speaker_id);
    CHECK(back[i].vowel == entries[i].vowel);
    CHECK(back[i].vtl_cm == entries[i].vtl_cm);
    CHECK(back[i].f0_hz == entries[i].f0_hz);
    CHECK(std::filesystem::equivalent(back[i].path, entries[i].path));
  }
  for (const auto& e : back) {
    if (e.alpha == 1.0) CHECK(e.vtl_cm == 16.0);
  }
  const Audio audio = read_wav(back[0].path);
  CHECK(audio.fs == 48000.0);
  CHECK(audio.samples.size() == 9600);
  CHECK_THROWS_AS(make_corpus({}, vowels, dir.path(), opt), ConfigError);
  CHECK_THROWS_AS(make_corpus({{"x", 100.0, -1.0}}, vowels, dir.path(), opt),
                  ConfigError);
}
