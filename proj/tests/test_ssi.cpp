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

#include "test_support.hpp"
#include "vtlssi/errors.hpp"
#include "vtlssi/representation.hpp"
#include "vtlssi/ssi.hpp"
#include "vtlssi/synth.hpp"
#include "vtlssi/vtl.hpp"

using namespace vtlssi;

namespace {

// Two-channel axis whose centres are exactly the probe frequencies.
FrequencyAxis probe_axis(double lo, double hi) {
  return make_axis(AxisKind::kLog10Hz, 2, lo, hi);
}

}  // namespace

TEST_CASE("weight at the boundary, half way and unvoiced") {
  CHECK(ssi_weight(probe_axis(318.5, 637.0), SsiParams(3.5, 182.0)) ==
        std::vector<double>{0.5, 1.0});
  for (double h : {0.5, 3.5, 6.0}) {
    const auto w = ssi_weight(canonical_erb_axis(), SsiParams(h, 0.0));
    CHECK(std::all_of(w.begin(), w.end(), [](double v) { return v == 1.0; }));
  }
}

TEST_CASE("weight is bounded, monotone and saturates exactly") {
  const auto axis = canonical_erb_axis();
  for (double f0 : {60.0, 101.0, 182.0, 250.0, 400.0}) {
    for (double h : {0.5, 1.0, 2.5, 3.5, 6.0}) {
      CAPTURE(f0);
      CAPTURE(h);
      const auto w = ssi_weight(axis, SsiParams(h, f0));
      for (std::size_t c = 0; c < w.size(); ++c) {
        CHECK(w[c] >= 0.0);
        CHECK(w[c] <= 1.0);
        if (c > 0) CHECK(w[c] >= w[c - 1]);
        if (axis.center_freq(c) >= h * f0) {
          CHECK(w[c] == 1.0);
        } else {
          CHECK(w[c] < 1.0);
        }
      }
      // Larger f0 or larger h_max never raises a weight.
      const auto w_f0 = ssi_weight(axis, SsiParams(h, f0 * 1.1));
      const auto w_h = ssi_weight(axis, SsiParams(h * 1.1, f0));
      for (std::size_t c = 0; c < w.size(); ++c) {
        CHECK(w_f0[c] <= w[c]);
        CHECK(w_h[c] <= w[c]);
      }
    }
  }
}

TEST_CASE("SsiParams validation") {
  CHECK_THROWS_AS(SsiParams(0.0, 100.0), ConfigError);
  CHECK_THROWS_AS(SsiParams(-1.0, 100.0), ConfigError);
  CHECK_THROWS_AS(SsiParams(3.5, -1.0), ConfigError);
  CHECK_NOTHROW(SsiParams(3.5, 0.0));
}

TEST_CASE("apply_weight") {
  const auto axis = make_axis(AxisKind::kLog10Hz, 4, 100.0, 800.0);
  const Spectrum s({-40.0, -10.0, -25.0, -30.0}, axis, Compression::log());
  SUBCASE("ones leave the spectrum unchanged") {
    const auto out = apply_weight(s, std::vector<double>(4, 1.0));
    CHECK(out.values() == s.values());
    CHECK(out.compression() == s.compression());
    CHECK(out.axis() == s.axis());
  }
  SUBCASE("zeros give the baseline floor") {
    const auto out = apply_weight(s, std::vector<double>(4, 0.0));
    CHECK(out.values() == std::vector<double>(4, -40.0));
  }
  SUBCASE("weights scale the height above the floor") {
    const auto out = apply_weight(s, std::vector<double>{1.0, 0.5, 0.2, 1.0});
    CHECK(out[1] == doctest::Approx(-25.0));
    CHECK(out[2] == doctest::Approx(-37.0));
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(apply_weight(s, std::vector<double>(3, 1.0)), InputError);
  }
}

TEST_CASE("weighting a 182 Hz vowel suppresses the first harmonic") {
  AnalysisConfig config;
  const auto spec = baseline_vowel(Vowel::kA, 182.0);
  const Spectrum ep = analyze_signal(synth_vowel(spec), spec.fs,
                                     Representation::parse("Ep"), config);
  const Spectrum weighted = apply_ssi(ep, 182.0, 3.5);
  const auto& axis = ep.axis();
  std::size_t c = 0;
  for (std::size_t k = 1; k < axis.channels(); ++k) {
    if (std::abs(axis.center_freq(k) - 182.0) < std::abs(axis.center_freq(c) - 182.0)) c = k;
  }
  const double floor = *std::min_element(ep.values().begin(), ep.values().end());
  const double factor = (weighted[c] - floor) / (ep[c] - floor);
  CHECK(factor == doctest::Approx(182.0 / 637.0).epsilon(0.03));
  CHECK(factor == doctest::Approx(axis.center_freq(c) / 637.0).epsilon(1e-12));
}

TEST_CASE("F0 estimates of synthetic vowels") {
  for (Vowel v : kAllVowels) {
    CAPTURE(to_string(v));
    const auto male = estimate_f0(synth_vowel(baseline_vowel(v, 101.0)), 48000.0);
    REQUIRE(male.has_value());
    CHECK(std::abs(*male - 101.0) <= 2.0);
    const auto female = estimate_f0(synth_vowel(baseline_vowel(v, 182.0)), 48000.0);
    REQUIRE(female.has_value());
    CHECK(std::abs(*female - 182.0) <= 4.0);
  }
}

TEST_CASE("F0 of a filtered 101 Hz pulse train") {
  const auto pulses = vtlssi::testing::pulse_train(101.0, 48000.0, 0.3);
  // One-pole low-pass as an arbitrary formant-like filter.
  std::vector<double> y(pulses.size());
  double state = 0.0;
  for (std::size_t n = 0; n < y.size(); ++n) y[n] = state = 0.9 * state + pulses[n];
  const auto f0 = estimate_f0(y, 48000.0);
  REQUIRE(f0.has_value());
  CHECK(std::abs(*f0 - 101.0) <= 2.0);
}

TEST_CASE("F0 estimator: silence and short input") {
  CHECK_FALSE(estimate_f0(std::vector<double>(9600, 0.0), 48000.0).has_value());
  CHECK_THROWS_AS(estimate_f0(std::vector<double>(1000, 0.0), 48000.0), InputError);
}

TEST_CASE("a 10% F0 error moves the weighted pair shift by under half a channel") {
  AnalysisConfig config;
  const Representation ep = Representation::parse("Ep");
  const auto pair = pair_demo_speakers();
  for (Vowel v : kAllVowels) {
    CAPTURE(to_string(v));
    std::vector<Spectrum> spectra;
    for (const auto& sp : pair) {
      auto spec = scale_vtl(baseline_vowel(v, sp.f0), sp.alpha);
      spectra.push_back(analyze_signal(synth_vowel(spec), spec.fs, ep, config));
    }
    const double f_female = pair[0].f0, f_male = pair[1].f0;
    const double ref = xcorr_shift(apply_ssi(spectra[1], f_male, 3.5),
                                   apply_ssi(spectra[0], f_female, 3.5));
    for (double scale : {0.9, 1.1}) {
      const double moved =
          xcorr_shift(apply_ssi(spectra[1], f_male * scale, 3.5),
                      apply_ssi(spectra[0], f_female * scale, 3.5));
      CAPTURE(scale);
      CHECK(std::abs(moved - ref) < 0.5);
    }
  }
}
