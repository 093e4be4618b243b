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

#pragma once

// Evaluation harness: correlation and RMS against measured lengths,
// random-exclusion stability trials and the h_max sweep.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vtlssi/representation.hpp"
#include "vtlssi/synth.hpp"
#include "vtlssi/vtl.hpp"

namespace vtlssi {

// Pearson product-moment correlation. Throws InputError on length mismatch
// or fewer than 3 points, DegenerateError on zero variance.
double pearson_r(std::span<const double> x, std::span<const double> y);

// sqrt(mean((est - meas)^2)).
double rms_error(std::span<const double> est, std::span<const double> meas);

// Where the F0 for SSI weighting comes from.
struct F0Source {
  enum class Kind { kAuto, kManifest, kFixed, kTable };
  Kind kind = Kind::kAuto;
  double value = 0.0;
  // utterance_id -> F0 in Hz, for kTable.
  std::map<std::string, double> table;

  // "auto", "manifest", a number, or a path to a CSV with columns
  // utterance_id,f0_hz.
  static F0Source parse(const std::string& spec);
};

// A manifest plus lazily computed, cached per-utterance spectra and F0s.
class Corpus {
 public:
  Corpus(std::vector<ManifestEntry> entries, AnalysisConfig config,
         F0Source f0_source = {});

  const std::vector<ManifestEntry>& entries() const { return entries_; }
  const AnalysisConfig& config() const { return config_; }

  // Speaker ids in first-appearance order.
  const std::vector<std::string>& speakers() const { return speakers_; }
  // Vowels present, in a/i/u/e/o order.
  const std::vector<Vowel>& vowels() const { return vowels_; }

  // Unweighted spectra for every utterance (rep.ssi is ignored).
  const std::vector<Spectrum>& spectra(const Representation& rep);

  // F0 used for weighting utterance `u`; 0 when unvoiced.
  double f0(std::size_t u);

  // Spectrum of utterance `u` as `rep` at `h_max` (h_max is ignored when
  // rep.ssi is false).
  Spectrum spectrum(std::size_t u, const Representation& rep, double h_max);

 private:
  const std::vector<double>& samples(std::size_t u);

  std::vector<ManifestEntry> entries_;
  AnalysisConfig config_;
  F0Source f0_source_;
  std::vector<std::string> speakers_;
  std::vector<Vowel> vowels_;
  std::map<std::string, std::vector<Spectrum>> spectra_;
  std::vector<std::optional<double>> f0_;
  std::vector<std::vector<double>> audio_;
  std::vector<bool> audio_loaded_;
};

// Shift matrices for every vowel over all speakers who produced it.
struct ShiftTables {
  struct PerVowel {
    Vowel vowel;
    // utterance indices in matrix order
    std::vector<std::size_t> utterances;
    ShiftMatrix matrix{0};
  };
  std::vector<PerVowel> vowels;
};

ShiftTables compute_shift_tables(Corpus& corpus, const Representation& rep,
                                 double h_max);

// One (speaker, vowel) point of a full estimation run.
struct EstimatePoint {
  std::size_t utterance;
  std::string speaker_id;
  Vowel vowel;
  double s;
  double l_est;
  double l_meas;
};

struct Estimation {
  std::vector<EstimatePoint> points;
  double q = 0.0;
  double l_bar = 0.0;
};

// Relative shifts per vowel, q fitted jointly over all points, lengths per
// point. Speakers listed in `excluded` are dropped before anything else.
Estimation estimate_lengths(const Corpus& corpus, const ShiftTables& tables,
                            std::span<const std::string> excluded = {});

struct TrialResult {
  std::vector<std::string> excluded;
  double rms_cm = 0.0;
};

struct EvalReport {
  std::string representation_id;
  double h_max = 0.0;
  std::map<Vowel, double> per_vowel_r;  // NaN where undefined
  double all_r = 0.0;
  double rms_cm = 0.0;
  double q = 0.0;
  std::vector<TrialResult> trials;
  Estimation estimation;

  double trial_rms_mean() const;
  double trial_rms_std() const;
};

struct EvalOptions {
  double h_max = 3.5;
  std::size_t trials = 10;
  std::size_t exclude = 3;
  std::uint64_t seed = 1;
};

// Excludes `k` speakers uniformly at random per trial and re-runs the
// estimation on the rest. Throws ConfigError unless speakers > k.
std::vector<TrialResult> exclusion_trials(const Corpus& corpus,
                                          const ShiftTables& tables,
                                          std::size_t k, std::size_t trials,
                                          std::uint64_t seed);

EvalReport evaluate(Corpus& corpus, const Representation& rep,
                    const EvalOptions& options);

struct SweepRow {
  double h_max = 0.0;
  std::map<Vowel, double> per_vowel_r;
  double all_r = 0.0;
  double rms_cm = 0.0;
};

// Runs the pipeline for the SSI-weighted variant of `rep` at every h_max of
// `grid`; h_max == 0 is the unweighted spectrum.
std::vector<SweepRow> hmax_sweep(Corpus& corpus, const Representation& rep,
                                 std::span<const double> grid);

// 0, 0.5, ..., 6.
std::vector<double> default_hmax_grid();

// Every representation constructible from audio: Ep, Ep_SSI and the log
// and power (0.1 ... 1.0) variants of F and M, with and without SSI.
std::vector<Representation> all_audio_representations();

}  // namespace vtlssi
