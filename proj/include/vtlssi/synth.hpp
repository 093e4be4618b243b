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

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace vtlssi {

enum class Vowel { kA, kI, kU, kE, kO };

inline constexpr std::array<Vowel, 5> kAllVowels = {
    Vowel::kA, Vowel::kI, Vowel::kU, Vowel::kE, Vowel::kO};

std::string_view to_string(Vowel v);
// Accepts "a", "i", "u", "e", "o"; throws InputError otherwise.
Vowel parse_vowel(std::string_view s);

inline constexpr double kBaselineVtlCm = 16.0;

struct VowelSpec {
  Vowel vowel = Vowel::kA;
  std::array<double, 4> formants{};
  std::array<double, 4> bandwidths{};
  double f0 = 100.0;
  double alpha = 1.0;
  double vtl_cm = kBaselineVtlCm;
  double duration = 0.4;
  double fs = 48000.0;
};

// Adult-male formant table at alpha = 1 with bandwidths 60/90/120/150 Hz.
VowelSpec baseline_vowel(Vowel v, double f0, double duration = 0.4,
                         double fs = 48000.0);

// Shortens the tract by 1/alpha: formants and bandwidths scale by alpha,
// vtl_cm divides by alpha. Throws ConfigError if alpha <= 0 or a scaled
// formant reaches fs / 2.
VowelSpec scale_vtl(const VowelSpec& spec, double alpha);

// Rosenberg glottal pulse train (opening 0.5, closing 0.1 of each period,
// fractional periods carried in a phase accumulator) through a cascade of
// four unity-DC-gain two-pole resonators, peak-normalised to 0.5.
std::vector<double> synth_vowel(const VowelSpec& spec);

// Impulse response of the resonator cascade alone.
std::vector<double> vowel_impulse_response(const VowelSpec& spec,
                                           std::size_t length);

struct SpeakerSpec {
  std::string id;
  double f0 = 100.0;
  double alpha = 1.0;
};

// One manifest row per utterance.
struct ManifestEntry {
  std::string speaker_id;
  Vowel vowel = Vowel::kA;
  double f0_hz = 0.0;
  double alpha = 1.0;
  double vtl_cm = kBaselineVtlCm;
  std::filesystem::path path;
  // Optional externally computed spectrum (CSV) for the W representation.
  std::filesystem::path spectrum_path;

  std::string utterance_id() const;
};

// Eight speakers with alpha 0.80 ... 1.25 and F0 rising linearly from
// 100 Hz (longest tract) to 220 Hz (shortest).
std::vector<SpeakerSpec> default_speakers();

// Female (15.0 cm, 182 Hz) and male (18.5 cm, 101 Hz) pair.
std::vector<SpeakerSpec> pair_demo_speakers();

struct CorpusOptions {
  double duration = 0.4;
  double fs = 48000.0;
  double baseline_vtl_cm = kBaselineVtlCm;
};

// Synthesises every speaker x vowel into `out_dir` as 16-bit WAV, writes
// `out_dir/manifest.csv` and returns its rows.
std::vector<ManifestEntry> make_corpus(const std::vector<SpeakerSpec>& speakers,
                                       const std::vector<Vowel>& vowels,
                                       const std::filesystem::path& out_dir,
                                       const CorpusOptions& options = {});

// Manifest CSV: speaker_id,vowel,f0_hz,alpha,vtl_cm,path plus an optional
// spectrum_path column. Relative paths are resolved against the manifest's
// directory on read.
void write_manifest(const std::filesystem::path& file,
                    const std::vector<ManifestEntry>& entries);
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& file);

}  // namespace vtlssi
