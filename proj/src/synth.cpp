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

#include "vtlssi/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "vtlssi/csv.hpp"
#include "vtlssi/errors.hpp"
#include "vtlssi/wav.hpp"

namespace vtlssi {

namespace {

constexpr double kPi = std::numbers::pi;

// Rosenberg pulse shape as a fraction of the period.
constexpr double kOpening = 0.5;
constexpr double kClosing = 0.1;
// Period average of the pulse; subtracted so the source has no DC.
constexpr double kPulseMean = 0.5 * kOpening + kClosing * 2.0 / kPi;

double rosenberg(double phase) {
  if (phase < kOpening) return 0.5 * (1.0 - std::cos(kPi * phase / kOpening));
  if (phase < kOpening + kClosing) {
    return std::cos(0.5 * kPi * (phase - kOpening) / kClosing);
  }
  return 0.0;
}

// Two-pole resonator with unity gain at DC.
struct Resonator {
  double a, b, c;
  double y1 = 0.0, y2 = 0.0;

  Resonator(double freq, double bandwidth, double fs) {
    c = -std::exp(-2.0 * kPi * bandwidth / fs);
    b = 2.0 * std::exp(-kPi * bandwidth / fs) * std::cos(2.0 * kPi * freq / fs);
    a = 1.0 - b - c;
  }

  double step(double x) {
    const double y = a * x + b * y1 + c * y2;
    y2 = y1;
    y1 = y;
    return y;
  }
};

void validate(const VowelSpec& spec) {
  if (!(spec.fs > 0.0)) throw ConfigError("VowelSpec: fs must be > 0");
  if (!(spec.f0 > 0.0)) throw ConfigError("VowelSpec: f0 must be > 0");
  if (!(spec.alpha > 0.0)) throw ConfigError("VowelSpec: alpha must be > 0");
  if (spec.duration < 0.2) {
    throw ConfigError("VowelSpec: duration must be >= 0.2 s, got " +
                      std::to_string(spec.duration));
  }
  for (std::size_t k = 0; k < 4; ++k) {
    if (k > 0 && !(spec.formants[k] > spec.formants[k - 1])) {
      throw ConfigError("VowelSpec: formants must be strictly increasing");
    }
  }
  const double top = spec.formants[3] + 2.0 * spec.bandwidths[3];
  if (spec.fs < 2.0 * top) {
    throw ConfigError("VowelSpec: fs " + std::to_string(spec.fs) +
                      " Hz too low for F4 + 2 B4 = " + std::to_string(top) +
                      " Hz");
  }
}

std::vector<double> run_cascade(const VowelSpec& spec,
                                std::vector<double> signal) {
  for (std::size_t k = 0; k < 4; ++k) {
    Resonator r(spec.formants[k], spec.bandwidths[k], spec.fs);
    for (double& s : signal) s = r.step(s);
  }
  return signal;
}

}  // namespace

std::string_view to_string(Vowel v) {
  switch (v) {
    case Vowel::kA:
      return "a";
    case Vowel::kI:
      return "i";
    case Vowel::kU:
      return "u";
    case Vowel::kE:
      return "e";
    case Vowel::kO:
      return "o";
  }
  return "?";
}

Vowel parse_vowel(std::string_view s) {
  for (Vowel v : kAllVowels) {
    if (to_string(v) == s) return v;
  }
  throw InputError("unknown vowel '" + std::string(s) +
                   "' (expected one of a, i, u, e, o)");
}

VowelSpec baseline_vowel(Vowel v, double f0, double duration, double fs) {
  VowelSpec spec;
  spec.vowel = v;
  switch (v) {
    case Vowel::kA:
      spec.formants = {700, 1200, 2600, 3400};
      break;
    case Vowel::kI:
      spec.formants = {300, 2300, 3000, 3700};
      break;
    case Vowel::kU:
      spec.formants = {330, 800, 2300, 3300};
      break;
    case Vowel::kE:
      spec.formants = {480, 1900, 2600, 3500};
      break;
    case Vowel::kO:
      spec.formants = {500, 900, 2500, 3400};
      break;
  }
  spec.bandwidths = {60, 90, 120, 150};
  spec.f0 = f0;
  spec.alpha = 1.0;
  spec.vtl_cm = kBaselineVtlCm;
  spec.duration = duration;
  spec.fs = fs;
  return spec;
}

VowelSpec scale_vtl(const VowelSpec& spec, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ConfigError("scale_vtl: alpha must be > 0, got " +
                      std::to_string(alpha));
  }
  if (alpha == 1.0) return spec;
  VowelSpec out = spec;
  for (std::size_t k = 0; k < 4; ++k) {
    out.formants[k] *= alpha;
    out.bandwidths[k] *= alpha;
    if (out.formants[k] >= spec.fs / 2.0) {
      throw ConfigError("scale_vtl: alpha " + std::to_string(alpha) +
                        " puts F" + std::to_string(k + 1) + " at " +
                        std::to_string(out.formants[k]) +
                        " Hz, at or above Nyquist");
    }
  }
  out.alpha = spec.alpha * alpha;
  out.vtl_cm = spec.vtl_cm / alpha;
  return out;
}

std::vector<double> synth_vowel(const VowelSpec& spec) {
  validate(spec);
  const auto n = static_cast<std::size_t>(std::llround(spec.duration * spec.fs));
  std::vector<double> source(n);
  const double step = spec.f0 / spec.fs;
  double phase = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    source[i] = rosenberg(phase) - kPulseMean;
    phase += step;
    if (phase >= 1.0) phase -= 1.0;
  }
  std::vector<double> out = run_cascade(spec, std::move(source));
  double peak = 0.0;
  for (double v : out) peak = std::max(peak, std::abs(v));
  if (peak > 0.0) {
    for (double& v : out) v = v / peak * 0.5;
  }
  return out;
}

std::vector<double> vowel_impulse_response(const VowelSpec& spec,
                                           std::size_t length) {
  validate(spec);
  std::vector<double> impulse(length, 0.0);
  if (length) impulse[0] = 1.0;
  return run_cascade(spec, std::move(impulse));
}

std::string ManifestEntry::utterance_id() const {
  return speaker_id + "_" + std::string(to_string(vowel));
}

std::vector<SpeakerSpec> default_speakers() {
  constexpr std::array<double, 8> kAlphas = {0.80, 0.88, 0.95, 1.00,
                                             1.05, 1.12, 1.20, 1.25};
  std::vector<SpeakerSpec> out;
  for (std::size_t i = 0; i < kAlphas.size(); ++i) {
    const double f0 = 100.0 + 120.0 * static_cast<double>(i) /
                                  static_cast<double>(kAlphas.size() - 1);
    out.push_back({"s" + std::to_string(i + 1), f0, kAlphas[i]});
  }
  return out;
}

std::vector<SpeakerSpec> pair_demo_speakers() {
  return {{"female", 182.0, kBaselineVtlCm / 15.0},
          {"male", 101.0, kBaselineVtlCm / 18.5}};
}

std::vector<ManifestEntry> make_corpus(const std::vector<SpeakerSpec>& speakers,
                                       const std::vector<Vowel>& vowels,
                                       const std::filesystem::path& out_dir,
                                       const CorpusOptions& options) {
  if (speakers.empty() || vowels.empty()) {
    throw ConfigError("make_corpus: speaker and vowel lists must be non-empty");
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw InputError("cannot create corpus directory " + out_dir.string() +
                     ": " + ec.message());
  }
  std::vector<ManifestEntry> entries;
  for (const SpeakerSpec& speaker : speakers) {
    if (!(speaker.alpha > 0.0)) {
      throw ConfigError("speaker " + speaker.id + ": alpha must be > 0");
    }
    for (Vowel v : vowels) {
      VowelSpec spec = baseline_vowel(v, speaker.f0, options.duration,
                                      options.fs);
      spec.vtl_cm = options.baseline_vtl_cm;
      spec = scale_vtl(spec, speaker.alpha);
      ManifestEntry entry{speaker.id, v, speaker.f0, speaker.alpha,
                          spec.vtl_cm, {}, {}};
      entry.path = entry.utterance_id() + ".wav";
      write_wav(out_dir / entry.path, synth_vowel(spec), spec.fs);
      entries.push_back(entry);
    }
  }
  write_manifest(out_dir / "manifest.csv", entries);
  for (auto& e : entries) e.path = out_dir / e.path;
  return entries;
}

void write_manifest(const std::filesystem::path& file,
                    const std::vector<ManifestEntry>& entries) {
  bool with_spectra = false;
  for (const auto& e : entries) with_spectra |= !e.spectrum_path.empty();
  csv::Writer w;
  std::vector<std::string> header = {"speaker_id", "vowel",  "f0_hz",
                                     "alpha",      "vtl_cm", "path"};
  if (with_spectra) header.push_back("spectrum_path");
  w.row(header);
  for (const auto& e : entries) {
    std::vector<std::string> row = {
        e.speaker_id,                 std::string(to_string(e.vowel)),
        csv::format_number(e.f0_hz),  csv::format_number(e.alpha),
        csv::format_number(e.vtl_cm), e.path.generic_string()};
    if (with_spectra) row.push_back(e.spectrum_path.generic_string());
    w.row(row);
  }
  csv::write_atomic(file, w.str());
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& file) {
  const csv::Table t = csv::read(file);
  const std::size_t c_id = t.column("speaker_id");
  const std::size_t c_vowel = t.column("vowel");
  const std::size_t c_f0 = t.column("f0_hz");
  const std::size_t c_alpha = t.column("alpha");
  const std::size_t c_vtl = t.column("vtl_cm");
  const std::size_t c_path = t.column("path");
  const bool with_spectra = t.has_column("spectrum_path");
  const std::filesystem::path base = file.parent_path();
  std::vector<ManifestEntry> out;
  for (const auto& row : t.rows) {
    ManifestEntry e;
    e.speaker_id = row[c_id];
    e.vowel = parse_vowel(row[c_vowel]);
    // Blank F0 / alpha are allowed for measured corpora.
    e.f0_hz = row[c_f0].empty() ? 0.0 : csv::parse_number(row[c_f0], "f0_hz");
    e.alpha = row[c_alpha].empty() ? std::nan("")
                                   : csv::parse_number(row[c_alpha], "alpha");
    e.vtl_cm = csv::parse_number(row[c_vtl], "vtl_cm");
    std::filesystem::path p = row[c_path];
    e.path = p.is_absolute() ? p : base / p;
    if (with_spectra) {
      const std::filesystem::path sp = row[t.column("spectrum_path")];
      if (!sp.empty()) e.spectrum_path = sp.is_absolute() ? sp : base / sp;
    }
    out.push_back(std::move(e));
  }
  if (out.empty()) throw InputError(file.string() + ": manifest has no rows");
  return out;
}

}  // namespace vtlssi
