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

// Named spectral representations ("Ep", "Ep_SSI", "F_log", "M_SSI_0.4",
// ...) and the analysis chain that produces each one from a waveform.

#include <span>
#include <string>
#include <string_view>

#include "vtlssi/axis.hpp"
#include "vtlssi/spectrum.hpp"
#include "vtlssi/vtl.hpp"

namespace vtlssi {

enum class SpectrumBase {
  kEp,       // gammatone excitation pattern, ERB axis
  kFourier,  // STFT magnitude, log10-Hz axis
  kMel,      // 25-filter Mel spectrum upsampled to 100 mel channels
  kWorld,    // externally supplied spectrum, log10-Hz axis
};

struct Representation {
  SpectrumBase base = SpectrumBase::kEp;
  bool ssi = false;
  Compression compression = Compression::none();

  // Grammar: <base>[_SSI][_<log|P>] with base in {Ep, F, M, W} and P in
  // 0.1 ... 1.0. F, M and W require a compression; a bare Ep is the linear
  // excitation pattern ("Ep_lin" is accepted as a synonym).
  static Representation parse(std::string_view id);
  std::string id() const;

  Representation unweighted() const {
    Representation r = *this;
    r.ssi = false;
    return r;
  }
  bool operator==(const Representation& other) const = default;
};

struct AnalysisConfig {
  double fs = 48000.0;
  std::size_t channels = 100;
  double f_lo = 100.0;
  double f_hi = 8000.0;
  double ep_frame_period = 0.0005;
  double half_width = 0.025;
  double stft_window = 0.025;
  double stft_hop = 0.005;
  std::size_t mel_filters = 25;
  double h_max = 3.5;
  XcorrOptions xcorr;

  // Axis every spectrum of `base` ends up on.
  FrequencyAxis target_axis(SpectrumBase base) const;
};

// Unweighted representation of a waveform. F and M: spectrogram,
// compression, +/- half_width average around the signal centre, resampling
// onto target_axis. Ep: the linear excitation pattern is averaged first and
// the average is then compressed, if the representation asks for it.
// Signals at a rate other than config.fs are linearly resampled first (a
// warning goes to stderr). kWorld cannot be computed from audio and throws
// ConfigError.
Spectrum analyze_signal(std::span<const double> signal, double fs,
                        const Representation& rep,
                        const AnalysisConfig& config);

// Compresses and resamples an externally computed linear amplitude
// spectrum (e.g. a vocoder envelope) onto target_axis(rep.base).
Spectrum ingest_spectrum(const Spectrum& linear, const Representation& rep,
                         const AnalysisConfig& config);

// SSI weighting with the given F0 (0 = unvoiced, weight of one).
Spectrum apply_ssi(const Spectrum& s, double f0, double h_max);

}  // namespace vtlssi
