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

#include <cstddef>
#include <string_view>
#include <vector>

namespace vtlssi {

// Glasberg & Moore ERB_N-number scale: 21.4 * log10(0.00437 f + 1).
double hz_to_erbn(double hz);
double erbn_to_hz(double erbn);

// Equivalent rectangular bandwidth in Hz at centre frequency `hz`
// (24.7 * (0.00437 f + 1)).
double erb_bandwidth_hz(double hz);

// O'Shaughnessy mel scale: 2595 * log10(1 + f / 700).
double hz_to_mel(double hz);
double mel_to_hz(double mel);

enum class AxisKind {
  kErbLinear,
  kLog10Hz,
  kMelLinear,
  // FFT bin grid. The only kind that admits f_lo == 0.
  kLinearHz,
};

std::string_view to_string(AxisKind kind);

// Channel grid mapping channel index to centre frequency. Channels are
// equally spaced in the kind's native coordinate (ERB_N-number, log10 Hz,
// mel, or Hz) and the endpoints land exactly on f_lo and f_hi.
class FrequencyAxis {
 public:
  FrequencyAxis(AxisKind kind, std::size_t channels, double f_lo, double f_hi);

  AxisKind kind() const { return kind_; }
  std::size_t channels() const { return channels_; }
  double f_lo() const { return f_lo_; }
  double f_hi() const { return f_hi_; }

  double center_freq(std::size_t channel) const;
  std::vector<double> center_freqs() const;

  // Native coordinate of a frequency and the spacing between channels in
  // that coordinate.
  double to_native(double hz) const;
  double from_native(double native) const;
  double native_spacing() const;

  bool operator==(const FrequencyAxis& other) const = default;

 private:
  AxisKind kind_;
  std::size_t channels_;
  double f_lo_;
  double f_hi_;
};

// Validating factory; throws ConfigError on channels < 2 or bad bounds.
FrequencyAxis make_axis(AxisKind kind, std::size_t channels, double f_lo,
                        double f_hi);

// The analysis grid used throughout: 100 ERB-spaced channels, 100-8000 Hz.
FrequencyAxis canonical_erb_axis();
// 100 log10-spaced channels over the same range (Fourier spectra).
FrequencyAxis canonical_log_axis();
// 100 mel-spaced channels over the same range (upsampled Mel spectra).
FrequencyAxis canonical_mel_axis();

}  // namespace vtlssi
