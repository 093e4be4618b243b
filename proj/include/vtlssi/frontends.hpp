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

// Spectral front ends: gammatone excitation pattern, short-time Fourier
// magnitude, triangular Mel filterbank, compression, time averaging and
// axis resampling.

#include <span>

#include "vtlssi/axis.hpp"
#include "vtlssi/spectrum.hpp"

namespace vtlssi {

// Sample rate every analysis runs at.
inline constexpr double kCanonicalSampleRate = 48000.0;

struct GammatoneOptions {
  // Bandwidth multiplier applied to ERB(f_c).
  double bandwidth_factor = 1.019;
  // Cut-off of the second-order envelope low-pass.
  double envelope_cutoff_hz = 1000.0;
};

// Linear gammatone excitation-pattern spectrogram. `axis` must be
// ERB-linear and fs must be at least twice its upper edge. Frames are
// `frame_period` long; the first starts at sample 0 and a trailing partial
// frame is dropped.
Spectrogram gammatone_ep(std::span<const double> signal, double fs,
                         const FrequencyAxis& axis,
                         double frame_period = 0.0005,
                         const GammatoneOptions& options = {});

// 0.54 - 0.46 cos(2 pi n / (N - 1)).
std::vector<double> hamming_window(std::size_t length);

// Hamming-windowed FFT magnitude on a linear-Hz axis of nfft/2 + 1 bins
// (0..fs/2), with nfft the next power of two >= the window length.
Spectrogram stft_spectrum(std::span<const double> signal, double fs,
                          double window_len = 0.025, double hop = 0.005);

// Triangular filters with unit peak whose centres are equally spaced in mel
// between f_lo and f_hi (both ends are filter centres). Each filter rises
// from the previous centre and falls to the next; the outermost feet sit
// one mel step beyond the end centres.
Spectrogram mel_spectrum(const Spectrogram& stft, std::size_t n_filters = 25,
                         double f_lo = 100.0, double f_hi = 8000.0);

// Relative floor used before 20 log10: values are clamped to
// max(S, kLogFloorRatio * max(S)).
inline constexpr double kLogFloorRatio = 1e-5;

Spectrogram compress(const Spectrogram& sg, Compression mode);
Spectrum compress(const Spectrum& s, Compression mode);

// Per-channel mean over the frames whose centre times fall inside
// [center - half_width, center + half_width].
Spectrum center_average(const Spectrogram& sg, double center,
                        double half_width = 0.025);

// Linear interpolation onto `target`, performed in the target axis's
// native coordinate (log10 Hz for a log axis, mel for a mel axis, ...).
Spectrum resample_to_axis(const Spectrum& s, const FrequencyAxis& target);

// Linear-interpolation resampling of a waveform to a new rate.
std::vector<double> resample_signal(std::span<const double> signal,
                                    double fs_in, double fs_out);

}  // namespace vtlssi
