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

#include "vtlssi/frontends.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "vtlssi/errors.hpp"
#include "vtlssi/kernels.hpp"

namespace vtlssi {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// RBJ cookbook second-order Butterworth low-pass.
void set_lowpass(kernels::GammatoneBank& bank, double cutoff_hz, double fs) {
  const double w0 = kTwoPi * cutoff_hz / fs;
  const double alpha = std::sin(w0) / std::numbers::sqrt2;  // Q = 1/sqrt(2)
  const double cw = std::cos(w0);
  const double a0 = 1.0 + alpha;
  bank.b0 = (1.0 - cw) / 2.0 / a0;
  bank.b1 = (1.0 - cw) / a0;
  bank.b2 = bank.b0;
  bank.a1 = -2.0 * cw / a0;
  bank.a2 = (1.0 - alpha) / a0;
}

kernels::GammatoneBank make_bank(const FrequencyAxis& axis, double fs,
                                 const GammatoneOptions& options) {
  kernels::GammatoneBank bank;
  const std::size_t n = axis.channels();
  bank.pole_re.resize(n);
  bank.pole_im.resize(n);
  bank.gain.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    const double fc = axis.center_freq(c);
    const double bw = options.bandwidth_factor * erb_bandwidth_hz(fc);
    const double radius = std::exp(-kTwoPi * bw / fs);
    const double omega = kTwoPi * fc / fs;
    bank.pole_re[c] = radius * std::cos(omega);
    bank.pole_im[c] = radius * std::sin(omega);
    // Unit complex gain at f_c; the factor 2 restores the amplitude of a
    // real sinusoid in the real part.
    bank.gain[c] = 2.0 * std::pow(1.0 - radius, 4);
  }
  set_lowpass(bank, options.envelope_cutoff_hz, fs);
  return bank;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

double max_value(std::span<const double> values) {
  double mx = 0.0;
  for (double v : values) mx = std::max(mx, v);
  return mx;
}

void compress_in_place(std::vector<double>& values, Compression mode) {
  switch (mode.kind) {
    case Compression::Kind::kNone:
      return;
    case Compression::Kind::kLog: {
      const double mx = max_value(values);
      const double floor =
          mx > 0.0 ? kLogFloorRatio * mx : std::numeric_limits<double>::min();
      for (double& v : values) v = 20.0 * std::log10(std::max(v, floor));
      return;
    }
    case Compression::Kind::kPower:
      if (mode.power == 1.0) return;
      for (double& v : values) v = std::pow(v, mode.power);
      return;
  }
}

}  // namespace

Spectrogram gammatone_ep(std::span<const double> signal, double fs,
                         const FrequencyAxis& axis, double frame_period,
                         const GammatoneOptions& options) {
  if (axis.kind() != AxisKind::kErbLinear) {
    throw ConfigError("gammatone_ep requires an ERB-linear axis");
  }
  if (fs < 2.0 * axis.f_hi()) {
    throw ConfigError("gammatone_ep: sample rate " + std::to_string(fs) +
                      " Hz is below twice the top channel (" +
                      std::to_string(axis.f_hi()) + " Hz)");
  }
  if (!(frame_period > 0.0)) {
    throw ConfigError("gammatone_ep: frame period must be > 0");
  }
  if (signal.empty()) throw InputError("gammatone_ep: empty signal");

  const double frame_len = frame_period * fs;
  const auto frames = static_cast<std::size_t>(
      std::floor(static_cast<double>(signal.size()) / frame_len + 1e-9));
  if (frames == 0) {
    throw InputError("gammatone_ep: signal shorter than one frame");
  }
  std::vector<std::size_t> bounds(frames + 1);
  for (std::size_t k = 0; k <= frames; ++k) {
    bounds[k] = std::min(
        signal.size(),
        static_cast<std::size_t>(std::llround(static_cast<double>(k) * frame_len)));
  }

  const kernels::GammatoneBank bank = make_bank(axis, fs, options);
  std::vector<double> out(frames * axis.channels());
  kernels::active_kernels().gammatone_envelope(bank, signal, bounds, out);
  // The smoothed envelope can dip a hair below zero after the low-pass.
  for (double& v : out) v = std::max(v, 0.0);
  return Spectrogram(std::move(out), frames, axis, frame_period,
                     frame_period / 2.0);
}

std::vector<double> hamming_window(std::size_t length) {
  std::vector<double> w(length, 1.0);
  if (length < 2) return w;
  const double denom = static_cast<double>(length - 1);
  for (std::size_t n = 0; n < length; ++n) {
    w[n] = 0.54 - 0.46 * std::cos(kTwoPi * static_cast<double>(n) / denom);
  }
  return w;
}

Spectrogram stft_spectrum(std::span<const double> signal, double fs,
                          double window_len, double hop) {
  const auto win = static_cast<std::size_t>(std::llround(window_len * fs));
  const auto hop_samples = static_cast<std::size_t>(std::llround(hop * fs));
  if (win < 2 || hop_samples < 1) {
    throw ConfigError("stft_spectrum: window and hop must span samples");
  }
  if (signal.size() < win) {
    throw InputError("stft_spectrum: signal (" + std::to_string(signal.size()) +
                     " samples) shorter than the analysis window (" +
                     std::to_string(win) + ")");
  }
  const std::size_t nfft = next_pow2(win);
  const std::size_t bins = nfft / 2 + 1;
  const std::size_t frames = 1 + (signal.size() - win) / hop_samples;
  const std::vector<double> window = hamming_window(win);

  std::unique_ptr<double, decltype(&fftw_free)> in(
      static_cast<double*>(fftw_malloc(sizeof(double) * nfft)), &fftw_free);
  std::unique_ptr<fftw_complex, decltype(&fftw_free)> spec(
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * bins)),
      &fftw_free);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(nfft), in.get(), spec.get(),
                                FFTW_ESTIMATE);
  }

  std::vector<double> out(frames * bins);
  for (std::size_t k = 0; k < frames; ++k) {
    const std::size_t start = k * hop_samples;
    std::fill(in.get(), in.get() + nfft, 0.0);
    for (std::size_t n = 0; n < win; ++n) {
      in.get()[n] = signal[start + n] * window[n];
    }
    fftw_execute(plan);
    for (std::size_t b = 0; b < bins; ++b) {
      out[k * bins + b] = std::hypot(spec.get()[b][0], spec.get()[b][1]);
    }
  }
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }

  const FrequencyAxis axis = make_axis(AxisKind::kLinearHz, bins, 0.0, fs / 2.0);
  const double period = static_cast<double>(hop_samples) / fs;
  const double first_center = static_cast<double>(win) / (2.0 * fs);
  return Spectrogram(std::move(out), frames, axis, period, first_center);
}

Spectrogram mel_spectrum(const Spectrogram& stft, std::size_t n_filters,
                         double f_lo, double f_hi) {
  if (stft.axis().kind() != AxisKind::kLinearHz) {
    throw InputError("mel_spectrum expects a linear-Hz STFT spectrogram");
  }
  if (stft.compression().kind != Compression::Kind::kNone) {
    throw InputError("mel_spectrum expects an uncompressed spectrogram");
  }
  if (f_hi > stft.axis().f_hi()) {
    throw InputError("mel_spectrum: f_hi above the STFT Nyquist frequency");
  }
  const FrequencyAxis mel_axis =
      make_axis(AxisKind::kMelLinear, n_filters, f_lo, f_hi);
  const double step = mel_axis.native_spacing();
  const double mel_lo = hz_to_mel(f_lo);

  // Dense filter matrix over the STFT bins, n_filters x bins.
  const std::size_t bins = stft.channels();
  std::vector<double> weights(n_filters * bins, 0.0);
  for (std::size_t k = 0; k < n_filters; ++k) {
    const double center = mel_lo + step * static_cast<double>(k);
    const double left = center - step;
    const double right = center + step;
    for (std::size_t b = 0; b < bins; ++b) {
      const double m = hz_to_mel(stft.axis().center_freq(b));
      double w = 0.0;
      if (m > left && m <= center) {
        w = (m - left) / step;
      } else if (m > center && m < right) {
        w = (right - m) / step;
      }
      weights[k * bins + b] = w;
    }
  }

  const auto& dot = kernels::active_kernels().dot;
  std::vector<double> out(stft.frames() * n_filters);
  for (std::size_t t = 0; t < stft.frames(); ++t) {
    const std::span<const double> frame = stft.frame(t);
    for (std::size_t k = 0; k < n_filters; ++k) {
      out[t * n_filters + k] =
          std::max(0.0, dot(weights.data() + k * bins, frame.data(), bins));
    }
  }
  return Spectrogram(std::move(out), stft.frames(), mel_axis,
                     stft.frame_period(), stft.first_center());
}

Spectrogram compress(const Spectrogram& sg, Compression mode) {
  if (sg.compression().kind != Compression::Kind::kNone) {
    throw InputError("compress: spectrogram is already compressed (" +
                     sg.compression().label() + ")");
  }
  std::vector<double> data = sg.data();
  compress_in_place(data, mode);
  return Spectrogram(std::move(data), sg.frames(), sg.axis(),
                     sg.frame_period(), sg.first_center(), mode);
}

Spectrum compress(const Spectrum& s, Compression mode) {
  if (s.compression().kind != Compression::Kind::kNone) {
    throw InputError("compress: spectrum is already compressed (" +
                     s.compression().label() + ")");
  }
  std::vector<double> values = s.values();
  compress_in_place(values, mode);
  return Spectrum(std::move(values), s.axis(), mode);
}

Spectrum center_average(const Spectrogram& sg, double center,
                        double half_width) {
  constexpr double kEps = 1e-9;
  const double lo = center - half_width;
  const double hi = center + half_width;
  const double span_lo = sg.first_center() - sg.frame_period() / 2.0;
  const double span_hi =
      sg.frame_center(sg.frames() - 1) + sg.frame_period() / 2.0;
  if (lo < span_lo - kEps || hi > span_hi + kEps) {
    throw InputError("center_average: window [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "] s outside spectrogram span [" +
                     std::to_string(span_lo) + ", " + std::to_string(span_hi) +
                     "] s");
  }
  std::vector<double> sum(sg.channels(), 0.0);
  std::size_t count = 0;
  for (std::size_t k = 0; k < sg.frames(); ++k) {
    const double t = sg.frame_center(k);
    if (t < lo - kEps || t > hi + kEps) continue;
    const auto row = sg.frame(k);
    for (std::size_t c = 0; c < row.size(); ++c) sum[c] += row[c];
    ++count;
  }
  if (count == 0) {
    throw InputError("center_average: no frame centre inside the window");
  }
  for (double& v : sum) v /= static_cast<double>(count);
  return Spectrum(std::move(sum), sg.axis(), sg.compression());
}

Spectrum resample_to_axis(const Spectrum& s, const FrequencyAxis& target) {
  if (s.axis() == target) return s;
  const FrequencyAxis& src = s.axis();
  constexpr double kRel = 1e-9;
  if (src.f_lo() > target.f_lo() * (1.0 + kRel) ||
      src.f_hi() < target.f_hi() * (1.0 - kRel)) {
    throw InputError("resample_to_axis: source range [" +
                     std::to_string(src.f_lo()) + ", " +
                     std::to_string(src.f_hi()) +
                     "] Hz does not cover target range [" +
                     std::to_string(target.f_lo()) + ", " +
                     std::to_string(target.f_hi()) + "] Hz");
  }

  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(src.channels());
  ys.reserve(src.channels());
  for (std::size_t c = 0; c < src.channels(); ++c) {
    const double f = src.center_freq(c);
    if (target.kind() == AxisKind::kLog10Hz && !(f > 0.0)) continue;
    xs.push_back(target.to_native(f));
    ys.push_back(s[c]);
  }

  std::vector<double> out(target.channels());
  for (std::size_t c = 0; c < target.channels(); ++c) {
    double x = target.to_native(target.center_freq(c));
    x = std::clamp(x, xs.front(), xs.back());
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    if (hi >= xs.size()) hi = xs.size() - 1;
    const std::size_t lo = hi - 1;
    const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
    out[c] = t == 0.0 ? ys[lo] : ys[lo] + t * (ys[hi] - ys[lo]);
  }
  return Spectrum(std::move(out), target, s.compression());
}

std::vector<double> resample_signal(std::span<const double> signal,
                                    double fs_in, double fs_out) {
  if (!(fs_in > 0.0) || !(fs_out > 0.0)) {
    throw ConfigError("resample_signal: sample rates must be > 0");
  }
  if (signal.empty() || fs_in == fs_out) {
    return {signal.begin(), signal.end()};
  }
  const double ratio = fs_in / fs_out;
  const auto n_out = static_cast<std::size_t>(
      std::floor(static_cast<double>(signal.size() - 1) / ratio)) + 1;
  std::vector<double> out(n_out);
  for (std::size_t n = 0; n < n_out; ++n) {
    const double pos = static_cast<double>(n) * ratio;
    const auto i = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(i);
    const double next = i + 1 < signal.size() ? signal[i + 1] : signal[i];
    out[n] = signal[i] + frac * (next - signal[i]);
  }
  return out;
}

}  // namespace vtlssi
