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

#include "vtlssi/axis.hpp"

#include <cmath>
#include <string>

#include "vtlssi/errors.hpp"

namespace vtlssi {

double hz_to_erbn(double hz) {
  if (!(hz >= 0.0)) {
    throw DomainError("hz_to_erbn: frequency must be >= 0, got " +
                      std::to_string(hz));
  }
  return 21.4 * std::log10(0.00437 * hz + 1.0);
}

double erbn_to_hz(double erbn) {
  return (std::pow(10.0, erbn / 21.4) - 1.0) / 0.00437;
}

double erb_bandwidth_hz(double hz) { return 24.7 * (0.00437 * hz + 1.0); }

double hz_to_mel(double hz) {
  if (!(hz >= 0.0)) {
    throw DomainError("hz_to_mel: frequency must be >= 0, got " +
                      std::to_string(hz));
  }
  return 2595.0 * std::log10(1.0 + hz / 700.0);
}

double mel_to_hz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

std::string_view to_string(AxisKind kind) {
  switch (kind) {
    case AxisKind::kErbLinear:
      return "erb";
    case AxisKind::kLog10Hz:
      return "log10";
    case AxisKind::kMelLinear:
      return "mel";
    case AxisKind::kLinearHz:
      return "linear";
  }
  return "unknown";
}

FrequencyAxis::FrequencyAxis(AxisKind kind, std::size_t channels, double f_lo,
                             double f_hi)
    : kind_(kind), channels_(channels), f_lo_(f_lo), f_hi_(f_hi) {
  if (channels < 2) {
    throw ConfigError("frequency axis needs at least 2 channels");
  }
  const bool lo_ok = kind == AxisKind::kLinearHz ? f_lo >= 0.0 : f_lo > 0.0;
  if (!lo_ok || !(f_hi > f_lo) || !std::isfinite(f_hi)) {
    throw ConfigError("frequency axis bounds invalid: f_lo=" +
                      std::to_string(f_lo) + " f_hi=" + std::to_string(f_hi));
  }
}

double FrequencyAxis::to_native(double hz) const {
  switch (kind_) {
    case AxisKind::kErbLinear:
      return hz_to_erbn(hz);
    case AxisKind::kLog10Hz:
      return std::log10(hz);
    case AxisKind::kMelLinear:
      return hz_to_mel(hz);
    case AxisKind::kLinearHz:
      return hz;
  }
  return hz;
}

double FrequencyAxis::from_native(double native) const {
  switch (kind_) {
    case AxisKind::kErbLinear:
      return erbn_to_hz(native);
    case AxisKind::kLog10Hz:
      return std::pow(10.0, native);
    case AxisKind::kMelLinear:
      return mel_to_hz(native);
    case AxisKind::kLinearHz:
      return native;
  }
  return native;
}

double FrequencyAxis::native_spacing() const {
  return (to_native(f_hi_) - to_native(f_lo_)) /
         static_cast<double>(channels_ - 1);
}

double FrequencyAxis::center_freq(std::size_t channel) const {
  if (channel == 0) return f_lo_;
  if (channel + 1 == channels_) return f_hi_;
  const double lo = to_native(f_lo_);
  const double hi = to_native(f_hi_);
  const double t =
      static_cast<double>(channel) / static_cast<double>(channels_ - 1);
  return from_native(lo + t * (hi - lo));
}

std::vector<double> FrequencyAxis::center_freqs() const {
  std::vector<double> out(channels_);
  for (std::size_t c = 0; c < channels_; ++c) out[c] = center_freq(c);
  return out;
}

FrequencyAxis make_axis(AxisKind kind, std::size_t channels, double f_lo,
                        double f_hi) {
  return FrequencyAxis(kind, channels, f_lo, f_hi);
}

FrequencyAxis canonical_erb_axis() {
  return make_axis(AxisKind::kErbLinear, 100, 100.0, 8000.0);
}

FrequencyAxis canonical_log_axis() {
  return make_axis(AxisKind::kLog10Hz, 100, 100.0, 8000.0);
}

FrequencyAxis canonical_mel_axis() {
  return make_axis(AxisKind::kMelLinear, 100, 100.0, 8000.0);
}

}  // namespace vtlssi
