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

#include "vtlssi/ssi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vtlssi/errors.hpp"
#include "vtlssi/kernels.hpp"

namespace vtlssi {

SsiParams::SsiParams(double h_max, double f0) : h_max_(h_max), f0_(f0) {
  if (!(h_max > 0.0) || !std::isfinite(h_max)) {
    throw ConfigError("SSI h_max must be > 0, got " + std::to_string(h_max));
  }
  if (!(f0 >= 0.0) || !std::isfinite(f0)) {
    throw ConfigError("SSI f0 must be >= 0, got " + std::to_string(f0));
  }
}

std::vector<double> ssi_weight(const FrequencyAxis& axis,
                               const SsiParams& params) {
  std::vector<double> w(axis.channels(), 1.0);
  if (params.f0() == 0.0) return w;
  const double knee = params.h_max() * params.f0();
  for (std::size_t c = 0; c < w.size(); ++c) {
    w[c] = std::min(axis.center_freq(c) / knee, 1.0);
  }
  return w;
}

Spectrum apply_weight(const Spectrum& s, std::span<const double> weight) {
  if (weight.size() != s.size()) {
    throw InputError("apply_weight: weight has " +
                     std::to_string(weight.size()) + " entries, spectrum has " +
                     std::to_string(s.size()));
  }
  const double floor = *std::min_element(s.values().begin(), s.values().end());
  std::vector<double> out(s.size());
  for (std::size_t c = 0; c < out.size(); ++c) {
    out[c] = weight[c] == 1.0 ? s[c] : floor + (s[c] - floor) * weight[c];
  }
  return Spectrum(std::move(out), s.axis(), s.compression());
}

std::optional<double> estimate_f0(std::span<const double> signal, double fs) {
  constexpr double kSegment = 0.050;
  constexpr double kMinF0 = 60.0;
  constexpr double kMaxF0 = 400.0;
  constexpr double kVoicingThreshold = 0.3;
  // Earliest peak within this fraction of the best wins, to avoid
  // locking onto a sub-harmonic.
  constexpr double kOctaveTolerance = 0.9;

  const auto width = static_cast<std::size_t>(std::llround(kSegment * fs));
  if (signal.size() < width) {
    throw InputError("estimate_f0: signal shorter than 50 ms (" +
                     std::to_string(signal.size()) + " samples at " +
                     std::to_string(fs) + " Hz)");
  }
  const std::span<const double> seg =
      signal.subspan((signal.size() - width) / 2, width);

  const auto min_lag = static_cast<std::size_t>(std::floor(fs / kMaxF0));
  const auto max_lag = std::min(
      static_cast<std::size_t>(std::ceil(fs / kMinF0)), width / 2);
  if (min_lag < 2 || max_lag <= min_lag + 2) {
    throw ConfigError("estimate_f0: sample rate too low for the search range");
  }

  const auto& dot = kernels::active_kernels().dot;
  // r[lag - min_lag + 1] for lag in [min_lag - 1, max_lag + 1].
  std::vector<double> r(max_lag - min_lag + 3, 0.0);
  bool any_energy = false;
  for (std::size_t lag = min_lag - 1; lag <= max_lag + 1; ++lag) {
    const std::size_t n = width - lag;
    const double e0 = dot(seg.data(), seg.data(), n);
    const double e1 = dot(seg.data() + lag, seg.data() + lag, n);
    const double denom = std::sqrt(e0 * e1);
    if (denom > 0.0) {
      any_energy = true;
      r[lag - min_lag + 1] = dot(seg.data(), seg.data() + lag, n) / denom;
    }
  }
  if (!any_energy) return std::nullopt;

  std::vector<std::size_t> peaks;
  double best = -1.0;
  for (std::size_t i = 1; i + 1 < r.size(); ++i) {
    if (r[i] >= r[i - 1] && r[i] > r[i + 1]) {
      peaks.push_back(i);
      best = std::max(best, r[i]);
    }
  }
  if (peaks.empty() || best < kVoicingThreshold) return std::nullopt;

  std::size_t pick = peaks.front();
  for (std::size_t i : peaks) {
    if (r[i] >= kOctaveTolerance * best) {
      pick = i;
      break;
    }
  }
  // Parabolic refinement of the peak lag.
  const double ym = r[pick - 1];
  const double y0 = r[pick];
  const double yp = r[pick + 1];
  const double curvature = ym - 2.0 * y0 + yp;
  const double offset = curvature < 0.0 ? 0.5 * (ym - yp) / curvature : 0.0;
  const double lag =
      static_cast<double>(pick + min_lag - 1) + std::clamp(offset, -0.5, 0.5);
  return fs / lag;
}

}  // namespace vtlssi
