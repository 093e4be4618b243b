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

#include <optional>
#include <span>
#include <vector>

#include "vtlssi/axis.hpp"
#include "vtlssi/spectrum.hpp"

namespace vtlssi {

inline constexpr double kDefaultHmax = 3.5;

// Parameters of the F0-adaptive weight. f0 == 0 marks an unvoiced or
// unknown frame and disables the weight.
class SsiParams {
 public:
  SsiParams(double h_max, double f0);

  double h_max() const { return h_max_; }
  double f0() const { return f0_; }

 private:
  double h_max_;
  double f0_;
};

// w(f_p) = min(f_p / (h_max * f0), 1) per channel; all ones when f0 == 0.
// Channels at or above h_max * f0 are exactly 1.
std::vector<double> ssi_weight(const FrequencyAxis& axis,
                               const SsiParams& params);

// Weighted spectrum min + (s - min) * w, where min is the smallest value of
// `s`. Shifting to a zero baseline first makes the weight pull channels
// toward the floor for dB-valued spectra as well as linear ones.
Spectrum apply_weight(const Spectrum& s, std::span<const double> weight);

// Autocorrelation F0 over 60-400 Hz on the central 50 ms of `signal`.
// Returns std::nullopt (unvoiced) when the normalised peak is below 0.3.
// Throws InputError for signals shorter than 50 ms.
std::optional<double> estimate_f0(std::span<const double> signal, double fs);

}  // namespace vtlssi
