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

#include "vtlssi/spectrum.hpp"

#include <cmath>
#include <cstdio>

#include "vtlssi/errors.hpp"

namespace vtlssi {

namespace {

void check_nonnegative(std::span<const double> values,
                       const Compression& compression, const char* what) {
  if (compression.kind == Compression::Kind::kLog) return;
  for (double v : values) {
    if (!(v >= 0.0)) {
      throw InputError(std::string(what) +
                       ": linear or power-compressed values must be >= 0");
    }
  }
}

}  // namespace

Compression Compression::power_of(double p) {
  const double tenths = std::round(p * 10.0);
  if (tenths < 1.0 || tenths > 10.0 || std::abs(p * 10.0 - tenths) > 1e-9) {
    throw ConfigError("power compression exponent must be one of 0.1..1.0 "
                      "in steps of 0.1, got " + std::to_string(p));
  }
  return {Kind::kPower, tenths / 10.0};
}

std::string Compression::label() const {
  switch (kind) {
    case Kind::kNone:
      return "none";
    case Kind::kLog:
      return "log";
    case Kind::kPower: {
      char buf[16];
      std::snprintf(buf, sizeof buf, "%.1f", power);
      return buf;
    }
  }
  return "none";
}

Spectrum::Spectrum(std::vector<double> values, FrequencyAxis axis,
                   Compression compression)
    : values_(std::move(values)), axis_(axis), compression_(compression) {
  if (values_.size() != axis_.channels()) {
    throw InputError("spectrum has " + std::to_string(values_.size()) +
                     " values but axis has " +
                     std::to_string(axis_.channels()) + " channels");
  }
  check_nonnegative(values_, compression_, "spectrum");
}

Spectrogram::Spectrogram(std::vector<double> data, std::size_t frames,
                         FrequencyAxis axis, double frame_period,
                         double first_center, Compression compression)
    : data_(std::move(data)),
      frames_(frames),
      axis_(axis),
      frame_period_(frame_period),
      first_center_(first_center),
      compression_(compression) {
  if (!(frame_period_ > 0.0)) {
    throw InputError("spectrogram frame period must be > 0");
  }
  if (data_.size() != frames_ * axis_.channels()) {
    throw InputError("spectrogram data size does not match frames x channels");
  }
  check_nonnegative(data_, compression_, "spectrogram");
}

}  // namespace vtlssi
