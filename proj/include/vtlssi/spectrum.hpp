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
#include <span>
#include <string>
#include <vector>

#include "vtlssi/axis.hpp"

namespace vtlssi {

struct Compression {
  enum class Kind { kNone, kLog, kPower };

  Kind kind = Kind::kNone;
  // Exponent for kPower; ignored otherwise.
  double power = 1.0;

  static Compression none() { return {}; }
  static Compression log() { return {Kind::kLog, 1.0}; }
  // Throws ConfigError unless p is one of 0.1, 0.2, ..., 1.0.
  static Compression power_of(double p);

  // "none", "log" or the exponent with one decimal ("0.4").
  std::string label() const;

  bool operator==(const Compression& other) const = default;
};

// Time-averaged spectrum: one value per channel of `axis`.
class Spectrum {
 public:
  Spectrum(std::vector<double> values, FrequencyAxis axis,
           Compression compression = Compression::none());

  const std::vector<double>& values() const { return values_; }
  const FrequencyAxis& axis() const { return axis_; }
  const Compression& compression() const { return compression_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t c) const { return values_[c]; }

 private:
  std::vector<double> values_;
  FrequencyAxis axis_;
  Compression compression_;
};

// Frames x channels, row-major. Frame k covers
// [start + k * period - period / 2, start + k * period + period / 2) where
// `start` is the centre time of frame 0.
class Spectrogram {
 public:
  Spectrogram(std::vector<double> data, std::size_t frames,
              FrequencyAxis axis, double frame_period, double first_center,
              Compression compression = Compression::none());

  std::size_t frames() const { return frames_; }
  std::size_t channels() const { return axis_.channels(); }
  const FrequencyAxis& axis() const { return axis_; }
  const Compression& compression() const { return compression_; }
  double frame_period() const { return frame_period_; }
  double frame_center(std::size_t frame) const {
    return first_center_ + frame_period_ * static_cast<double>(frame);
  }
  double first_center() const { return first_center_; }

  std::span<const double> frame(std::size_t k) const {
    return {data_.data() + k * channels(), channels()};
  }
  double at(std::size_t frame, std::size_t channel) const {
    return data_[frame * channels() + channel];
  }
  const std::vector<double>& data() const { return data_; }

 private:
  std::vector<double> data_;
  std::size_t frames_;
  FrequencyAxis axis_;
  double frame_period_;
  double first_center_;
  Compression compression_;
};

}  // namespace vtlssi
