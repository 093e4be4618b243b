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

#include <filesystem>
#include <span>
#include <vector>

namespace vtlssi {

struct Audio {
  std::vector<double> samples;
  double fs = 0.0;
};

enum class WavFormat { kPcm16, kFloat32 };

// Mono RIFF/WAVE, 16-bit PCM or 32-bit IEEE float. Multi-channel files are
// rejected.
Audio read_wav(const std::filesystem::path& path);
void write_wav(const std::filesystem::path& path,
               std::span<const double> samples, double fs,
               WavFormat format = WavFormat::kPcm16);

}  // namespace vtlssi
