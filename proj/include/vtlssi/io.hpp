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

// CSV exporters for spectra, shift matrices and estimates.

#include <filesystem>
#include <span>
#include <string>

#include "vtlssi/spectrum.hpp"
#include "vtlssi/vtl.hpp"

namespace vtlssi {

// channel,center_hz,value
std::string spectrum_csv(const Spectrum& s);
void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& s);

// Reads channel,center_hz,value. The axis kind is inferred from the
// centre frequencies (uniform in Hz, log10 Hz, ERB_N-number or mel);
// values are taken as uncompressed.
Spectrum read_spectrum_csv(const std::filesystem::path& path);

// One row per channel: channel,center_hz,<value at each frame>; the header
// carries frame-centre times in seconds.
void write_spectrogram_csv(const std::filesystem::path& path,
                           const Spectrogram& sg);

// Plain n x n matrix, no header.
void write_shift_matrix_csv(const std::filesystem::path& path,
                            const ShiftMatrix& m);

}  // namespace vtlssi
