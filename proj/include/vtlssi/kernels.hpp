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

// Data-parallel inner loops. Each kernel has a portable scalar reference
// and, on x86-64, an AVX2 variant chosen at runtime. The scalar and AVX2
// gammatone kernels perform the same IEEE operations in the same order per
// channel, so their outputs are bit-identical; the dot product reorders
// its reduction and agrees to rounding.

#include <cstddef>
#include <span>
#include <vector>

namespace vtlssi::kernels {

// Structure-of-arrays coefficients for a bank of 4th-order complex
// gammatone resonators. Each channel scales the input by `gain` and runs
// it through four cascaded one-pole complex sections with pole
// `pole_re + i pole_im`; the real part of the output is half-wave
// rectified and smoothed by a biquad low-pass shared across channels.
struct GammatoneBank {
  std::vector<double> pole_re;
  std::vector<double> pole_im;
  std::vector<double> gain;
  // Direct-form-I low-pass: y = b0 x + b1 x1 + b2 x2 - a1 y1 - a2 y2.
  double b0 = 1.0, b1 = 0.0, b2 = 0.0, a1 = 0.0, a2 = 0.0;

  std::size_t channels() const { return pole_re.size(); }
};

// Runs the bank over `signal` and writes the mean smoothed envelope of
// every frame into `out` (frames x channels, row-major). Frame k spans
// samples [frame_bounds[k], frame_bounds[k + 1]).
using GammatoneEnvelopeFn = void (*)(const GammatoneBank& bank,
                                     std::span<const double> signal,
                                     std::span<const std::size_t> frame_bounds,
                                     std::span<double> out);

using DotFn = double (*)(const double* a, const double* b, std::size_t n);

struct KernelTable {
  const char* name;
  GammatoneEnvelopeFn gammatone_envelope;
  DotFn dot;
};

const KernelTable& scalar_kernels();

// nullptr when the AVX2 variant was not compiled in.
const KernelTable* avx2_kernels();

bool cpu_has_avx2();

// AVX2 when compiled in and supported by the CPU, scalar otherwise.
// Setting VTLSSI_KERNELS=scalar in the environment forces the reference
// path.
const KernelTable& active_kernels();

}  // namespace vtlssi::kernels
