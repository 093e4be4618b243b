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

#include <cassert>

#include "vtlssi/kernels.hpp"

namespace vtlssi::kernels {

namespace {

void gammatone_envelope_scalar(const GammatoneBank& bank,
                               std::span<const double> signal,
                               std::span<const std::size_t> frame_bounds,
                               std::span<double> out) {
  const std::size_t channels = bank.channels();
  const std::size_t frames = frame_bounds.size() - 1;
  assert(out.size() == frames * channels);
  for (std::size_t ch = 0; ch < channels; ++ch) {
    const double pr = bank.pole_re[ch];
    const double pi = bank.pole_im[ch];
    const double g = bank.gain[ch];
    double w1r = 0, w1i = 0, w2r = 0, w2i = 0, w3r = 0, w3i = 0, w4r = 0,
           w4i = 0;
    double x1 = 0, x2 = 0, y1 = 0, y2 = 0;
    for (std::size_t k = 0; k < frames; ++k) {
      double acc = 0.0;
      for (std::size_t n = frame_bounds[k]; n < frame_bounds[k + 1]; ++n) {
        const double in = signal[n] * g;
        double r = in + pr * w1r - pi * w1i;
        double i = pr * w1i + pi * w1r;
        w1r = r;
        w1i = i;
        r = w1r + pr * w2r - pi * w2i;
        i = w1i + pr * w2i + pi * w2r;
        w2r = r;
        w2i = i;
        r = w2r + pr * w3r - pi * w3i;
        i = w2i + pr * w3i + pi * w3r;
        w3r = r;
        w3i = i;
        r = w3r + pr * w4r - pi * w4i;
        i = w3i + pr * w4i + pi * w4r;
        w4r = r;
        w4i = i;
        const double h = w4r > 0.0 ? w4r : 0.0;
        const double y = bank.b0 * h + bank.b1 * x1 + bank.b2 * x2 -
                         bank.a1 * y1 - bank.a2 * y2;
        x2 = x1;
        x1 = h;
        y2 = y1;
        y1 = y;
        acc += y;
      }
      const std::size_t count = frame_bounds[k + 1] - frame_bounds[k];
      out[k * channels + ch] = count ? acc / static_cast<double>(count) : 0.0;
    }
  }
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", &gammatone_envelope_scalar,
                                 &dot_scalar};
  return table;
}

}  // namespace vtlssi::kernels
