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

#include <immintrin.h>

#include <array>
#include <cassert>

#include "vtlssi/kernels.hpp"

namespace vtlssi::kernels {

namespace {

constexpr std::size_t kLanes = 4;

// Mirrors gammatone_envelope_scalar lane for lane: same operations, same
// order, no fused multiply-add.
void gammatone_envelope_avx2(const GammatoneBank& bank,
                             std::span<const double> signal,
                             std::span<const std::size_t> frame_bounds,
                             std::span<double> out) {
  const std::size_t channels = bank.channels();
  const std::size_t frames = frame_bounds.size() - 1;
  assert(out.size() == frames * channels);

  const __m256d b0 = _mm256_set1_pd(bank.b0);
  const __m256d b1 = _mm256_set1_pd(bank.b1);
  const __m256d b2 = _mm256_set1_pd(bank.b2);
  const __m256d a1 = _mm256_set1_pd(bank.a1);
  const __m256d a2 = _mm256_set1_pd(bank.a2);
  const __m256d zero = _mm256_setzero_pd();

  for (std::size_t ch0 = 0; ch0 < channels; ch0 += kLanes) {
    const std::size_t lanes = std::min(kLanes, channels - ch0);
    std::array<double, kLanes> pr_a{}, pi_a{}, g_a{};
    for (std::size_t l = 0; l < lanes; ++l) {
      pr_a[l] = bank.pole_re[ch0 + l];
      pi_a[l] = bank.pole_im[ch0 + l];
      g_a[l] = bank.gain[ch0 + l];
    }
    const __m256d pr = _mm256_loadu_pd(pr_a.data());
    const __m256d pi = _mm256_loadu_pd(pi_a.data());
    const __m256d g = _mm256_loadu_pd(g_a.data());

    __m256d w1r = zero, w1i = zero, w2r = zero, w2i = zero;
    __m256d w3r = zero, w3i = zero, w4r = zero, w4i = zero;
    __m256d x1 = zero, x2 = zero, y1 = zero, y2 = zero;

    for (std::size_t k = 0; k < frames; ++k) {
      __m256d acc = zero;
      for (std::size_t n = frame_bounds[k]; n < frame_bounds[k + 1]; ++n) {
        const __m256d in = _mm256_mul_pd(_mm256_set1_pd(signal[n]), g);
        __m256d r = _mm256_sub_pd(_mm256_add_pd(in, _mm256_mul_pd(pr, w1r)),
                                  _mm256_mul_pd(pi, w1i));
        __m256d i =
            _mm256_add_pd(_mm256_mul_pd(pr, w1i), _mm256_mul_pd(pi, w1r));
        w1r = r;
        w1i = i;
        r = _mm256_sub_pd(_mm256_add_pd(w1r, _mm256_mul_pd(pr, w2r)),
                          _mm256_mul_pd(pi, w2i));
        i = _mm256_add_pd(_mm256_add_pd(w1i, _mm256_mul_pd(pr, w2i)),
                          _mm256_mul_pd(pi, w2r));
        w2r = r;
        w2i = i;
        r = _mm256_sub_pd(_mm256_add_pd(w2r, _mm256_mul_pd(pr, w3r)),
                          _mm256_mul_pd(pi, w3i));
        i = _mm256_add_pd(_mm256_add_pd(w2i, _mm256_mul_pd(pr, w3i)),
                          _mm256_mul_pd(pi, w3r));
        w3r = r;
        w3i = i;
        r = _mm256_sub_pd(_mm256_add_pd(w3r, _mm256_mul_pd(pr, w4r)),
                          _mm256_mul_pd(pi, w4i));
        i = _mm256_add_pd(_mm256_add_pd(w3i, _mm256_mul_pd(pr, w4i)),
                          _mm256_mul_pd(pi, w4r));
        w4r = r;
        w4i = i;
        // Scalar path is `w4r > 0 ? w4r : 0`; blend keeps -0.0 -> +0.0 too.
        const __m256d h =
            _mm256_blendv_pd(zero, w4r, _mm256_cmp_pd(w4r, zero, _CMP_GT_OQ));
        __m256d y = _mm256_add_pd(_mm256_mul_pd(b0, h), _mm256_mul_pd(b1, x1));
        y = _mm256_add_pd(y, _mm256_mul_pd(b2, x2));
        y = _mm256_sub_pd(y, _mm256_mul_pd(a1, y1));
        y = _mm256_sub_pd(y, _mm256_mul_pd(a2, y2));
        x2 = x1;
        x1 = h;
        y2 = y1;
        y1 = y;
        acc = _mm256_add_pd(acc, y);
      }
      const std::size_t count = frame_bounds[k + 1] - frame_bounds[k];
      std::array<double, kLanes> mean{};
      if (count) {
        _mm256_storeu_pd(
            mean.data(),
            _mm256_div_pd(acc, _mm256_set1_pd(static_cast<double>(count))));
      }
      for (std::size_t l = 0; l < lanes; ++l) {
        out[k * channels + ch0 + l] = mean[l];
      }
    }
  }
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d s0 = _mm256_setzero_pd();
  __m256d s1 = _mm256_setzero_pd();
  __m256d s2 = _mm256_setzero_pd();
  __m256d s3 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    s0 = _mm256_add_pd(s0, _mm256_mul_pd(_mm256_loadu_pd(a + i),
                                         _mm256_loadu_pd(b + i)));
    s1 = _mm256_add_pd(s1, _mm256_mul_pd(_mm256_loadu_pd(a + i + 4),
                                         _mm256_loadu_pd(b + i + 4)));
    s2 = _mm256_add_pd(s2, _mm256_mul_pd(_mm256_loadu_pd(a + i + 8),
                                         _mm256_loadu_pd(b + i + 8)));
    s3 = _mm256_add_pd(s3, _mm256_mul_pd(_mm256_loadu_pd(a + i + 12),
                                         _mm256_loadu_pd(b + i + 12)));
  }
  for (; i + 4 <= n; i += 4) {
    s0 = _mm256_add_pd(s0, _mm256_mul_pd(_mm256_loadu_pd(a + i),
                                         _mm256_loadu_pd(b + i)));
  }
  const __m256d s = _mm256_add_pd(_mm256_add_pd(s0, s1), _mm256_add_pd(s2, s3));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, s);
  double acc = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{"avx2", &gammatone_envelope_avx2, &dot_avx2};
  return &table;
}

}  // namespace vtlssi::kernels
