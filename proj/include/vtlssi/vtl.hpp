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

// Vocal-tract-length estimation from same-vowel spectra: pairwise
// cross-correlation shifts, the antisymmetric shift matrix, per-speaker
// relative shifts and their conversion to lengths.

#include <cstddef>
#include <span>
#include <vector>

#include "vtlssi/axis.hpp"
#include "vtlssi/spectrum.hpp"

namespace vtlssi {

enum class XcorrNormalization {
  // One normalisation by the full-length energies; samples beyond the
  // channel range count as zero (after mean removal).
  kGlobal,
  // Pearson coefficient over the overlapping samples at each lag. Free of
  // the edge bias that zero padding puts on tilted (e.g. dB) spectra.
  kOverlap,
};

struct XcorrOptions {
  // Largest lag searched, in channels. Must not exceed channels / 3.
  std::size_t max_lag = 30;
  // Linear upsampling factor; the returned shift has resolution 1/interp.
  std::size_t interp = 10;
  XcorrNormalization normalization = XcorrNormalization::kOverlap;
};

// Normalised cross-correlation between two mean-removed same-axis spectra
// on the upsampled grid. Entry k corresponds to lag (k - max_lag * interp) / interp
// channels.
std::vector<double> xcorr_function(const Spectrum& a, const Spectrum& b,
                                   const XcorrOptions& options = {});

// Lag, in channels, that maximises the normalised cross-correlation.
// Positive means b's features sit at higher channels than a's. Ties go to
// the smallest |lag|, and to the negative lag between a symmetric pair.
// Throws InputError on axis mismatch and DegenerateError on a flat input.
double xcorr_shift(const Spectrum& a, const Spectrum& b,
                   const XcorrOptions& options = {});

// Antisymmetric matrix of pairwise shifts. set(i, j, v) writes v at (i, j)
// and -v at (j, i), so antisymmetry holds by construction.
class ShiftMatrix {
 public:
  explicit ShiftMatrix(std::size_t n);

  std::size_t size() const { return n_; }
  double at(std::size_t i, std::size_t j) const { return c_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double value);

  // Principal submatrix over `indices` (in the given order).
  ShiftMatrix subset(std::span<const std::size_t> indices) const;

 private:
  std::size_t n_;
  std::vector<double> c_;
};

// Upper triangle via xcorr_shift, lower triangle by negation. Errors name
// the offending pair.
ShiftMatrix build_shift_matrix(std::span<const Spectrum> spectra,
                               const XcorrOptions& options = {});

// S_i = (sum_k c_ki - sum_k c_ik) / 2N.
std::vector<double> relative_shifts(const ShiftMatrix& m);

struct VtlEstimate {
  std::vector<double> s;
  double q = 0.0;
  double l_bar = 0.0;
  std::vector<double> l;
};

// Coefficient q minimising sum_i (l_bar exp(q S_i) - l_i)^2: a grid over
// [-2, 2] followed by golden-section refinement to 1e-6.
double fit_q(std::span<const double> shifts, std::span<const double> measured,
             double l_bar);

// L_i = exp(q S_i) * l_bar.
std::vector<double> estimate_vtl(std::span<const double> shifts, double q,
                                 double l_bar);

// Frequency ratio spanned by `shift` channels. Exact on a log axis; on the
// other axes it is evaluated at `ref_freq`.
double channel_shift_to_ratio(const FrequencyAxis& axis, double shift,
                              double ref_freq);

}  // namespace vtlssi
