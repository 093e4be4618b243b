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

#include "vtlssi/vtl.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "vtlssi/errors.hpp"
#include "vtlssi/golden.hpp"
#include "vtlssi/kernels.hpp"

namespace vtlssi {

namespace {

// Mean-removed, linearly upsampled copy of `s`; throws on a flat input.
std::vector<double> prepare(const Spectrum& s, std::size_t interp,
                            const char* which) {
  const auto& v = s.values();
  const double mean =
      std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  double scale = 0.0;
  double spread = 0.0;
  for (double x : v) {
    scale = std::max(scale, std::abs(x));
    spread = std::max(spread, std::abs(x - mean));
  }
  if (!(spread > 1e-12 * scale) || spread == 0.0) {
    throw DegenerateError(std::string("xcorr_shift: spectrum ") + which +
                          " is flat (zero variance)");
  }
  const std::size_t n = v.size();
  std::vector<double> fine((n - 1) * interp + 1);
  for (std::size_t c = 0; c + 1 < n; ++c) {
    const double y0 = v[c] - mean;
    const double y1 = v[c + 1] - mean;
    for (std::size_t j = 0; j < interp; ++j) {
      const double t = static_cast<double>(j) / static_cast<double>(interp);
      fine[c * interp + j] = y0 + t * (y1 - y0);
    }
  }
  fine.back() = v[n - 1] - mean;
  return fine;
}

void check_options(const Spectrum& a, const Spectrum& b,
                   const XcorrOptions& options) {
  if (!(a.axis() == b.axis())) {
    throw InputError("xcorr_shift: spectra are on different axes");
  }
  if (options.interp == 0) {
    throw ConfigError("xcorr_shift: interpolation factor must be >= 1");
  }
  if (options.max_lag * 3 > a.size()) {
    throw ConfigError("xcorr_shift: max_lag " +
                      std::to_string(options.max_lag) +
                      " exceeds a third of the " + std::to_string(a.size()) +
                      " channels");
  }
}

}  // namespace

std::vector<double> xcorr_function(const Spectrum& a, const Spectrum& b,
                                   const XcorrOptions& options) {
  check_options(a, b, options);
  const std::vector<double> fa = prepare(a, options.interp, "a");
  const std::vector<double> fb = prepare(b, options.interp, "b");
  const auto& dot = kernels::active_kernels().dot;
  const std::size_t m = fa.size();
  const std::size_t reach = options.max_lag * options.interp;
  std::vector<double> out(2 * reach + 1);

  if (options.normalization == XcorrNormalization::kGlobal) {
    const double norm = std::sqrt(dot(fa.data(), fa.data(), m) *
                                  dot(fb.data(), fb.data(), m));
    for (std::size_t k = 0; k < out.size(); ++k) {
      double acc;
      if (k >= reach) {
        const std::size_t lag = k - reach;
        acc = dot(fa.data(), fb.data() + lag, m - lag);
      } else {
        const std::size_t lag = reach - k;
        acc = dot(fa.data() + lag, fb.data(), m - lag);
      }
      out[k] = acc / norm;
    }
    return out;
  }

  // Prefix sums give each overlap's mean and energy in O(1).
  std::vector<double> sa(m + 1, 0.0), sb(m + 1, 0.0);
  std::vector<double> qa(m + 1, 0.0), qb(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    sa[i + 1] = sa[i] + fa[i];
    sb[i + 1] = sb[i] + fb[i];
    qa[i + 1] = qa[i] + fa[i] * fa[i];
    qb[i + 1] = qb[i] + fb[i] * fb[i];
  }
  // Pearson coefficient of fa[a0, a0 + n) against fb[b0, b0 + n).
  auto coefficient = [&](std::size_t a0, std::size_t b0, std::size_t n) {
    const double len = static_cast<double>(n);
    const double suma = sa[a0 + n] - sa[a0];
    const double sumb = sb[b0 + n] - sb[b0];
    const double cov = dot(fa.data() + a0, fb.data() + b0, n) - suma * sumb / len;
    const double va = qa[a0 + n] - qa[a0] - suma * suma / len;
    const double vb = qb[b0 + n] - qb[b0] - sumb * sumb / len;
    return va > 0.0 && vb > 0.0 ? cov / std::sqrt(va * vb) : 0.0;
  };
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k >= reach) {
      const std::size_t lag = k - reach;
      out[k] = coefficient(0, lag, m - lag);
    } else {
      const std::size_t lag = reach - k;
      out[k] = coefficient(lag, 0, m - lag);
    }
  }
  return out;
}

double xcorr_shift(const Spectrum& a, const Spectrum& b,
                   const XcorrOptions& options) {
  const std::vector<double> corr = xcorr_function(a, b, options);
  const auto reach =
      static_cast<std::ptrdiff_t>(options.max_lag * options.interp);
  // Visit 0, -1, +1, -2, +2, ... and only move on a strict improvement.
  std::ptrdiff_t best_lag = 0;
  double best = corr[static_cast<std::size_t>(reach)];
  for (std::ptrdiff_t d = 1; d <= reach; ++d) {
    for (const std::ptrdiff_t lag : {-d, d}) {
      const double v = corr[static_cast<std::size_t>(lag + reach)];
      if (v > best) {
        best = v;
        best_lag = lag;
      }
    }
  }
  return static_cast<double>(best_lag) / static_cast<double>(options.interp);
}

ShiftMatrix::ShiftMatrix(std::size_t n) : n_(n), c_(n * n, 0.0) {}

void ShiftMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i >= n_ || j >= n_) {
    throw InputError("ShiftMatrix::set: index out of range");
  }
  if (i == j) {
    if (value != 0.0) {
      throw InputError("ShiftMatrix::set: diagonal entries are zero");
    }
    return;
  }
  c_[i * n_ + j] = value;
  c_[j * n_ + i] = -value;
}

ShiftMatrix ShiftMatrix::subset(std::span<const std::size_t> indices) const {
  ShiftMatrix out(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = a + 1; b < indices.size(); ++b) {
      out.set(a, b, at(indices[a], indices[b]));
    }
  }
  return out;
}

ShiftMatrix build_shift_matrix(std::span<const Spectrum> spectra,
                               const XcorrOptions& options) {
  if (spectra.size() < 2) {
    throw InputError("build_shift_matrix: need at least 2 spectra");
  }
  ShiftMatrix m(spectra.size());
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    for (std::size_t j = i + 1; j < spectra.size(); ++j) {
      const std::string where =
          "pair (" + std::to_string(i) + ", " + std::to_string(j) + "): ";
      try {
        m.set(i, j, xcorr_shift(spectra[i], spectra[j], options));
      } catch (const DegenerateError& e) {
        throw DegenerateError(where + e.what());
      } catch (const InputError& e) {
        throw InputError(where + e.what());
      } catch (const ConfigError& e) {
        throw ConfigError(where + e.what());
      }
    }
  }
  return m;
}

std::vector<double> relative_shifts(const ShiftMatrix& m) {
  const std::size_t n = m.size();
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;  // C_i^row: sum over the first index
    double col = 0.0;  // C_i^col: sum over the second index
    for (std::size_t k = 0; k < n; ++k) {
      row += m.at(k, i);
      col += m.at(i, k);
    }
    s[i] = (row - col) / (2.0 * static_cast<double>(n));
  }
  return s;
}

double fit_q(std::span<const double> shifts, std::span<const double> measured,
             double l_bar) {
  if (shifts.size() != measured.size()) {
    throw InputError("fit_q: " + std::to_string(shifts.size()) +
                     " shifts but " + std::to_string(measured.size()) +
                     " measured lengths");
  }
  if (!(l_bar > 0.0)) throw InputError("fit_q: mean length must be > 0");
  for (double l : measured) {
    if (!(l > 0.0)) throw InputError("fit_q: measured lengths must be > 0");
  }
  const auto [lo, hi] = std::minmax_element(shifts.begin(), shifts.end());
  if (shifts.empty() || !(*hi - *lo > 1e-12)) {
    throw DegenerateError("fit_q: all relative shifts are identical");
  }

  auto cost = [&](double q) {
    double acc = 0.0;
    for (std::size_t i = 0; i < shifts.size(); ++i) {
      const double e = l_bar * std::exp(q * shifts[i]) - measured[i];
      acc += e * e;
    }
    return acc;
  };

  constexpr double kLo = -2.0;
  constexpr double kHi = 2.0;
  constexpr int kSteps = 4000;
  constexpr double kStep = (kHi - kLo) / kSteps;
  double best_q = kLo;
  double best = cost(kLo);
  for (int k = 1; k <= kSteps; ++k) {
    const double q = kLo + kStep * k;
    const double c = cost(q);
    if (c < best) {
      best = c;
      best_q = q;
    }
  }
  return golden_section_minimize(cost, std::max(kLo, best_q - kStep),
                                 std::min(kHi, best_q + kStep), 1e-7)
      .x;
}

std::vector<double> estimate_vtl(std::span<const double> shifts, double q,
                                 double l_bar) {
  if (!(l_bar > 0.0)) throw ConfigError("estimate_vtl: l_bar must be > 0");
  std::vector<double> out(shifts.size());
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    out[i] = std::exp(q * shifts[i]) * l_bar;
  }
  return out;
}

double channel_shift_to_ratio(const FrequencyAxis& axis, double shift,
                              double ref_freq) {
  if (axis.kind() == AxisKind::kLog10Hz) {
    return std::pow(axis.f_hi() / axis.f_lo(),
                    shift / static_cast<double>(axis.channels() - 1));
  }
  if (!(ref_freq >= axis.f_lo() && ref_freq <= axis.f_hi())) {
    throw InputError("channel_shift_to_ratio: reference " +
                     std::to_string(ref_freq) + " Hz outside the axis range");
  }
  // Dividing by the round-tripped reference keeps shift 0 at exactly 1.
  const double native = axis.to_native(ref_freq);
  return axis.from_native(native + shift * axis.native_spacing()) /
         axis.from_native(native);
}

}  // namespace vtlssi
