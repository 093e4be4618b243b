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

#include "vtlssi/io.hpp"

#include <cmath>
#include <vector>

#include "vtlssi/csv.hpp"
#include "vtlssi/errors.hpp"

namespace vtlssi {

std::string spectrum_csv(const Spectrum& s) {
  csv::Writer w;
  w.row({"channel", "center_hz", "value"});
  for (std::size_t c = 0; c < s.size(); ++c) {
    w.row({std::to_string(c), csv::format_number(s.axis().center_freq(c)),
           csv::format_number(s[c])});
  }
  return w.str();
}

void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& s) {
  csv::write_atomic(path, spectrum_csv(s));
}

Spectrum read_spectrum_csv(const std::filesystem::path& path) {
  const csv::Table t = csv::read(path);
  const std::size_t c_freq = t.column("center_hz");
  const std::size_t c_value = t.column("value");
  std::vector<double> freqs;
  std::vector<double> values;
  for (const auto& row : t.rows) {
    freqs.push_back(csv::parse_number(row[c_freq], "center_hz"));
    values.push_back(csv::parse_number(row[c_value], "value"));
  }
  if (freqs.size() < 2) {
    throw InputError(path.string() + ": spectrum needs at least 2 channels");
  }
  for (const AxisKind kind : {AxisKind::kLinearHz, AxisKind::kLog10Hz,
                              AxisKind::kErbLinear, AxisKind::kMelLinear}) {
    if (kind != AxisKind::kLinearHz && !(freqs.front() > 0.0)) continue;
    if (kind == AxisKind::kLinearHz && freqs.front() < 0.0) continue;
    if (!(freqs.back() > freqs.front())) break;
    const FrequencyAxis axis(kind, freqs.size(), freqs.front(), freqs.back());
    bool uniform = true;
    for (std::size_t c = 0; c < freqs.size() && uniform; ++c) {
      uniform = std::abs(axis.center_freq(c) - freqs[c]) <=
                1e-6 * std::max(1.0, freqs[c]);
    }
    if (uniform) return Spectrum(std::move(values), axis);
  }
  throw InputError(path.string() +
                   ": centre frequencies are not uniform on a linear, log, "
                   "ERB or mel axis");
}

void write_spectrogram_csv(const std::filesystem::path& path,
                           const Spectrogram& sg) {
  csv::Writer w;
  std::vector<std::string> header = {"channel", "center_hz"};
  for (std::size_t k = 0; k < sg.frames(); ++k) {
    header.push_back(csv::format_number(sg.frame_center(k)));
  }
  w.row(header);
  for (std::size_t c = 0; c < sg.channels(); ++c) {
    std::vector<std::string> row = {
        std::to_string(c), csv::format_number(sg.axis().center_freq(c))};
    for (std::size_t k = 0; k < sg.frames(); ++k) {
      row.push_back(csv::format_number(sg.at(k, c)));
    }
    w.row(row);
  }
  csv::write_atomic(path, w.str());
}

void write_shift_matrix_csv(const std::filesystem::path& path,
                            const ShiftMatrix& m) {
  csv::Writer w;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < m.size(); ++j) {
      row.push_back(csv::format_number(m.at(i, j)));
    }
    w.row(row);
  }
  csv::write_atomic(path, w.str());
}

}  // namespace vtlssi
