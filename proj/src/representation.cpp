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

#include "vtlssi/representation.hpp"

#include <cstdio>
#include <iostream>
#include <vector>

#include "vtlssi/errors.hpp"
#include "vtlssi/frontends.hpp"
#include "vtlssi/ssi.hpp"

namespace vtlssi {

namespace {

std::vector<std::string_view> split_underscore(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t u = s.find('_', start);
    parts.push_back(s.substr(start, u - start));
    if (u == std::string_view::npos) break;
    start = u + 1;
  }
  return parts;
}

}  // namespace

Representation Representation::parse(std::string_view id) {
  const auto parts = split_underscore(id);
  const auto fail = [&](const std::string& why) {
    return InputError("representation '" + std::string(id) + "': " + why);
  };
  Representation rep;
  if (parts[0] == "Ep") {
    rep.base = SpectrumBase::kEp;
  } else if (parts[0] == "F") {
    rep.base = SpectrumBase::kFourier;
  } else if (parts[0] == "M") {
    rep.base = SpectrumBase::kMel;
  } else if (parts[0] == "W") {
    rep.base = SpectrumBase::kWorld;
  } else {
    throw fail("unknown spectrum '" + std::string(parts[0]) +
               "' (expected Ep, F, M or W)");
  }
  std::size_t i = 1;
  if (i < parts.size() && parts[i] == "SSI") {
    rep.ssi = true;
    ++i;
  }
  if (i < parts.size()) {
    const std::string_view comp = parts[i++];
    if (comp == "log") {
      rep.compression = Compression::log();
    } else if (comp == "lin" && rep.base == SpectrumBase::kEp) {
      // Explicit spelling of the default.
      rep.compression = Compression::none();
    } else {
      double p = 0.0;
      if (std::sscanf(std::string(comp).c_str(), "%lf", &p) != 1) {
        throw fail("bad compression '" + std::string(comp) + "'");
      }
      rep.compression = Compression::power_of(p);
    }
  } else if (rep.base == SpectrumBase::kEp) {
    rep.compression = Compression::none();
  } else {
    throw fail("F, M and W need a compression suffix (_log or _0.1 ... _1.0)");
  }
  if (i != parts.size()) throw fail("trailing components");
  return rep;
}

std::string Representation::id() const {
  std::string out;
  switch (base) {
    case SpectrumBase::kEp:
      out = "Ep";
      break;
    case SpectrumBase::kFourier:
      out = "F";
      break;
    case SpectrumBase::kMel:
      out = "M";
      break;
    case SpectrumBase::kWorld:
      out = "W";
      break;
  }
  if (ssi) out += "_SSI";
  // The linear EP carries no suffix.
  if (compression.kind != Compression::Kind::kNone) {
    out += "_" + compression.label();
  }
  return out;
}

FrequencyAxis AnalysisConfig::target_axis(SpectrumBase base) const {
  switch (base) {
    case SpectrumBase::kEp:
      return make_axis(AxisKind::kErbLinear, channels, f_lo, f_hi);
    case SpectrumBase::kMel:
      return make_axis(AxisKind::kMelLinear, channels, f_lo, f_hi);
    case SpectrumBase::kFourier:
    case SpectrumBase::kWorld:
      return make_axis(AxisKind::kLog10Hz, channels, f_lo, f_hi);
  }
  return make_axis(AxisKind::kLog10Hz, channels, f_lo, f_hi);
}

Spectrum analyze_signal(std::span<const double> signal, double fs,
                        const Representation& rep,
                        const AnalysisConfig& config) {
  std::vector<double> resampled;
  if (fs != config.fs) {
    std::cerr << "warning: resampling input from " << fs << " Hz to "
              << config.fs << " Hz\n";
    resampled = resample_signal(signal, fs, config.fs);
    signal = resampled;
  }
  const double center =
      static_cast<double>(signal.size()) / (2.0 * config.fs);
  const FrequencyAxis target = config.target_axis(rep.base);

  switch (rep.base) {
    case SpectrumBase::kEp: {
      const Spectrum ep = center_average(
          gammatone_ep(signal, config.fs, target, config.ep_frame_period),
          center, config.half_width);
      return rep.compression.kind == Compression::Kind::kNone
                 ? ep
                 : compress(ep, rep.compression);
    }
    case SpectrumBase::kFourier: {
      const Spectrogram sg = compress(
          stft_spectrum(signal, config.fs, config.stft_window, config.stft_hop),
          rep.compression);
      return resample_to_axis(center_average(sg, center, config.half_width),
                              target);
    }
    case SpectrumBase::kMel: {
      const Spectrogram stft =
          stft_spectrum(signal, config.fs, config.stft_window, config.stft_hop);
      const Spectrogram sg =
          compress(mel_spectrum(stft, config.mel_filters, config.f_lo,
                                config.f_hi),
                   rep.compression);
      return resample_to_axis(center_average(sg, center, config.half_width),
                              target);
    }
    case SpectrumBase::kWorld:
      break;
  }
  throw ConfigError("representation " + rep.id() +
                    " needs an externally supplied spectrum");
}

Spectrum ingest_spectrum(const Spectrum& linear, const Representation& rep,
                         const AnalysisConfig& config) {
  const Spectrum compressed =
      rep.compression.kind == Compression::Kind::kNone
          ? linear
          : compress(linear, rep.compression);
  return resample_to_axis(compressed, config.target_axis(rep.base));
}

Spectrum apply_ssi(const Spectrum& s, double f0, double h_max) {
  return apply_weight(s, ssi_weight(s.axis(), SsiParams(h_max, f0)));
}

}  // namespace vtlssi
