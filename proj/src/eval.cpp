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

#include "vtlssi/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "vtlssi/csv.hpp"
#include "vtlssi/errors.hpp"
#include "vtlssi/frontends.hpp"
#include "vtlssi/io.hpp"
#include "vtlssi/ssi.hpp"
#include "vtlssi/wav.hpp"

namespace vtlssi {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double correlation_or_nan(std::span<const double> x,
                          std::span<const double> y) {
  try {
    return pearson_r(x, y);
  } catch (const Error&) {
    return kNaN;
  }
}

struct Scores {
  std::map<Vowel, double> per_vowel_r;
  double all_r = kNaN;
  double rms_cm = 0.0;
};

Scores score(const Estimation& est, const std::vector<Vowel>& vowels) {
  Scores out;
  std::vector<double> all_est, all_meas;
  for (Vowel v : vowels) {
    std::vector<double> e, m;
    for (const auto& p : est.points) {
      if (p.vowel != v) continue;
      e.push_back(p.l_est);
      m.push_back(p.l_meas);
    }
    out.per_vowel_r[v] = correlation_or_nan(m, e);
  }
  for (const auto& p : est.points) {
    all_est.push_back(p.l_est);
    all_meas.push_back(p.l_meas);
  }
  out.all_r = correlation_or_nan(all_meas, all_est);
  out.rms_cm = rms_error(all_est, all_meas);
  return out;
}

}  // namespace

double pearson_r(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw InputError("pearson_r: length mismatch (" + std::to_string(x.size()) +
                     " vs " + std::to_string(y.size()) + ")");
  }
  if (x.size() < 3) throw InputError("pearson_r: need at least 3 points");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) {
    throw DegenerateError("pearson_r: zero variance");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double rms_error(std::span<const double> est, std::span<const double> meas) {
  if (est.size() != meas.size()) {
    throw InputError("rms_error: length mismatch (" +
                     std::to_string(est.size()) + " vs " +
                     std::to_string(meas.size()) + ")");
  }
  if (est.empty()) throw InputError("rms_error: no points");
  double acc = 0.0;
  for (std::size_t i = 0; i < est.size(); ++i) {
    const double d = est[i] - meas[i];
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(est.size()));
}

F0Source F0Source::parse(const std::string& spec) {
  F0Source src;
  if (spec.empty() || spec == "auto") return src;
  if (spec == "manifest") {
    src.kind = Kind::kManifest;
    return src;
  }
  char* end = nullptr;
  const double v = std::strtod(spec.c_str(), &end);
  if (end != spec.c_str() && *end == '\0') {
    if (!(v >= 0.0)) throw ConfigError("--f0 must be >= 0, got " + spec);
    src.kind = Kind::kFixed;
    src.value = v;
    return src;
  }
  const csv::Table t = csv::read(spec);
  const std::size_t c_id = t.column("utterance_id");
  const std::size_t c_f0 = t.column("f0_hz");
  src.kind = Kind::kTable;
  for (const auto& row : t.rows) {
    src.table[row[c_id]] = csv::parse_number(row[c_f0], "f0_hz");
  }
  return src;
}

Corpus::Corpus(std::vector<ManifestEntry> entries, AnalysisConfig config,
               F0Source f0_source)
    : entries_(std::move(entries)),
      config_(config),
      f0_source_(std::move(f0_source)),
      f0_(entries_.size()),
      audio_(entries_.size()),
      audio_loaded_(entries_.size(), false) {
  if (entries_.empty()) throw InputError("corpus has no utterances");
  std::set<Vowel> seen;
  for (const auto& e : entries_) {
    if (std::find(speakers_.begin(), speakers_.end(), e.speaker_id) ==
        speakers_.end()) {
      speakers_.push_back(e.speaker_id);
    }
    seen.insert(e.vowel);
  }
  for (Vowel v : kAllVowels) {
    if (seen.count(v)) vowels_.push_back(v);
  }
}

const std::vector<double>& Corpus::samples(std::size_t u) {
  if (!audio_loaded_[u]) {
    Audio audio = read_wav(entries_[u].path);
    if (audio.fs != config_.fs) {
      audio.samples = resample_signal(audio.samples, audio.fs, config_.fs);
    }
    audio_[u] = std::move(audio.samples);
    audio_loaded_[u] = true;
  }
  return audio_[u];
}

const std::vector<Spectrum>& Corpus::spectra(const Representation& rep) {
  const Representation key = rep.unweighted();
  const std::string id = key.id();
  if (auto it = spectra_.find(id); it != spectra_.end()) return it->second;
  std::vector<Spectrum> out;
  out.reserve(entries_.size());
  for (std::size_t u = 0; u < entries_.size(); ++u) {
    if (key.base == SpectrumBase::kWorld) {
      if (entries_[u].spectrum_path.empty()) {
        throw InputError("utterance " + entries_[u].utterance_id() +
                         ": representation " + id +
                         " needs a spectrum_path in the manifest");
      }
      out.push_back(ingest_spectrum(read_spectrum_csv(entries_[u].spectrum_path),
                                    key, config_));
    } else {
      out.push_back(analyze_signal(samples(u), config_.fs, key, config_));
    }
  }
  return spectra_.emplace(id, std::move(out)).first->second;
}

double Corpus::f0(std::size_t u) {
  if (f0_[u]) return *f0_[u];
  double f0 = 0.0;
  switch (f0_source_.kind) {
    case F0Source::Kind::kAuto:
      f0 = estimate_f0(samples(u), config_.fs).value_or(0.0);
      break;
    case F0Source::Kind::kManifest:
      f0 = entries_[u].f0_hz;
      break;
    case F0Source::Kind::kFixed:
      f0 = f0_source_.value;
      break;
    case F0Source::Kind::kTable: {
      const auto it = f0_source_.table.find(entries_[u].utterance_id());
      if (it == f0_source_.table.end()) {
        throw InputError("F0 table has no entry for utterance " +
                         entries_[u].utterance_id());
      }
      f0 = it->second;
      break;
    }
  }
  f0_[u] = f0;
  return f0;
}

Spectrum Corpus::spectrum(std::size_t u, const Representation& rep,
                          double h_max) {
  const Spectrum& base = spectra(rep)[u];
  if (!rep.ssi) return base;
  return apply_ssi(base, f0(u), h_max);
}

ShiftTables compute_shift_tables(Corpus& corpus, const Representation& rep,
                                 double h_max) {
  ShiftTables tables;
  for (Vowel v : corpus.vowels()) {
    ShiftTables::PerVowel pv{v, {}, ShiftMatrix(0)};
    std::vector<Spectrum> spectra;
    for (std::size_t u = 0; u < corpus.entries().size(); ++u) {
      if (corpus.entries()[u].vowel != v) continue;
      pv.utterances.push_back(u);
      spectra.push_back(corpus.spectrum(u, rep, h_max));
    }
    if (spectra.size() < 2) continue;
    try {
      pv.matrix = build_shift_matrix(spectra, corpus.config().xcorr);
    } catch (const DegenerateError& e) {
      throw DegenerateError("vowel " + std::string(to_string(v)) + ", " +
                            e.what());
    }
    tables.vowels.push_back(std::move(pv));
  }
  if (tables.vowels.empty()) {
    throw InputError("no vowel has utterances from at least 2 speakers");
  }
  return tables;
}

Estimation estimate_lengths(const Corpus& corpus, const ShiftTables& tables,
                            std::span<const std::string> excluded) {
  const auto& entries = corpus.entries();
  const auto is_excluded = [&](const std::string& id) {
    return std::find(excluded.begin(), excluded.end(), id) != excluded.end();
  };
  Estimation est;
  for (const auto& pv : tables.vowels) {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < pv.utterances.size(); ++k) {
      if (!is_excluded(entries[pv.utterances[k]].speaker_id)) keep.push_back(k);
    }
    if (keep.size() < 2) continue;
    const std::vector<double> s = relative_shifts(pv.matrix.subset(keep));
    for (std::size_t k = 0; k < keep.size(); ++k) {
      const ManifestEntry& e = entries[pv.utterances[keep[k]]];
      est.points.push_back({pv.utterances[keep[k]], e.speaker_id, e.vowel, s[k],
                            0.0, e.vtl_cm});
    }
  }
  if (est.points.empty()) {
    throw ConfigError("estimation left with no vowel shared by 2 speakers");
  }

  // Mean measured length over speakers (each speaker's own mean first).
  std::map<std::string, std::pair<double, std::size_t>> per_speaker;
  for (const auto& p : est.points) {
    auto& acc = per_speaker[p.speaker_id];
    acc.first += p.l_meas;
    acc.second += 1;
  }
  double total = 0.0;
  for (const auto& [id, acc] : per_speaker) {
    total += acc.first / static_cast<double>(acc.second);
  }
  est.l_bar = total / static_cast<double>(per_speaker.size());

  std::vector<double> s, meas;
  for (const auto& p : est.points) {
    s.push_back(p.s);
    meas.push_back(p.l_meas);
  }
  // Every vowel's shifts sum to zero, so identical shifts are all zero and
  // the cost does not depend on q; report q = 0 rather than failing.
  const auto [s_lo, s_hi] = std::minmax_element(s.begin(), s.end());
  est.q = *s_hi - *s_lo > 1e-12 ? fit_q(s, meas, est.l_bar) : 0.0;
  const std::vector<double> l = estimate_vtl(s, est.q, est.l_bar);
  for (std::size_t i = 0; i < l.size(); ++i) est.points[i].l_est = l[i];
  return est;
}

std::vector<TrialResult> exclusion_trials(const Corpus& corpus,
                                          const ShiftTables& tables,
                                          std::size_t k, std::size_t trials,
                                          std::uint64_t seed) {
  const auto& speakers = corpus.speakers();
  if (speakers.size() <= k) {
    throw ConfigError("exclusion trials: cannot exclude " + std::to_string(k) +
                      " of " + std::to_string(speakers.size()) + " speakers");
  }
  std::mt19937_64 rng(seed);
  std::vector<TrialResult> out;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<std::size_t> order(speakers.size());
    std::iota(order.begin(), order.end(), 0);
    // Partial Fisher-Yates with the raw engine output, so the draw is the
    // same on every standard library.
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng() % (order.size() - i));
      std::swap(order[i], order[j]);
    }
    std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    TrialResult trial;
    for (std::size_t i = 0; i < k; ++i) trial.excluded.push_back(speakers[order[i]]);
    const Estimation est = estimate_lengths(corpus, tables, trial.excluded);
    std::vector<double> e, m;
    for (const auto& p : est.points) {
      e.push_back(p.l_est);
      m.push_back(p.l_meas);
    }
    trial.rms_cm = rms_error(e, m);
    out.push_back(std::move(trial));
  }
  return out;
}

double EvalReport::trial_rms_mean() const {
  if (trials.empty()) return kNaN;
  double acc = 0.0;
  for (const auto& t : trials) acc += t.rms_cm;
  return acc / static_cast<double>(trials.size());
}

double EvalReport::trial_rms_std() const {
  if (trials.size() < 2) return trials.empty() ? kNaN : 0.0;
  const double mean = trial_rms_mean();
  double acc = 0.0;
  for (const auto& t : trials) acc += (t.rms_cm - mean) * (t.rms_cm - mean);
  return std::sqrt(acc / static_cast<double>(trials.size() - 1));
}

EvalReport evaluate(Corpus& corpus, const Representation& rep,
                    const EvalOptions& options) {
  const ShiftTables tables = compute_shift_tables(corpus, rep, options.h_max);
  EvalReport report;
  report.representation_id = rep.id();
  report.h_max = rep.ssi ? options.h_max : 0.0;
  report.estimation = estimate_lengths(corpus, tables);
  const Scores s = score(report.estimation, corpus.vowels());
  report.per_vowel_r = s.per_vowel_r;
  report.all_r = s.all_r;
  report.rms_cm = s.rms_cm;
  report.q = report.estimation.q;
  if (options.trials > 0) {
    report.trials = exclusion_trials(corpus, tables, options.exclude,
                                     options.trials, options.seed);
  }
  return report;
}

std::vector<SweepRow> hmax_sweep(Corpus& corpus, const Representation& rep,
                                 std::span<const double> grid) {
  std::vector<SweepRow> rows;
  for (double h : grid) {
    if (h < 0.0) throw ConfigError("h_max grid values must be >= 0");
    Representation r = rep;
    r.ssi = h > 0.0;
    const ShiftTables tables = compute_shift_tables(corpus, r, h);
    const Estimation est = estimate_lengths(corpus, tables);
    const Scores s = score(est, corpus.vowels());
    rows.push_back({h, s.per_vowel_r, s.all_r, s.rms_cm});
  }
  return rows;
}

std::vector<double> default_hmax_grid() {
  std::vector<double> grid;
  for (int k = 0; k <= 12; ++k) grid.push_back(0.5 * k);
  return grid;
}

std::vector<Representation> all_audio_representations() {
  std::vector<Representation> out;
  out.push_back({SpectrumBase::kEp, false, Compression::none()});
  out.push_back({SpectrumBase::kEp, true, Compression::none()});
  for (SpectrumBase base : {SpectrumBase::kFourier, SpectrumBase::kMel}) {
    for (bool ssi : {false, true}) {
      out.push_back({base, ssi, Compression::log()});
      for (int p = 1; p <= 10; ++p) {
        out.push_back({base, ssi, Compression::power_of(p / 10.0)});
      }
    }
  }
  return out;
}

}  // namespace vtlssi
