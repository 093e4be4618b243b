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

#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "vtlssi/csv.hpp"
#include "vtlssi/errors.hpp"
#include "vtlssi/eval.hpp"
#include "vtlssi/io.hpp"
#include "vtlssi/ssi.hpp"
#include "vtlssi/wav.hpp"

namespace vtlssi::cli {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Reference frequency for turning a channel shift into a frequency ratio
// on axes that are not exactly logarithmic.
constexpr double kRatioReferenceHz = 2000.0;

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      throw ConfigError("unknown config key '" + where + key + "'");
    }
  }
}

template <typename T>
T get(const json& obj, const std::string& key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config field '" + where + key + "' has the wrong type");
  }
}

void parse_analysis(const json& j, AnalysisConfig& a) {
  reject_unknown(j,
                 {"fs", "channels", "f_lo", "f_hi", "ep_frame_period",
                  "half_width", "stft_window", "stft_hop", "mel_filters",
                  "max_lag", "interp", "xcorr_normalization"},
                 "analysis.");
  const std::string w = "analysis.";
  if (j.contains("fs")) a.fs = get<double>(j, "fs", w);
  if (j.contains("channels")) a.channels = get<std::size_t>(j, "channels", w);
  if (j.contains("f_lo")) a.f_lo = get<double>(j, "f_lo", w);
  if (j.contains("f_hi")) a.f_hi = get<double>(j, "f_hi", w);
  if (j.contains("ep_frame_period")) {
    a.ep_frame_period = get<double>(j, "ep_frame_period", w);
  }
  if (j.contains("half_width")) a.half_width = get<double>(j, "half_width", w);
  if (j.contains("stft_window")) a.stft_window = get<double>(j, "stft_window", w);
  if (j.contains("stft_hop")) a.stft_hop = get<double>(j, "stft_hop", w);
  if (j.contains("mel_filters")) {
    a.mel_filters = get<std::size_t>(j, "mel_filters", w);
  }
  if (j.contains("max_lag")) a.xcorr.max_lag = get<std::size_t>(j, "max_lag", w);
  if (j.contains("interp")) a.xcorr.interp = get<std::size_t>(j, "interp", w);
  if (j.contains("xcorr_normalization")) {
    const auto mode = get<std::string>(j, "xcorr_normalization", w);
    if (mode == "global") {
      a.xcorr.normalization = XcorrNormalization::kGlobal;
    } else if (mode == "overlap") {
      a.xcorr.normalization = XcorrNormalization::kOverlap;
    } else {
      throw ConfigError(
          "config field 'analysis.xcorr_normalization' must be 'global' or "
          "'overlap'");
    }
  }
  const auto positive = [&](double v, const char* key) {
    if (!(v > 0.0)) throw ConfigError("config field '" + w + key + "' must be > 0");
  };
  positive(a.fs, "fs");
  positive(a.ep_frame_period, "ep_frame_period");
  positive(a.half_width, "half_width");
  positive(a.stft_window, "stft_window");
  positive(a.stft_hop, "stft_hop");
  positive(static_cast<double>(a.mel_filters), "mel_filters");
  positive(static_cast<double>(a.xcorr.interp), "interp");
  try {
    for (SpectrumBase b : {SpectrumBase::kEp, SpectrumBase::kFourier, SpectrumBase::kMel}) {
      (void)a.target_axis(b);
    }
  } catch (const Error& e) {
    throw ConfigError("config section 'analysis' gives an invalid axis: " +
                      std::string(e.what()));
  }
}

std::vector<SpeakerSpec> parse_speakers(const json& j) {
  if (!j.is_array()) throw ConfigError("config field 'speakers' must be a list");
  std::vector<SpeakerSpec> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = "speakers[" + std::to_string(i) + "].";
    reject_unknown(j[i], {"id", "f0", "alpha"}, w);
    SpeakerSpec s;
    s.id = j[i].contains("id") ? get<std::string>(j[i], "id", w)
                               : "s" + std::to_string(i + 1);
    s.f0 = get<double>(j[i], "f0", w);
    s.alpha = get<double>(j[i], "alpha", w);
    if (!(s.alpha > 0.0) || !std::isfinite(s.alpha)) {
      throw ConfigError("config field '" + w + "alpha' must be > 0");
    }
    if (!(s.f0 > 0.0) || !std::isfinite(s.f0)) {
      throw ConfigError("config field '" + w + "f0' must be > 0");
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Representation list; "all" expands to every audio representation.
std::vector<std::string> expand_representations(
    const std::vector<std::string>& ids) {
  std::vector<std::string> out;
  for (const auto& id : ids) {
    if (id == "all") {
      for (const auto& r : all_audio_representations()) out.push_back(r.id());
    } else {
      out.push_back(Representation::parse(id).id());
    }
  }
  return out;
}

std::string num(double v) { return csv::format_number(v); }

std::vector<std::string> vowel_columns(const std::vector<Vowel>& vowels) {
  std::vector<std::string> cols;
  for (Vowel v : vowels) cols.push_back("r_" + std::string(to_string(v)));
  return cols;
}

std::vector<std::string> vowel_values(const std::vector<Vowel>& vowels,
                                      const std::map<Vowel, double>& r) {
  std::vector<std::string> cells;
  for (Vowel v : vowels) {
    const auto it = r.find(v);
    cells.push_back(num(it == r.end() ? kNaN : it->second));
  }
  return cells;
}

void append(std::vector<std::string>& a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
}

std::vector<ManifestEntry> load_manifest(const RunConfig& cfg) {
  if (cfg.manifest.empty()) {
    throw ConfigError("no manifest given (--manifest or config 'manifest')");
  }
  return read_manifest(cfg.manifest);
}

fs::path require_out(const RunConfig& cfg) {
  if (cfg.out.empty()) throw ConfigError("no output directory (--out)");
  std::error_code ec;
  fs::create_directories(cfg.out, ec);
  if (ec) {
    throw InputError("cannot create " + cfg.out.string() + ": " + ec.message());
  }
  return cfg.out;
}

// --- synth ---------------------------------------------------------------

void cmd_synth(const RunConfig& cfg, std::ostream& out) {
  const fs::path dir = require_out(cfg);
  std::vector<SpeakerSpec> speakers = cfg.speakers;
  if (speakers.empty()) {
    speakers = cfg.pair_demo ? pair_demo_speakers() : default_speakers();
  }
  std::vector<Vowel> vowels = cfg.vowels;
  if (vowels.empty()) vowels.assign(kAllVowels.begin(), kAllVowels.end());
  const auto entries = make_corpus(speakers, vowels, dir, cfg.corpus);
  out << "wrote " << entries.size() << " utterances and "
      << (dir / "manifest.csv").string() << "\n";
}

// --- analyze -------------------------------------------------------------

void cmd_analyze(const RunConfig& cfg, const fs::path& audio_path,
                 const std::string& rep_id, const fs::path& out_file,
                 std::ostream& out, std::ostream& err) {
  const Representation rep = Representation::parse(rep_id);
  const Audio audio = read_wav(audio_path);
  Spectrum s = analyze_signal(audio.samples, audio.fs, rep, cfg.analysis);
  if (rep.ssi) {
    const F0Source src = F0Source::parse(cfg.f0);
    double f0 = 0.0;
    switch (src.kind) {
      case F0Source::Kind::kAuto:
      case F0Source::Kind::kManifest: {
        const auto est = estimate_f0(audio.samples, audio.fs);
        if (!est) err << "warning: " << audio_path.string()
                      << " judged unvoiced; SSI weight disabled\n";
        f0 = est.value_or(0.0);
        break;
      }
      case F0Source::Kind::kFixed:
        f0 = src.value;
        break;
      case F0Source::Kind::kTable: {
        const std::string id = audio_path.stem().string();
        const auto it = src.table.find(id);
        if (it == src.table.end()) {
          throw InputError("F0 table has no entry for utterance " + id);
        }
        f0 = it->second;
        break;
      }
    }
    s = apply_ssi(s, f0, cfg.h_max);
  }
  if (out_file.empty()) {
    out << spectrum_csv(s);
  } else {
    write_spectrum_csv(out_file, s);
  }
}

// --- estimate ------------------------------------------------------------

void cmd_estimate(const RunConfig& cfg, const std::string& rep_id,
                  std::ostream& out) {
  const fs::path dir = require_out(cfg);
  const Representation rep = Representation::parse(rep_id);
  Corpus corpus(load_manifest(cfg), cfg.analysis, F0Source::parse(cfg.f0));
  const ShiftTables tables = compute_shift_tables(corpus, rep, cfg.h_max);
  const Estimation est = estimate_lengths(corpus, tables);

  csv::Writer w;
  w.row({"speaker_id", "vowel", "S_channels", "L_est_cm", "L_meas_cm"});
  for (const auto& p : est.points) {
    w.row({p.speaker_id, std::string(to_string(p.vowel)), num(p.s),
           num(p.l_est), num(p.l_meas)});
  }
  csv::write_atomic(dir / "estimates.csv", w.str());
  for (const auto& pv : tables.vowels) {
    write_shift_matrix_csv(
        dir / ("shift_" + std::string(to_string(pv.vowel)) + ".csv"),
        pv.matrix);
  }

  // For a two-speaker corpus, the frequency ratio implied by the mean
  // relative shift, oriented so that a correct estimate is > 1 (shorter
  // tract relative to longer).
  double pair_shift = kNaN;
  double pair_ratio = kNaN;
  const auto& speakers = corpus.speakers();
  if (speakers.size() == 2) {
    std::map<std::string, std::pair<double, double>> acc;  // sum S, sum L
    std::map<std::string, std::size_t> count;
    for (const auto& p : est.points) {
      acc[p.speaker_id].first += p.s;
      acc[p.speaker_id].second += p.l_meas;
      ++count[p.speaker_id];
    }
    const auto mean_s = [&](const std::string& id) {
      return acc[id].first / static_cast<double>(count[id]);
    };
    const auto mean_l = [&](const std::string& id) {
      return acc[id].second / static_cast<double>(count[id]);
    };
    const bool first_longer = mean_l(speakers[0]) >= mean_l(speakers[1]);
    const std::string& longer = first_longer ? speakers[0] : speakers[1];
    const std::string& shorter = first_longer ? speakers[1] : speakers[0];
    pair_shift = mean_s(shorter) - mean_s(longer);
    pair_ratio = channel_shift_to_ratio(
        cfg.analysis.target_axis(rep.base), pair_shift, kRatioReferenceHz);
  }

  std::vector<double> e, m;
  for (const auto& p : est.points) {
    e.push_back(p.l_est);
    m.push_back(p.l_meas);
  }
  double all_r = kNaN;
  try {
    all_r = pearson_r(m, e);
  } catch (const Error&) {
  }
  csv::Writer r;
  r.row({"representation", "h_max", "q", "l_bar_cm", "all_r", "rms_cm",
         "pair_shift_channels", "pair_ratio"});
  r.row({rep.id(), num(rep.ssi ? cfg.h_max : 0.0), num(est.q), num(est.l_bar),
         num(all_r), num(rms_error(e, m)), num(pair_shift), num(pair_ratio)});
  csv::write_atomic(dir / "report.csv", r.str());
  out << rep.id() << ": " << est.points.size() << " estimates, q = "
      << est.q;
  if (std::isfinite(pair_ratio)) out << ", pair ratio = " << pair_ratio;
  out << "\n";
}

// --- evaluate / sweep ----------------------------------------------------

void cmd_evaluate(const RunConfig& cfg, std::ostream& out) {
  const fs::path dir = require_out(cfg);
  const std::vector<std::string> reps = expand_representations(
      cfg.representations.empty()
          ? std::vector<std::string>{"Ep", "Ep_SSI", "F_log", "F_SSI_log",
                                     "M_log", "M_SSI_log"}
          : cfg.representations);
  Corpus corpus(load_manifest(cfg), cfg.analysis, F0Source::parse(cfg.f0));
  const auto& vowels = corpus.vowels();

  csv::Writer report, trials, scatter;
  std::vector<std::string> header = {"representation", "h_max"};
  append(header, vowel_columns(vowels));
  append(header, {"all_r", "rms_cm", "q", "l_bar_cm", "trial_rms_mean",
                  "trial_rms_std"});
  report.row(header);
  trials.row({"representation", "trial", "excluded", "rms_cm"});
  scatter.row({"representation", "speaker_id", "vowel", "S_channels",
               "L_est_cm", "L_meas_cm"});

  const EvalOptions options{cfg.h_max, cfg.trials, cfg.exclude, cfg.seed};
  for (const auto& id : reps) {
    const EvalReport rep =
        evaluate(corpus, Representation::parse(id), options);
    std::vector<std::string> row = {rep.representation_id, num(rep.h_max)};
    append(row, vowel_values(vowels, rep.per_vowel_r));
    append(row, {num(rep.all_r), num(rep.rms_cm), num(rep.q),
                 num(rep.estimation.l_bar), num(rep.trial_rms_mean()),
                 num(rep.trial_rms_std())});
    report.row(row);
    for (std::size_t t = 0; t < rep.trials.size(); ++t) {
      std::string excluded;
      for (const auto& s : rep.trials[t].excluded) {
        excluded += (excluded.empty() ? "" : ";") + s;
      }
      trials.row({rep.representation_id, std::to_string(t + 1), excluded,
                  num(rep.trials[t].rms_cm)});
    }
    for (const auto& p : rep.estimation.points) {
      scatter.row({rep.representation_id, p.speaker_id,
                   std::string(to_string(p.vowel)), num(p.s), num(p.l_est),
                   num(p.l_meas)});
    }
    out << rep.representation_id << ": r = " << rep.all_r
        << ", RMS = " << rep.rms_cm << " cm\n";
  }
  csv::write_atomic(dir / "report.csv", report.str());
  csv::write_atomic(dir / "trials.csv", trials.str());
  csv::write_atomic(dir / "scatter.csv", scatter.str());
}

void cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const fs::path dir = require_out(cfg);
  const std::vector<std::string> reps = expand_representations(
      cfg.representations.empty() ? std::vector<std::string>{"Ep"}
                                  : cfg.representations);
  const std::vector<double> grid =
      cfg.hmax_grid.empty() ? default_hmax_grid() : cfg.hmax_grid;
  Corpus corpus(load_manifest(cfg), cfg.analysis, F0Source::parse(cfg.f0));
  const auto& vowels = corpus.vowels();

  csv::Writer w;
  std::vector<std::string> header = {"representation", "h_max"};
  append(header, vowel_columns(vowels));
  append(header, {"all_r", "rms_cm"});
  w.row(header);
  std::set<std::string> done;
  for (const auto& id : reps) {
    const Representation rep = Representation::parse(id).unweighted();
    // Ep and Ep_SSI sweep the same family.
    if (!done.insert(rep.id()).second) continue;
    for (const auto& row : hmax_sweep(corpus, rep, grid)) {
      std::vector<std::string> cells = {rep.id(), num(row.h_max)};
      append(cells, vowel_values(vowels, row.per_vowel_r));
      append(cells, {num(row.all_r), num(row.rms_cm)});
      w.row(cells);
    }
    out << rep.id() << ": swept " << grid.size() << " h_max values\n";
  }
  csv::write_atomic(dir / "sweep.csv", w.str());
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(j,
                 {"analysis", "manifest", "representations", "rep", "hmax",
                  "hmax_grid", "f0", "trials", "exclude", "seed", "out",
                  "pair_demo", "speakers", "vowels", "synth"},
                 "");
  RunConfig cfg;
  if (j.contains("analysis")) parse_analysis(j["analysis"], cfg.analysis);
  if (j.contains("manifest")) cfg.manifest = get<std::string>(j, "manifest", "");
  if (j.contains("representations")) {
    cfg.representations =
        get<std::vector<std::string>>(j, "representations", "");
  }
  if (j.contains("rep")) {
    cfg.representations = {get<std::string>(j, "rep", "")};
  }
  if (j.contains("hmax")) cfg.h_max = get<double>(j, "hmax", "");
  if (j.contains("hmax_grid")) {
    cfg.hmax_grid = get<std::vector<double>>(j, "hmax_grid", "");
  }
  if (j.contains("f0")) {
    cfg.f0 = j["f0"].is_number() ? csv::format_number(j["f0"].get<double>())
                                 : get<std::string>(j, "f0", "");
  }
  if (j.contains("trials")) cfg.trials = get<std::size_t>(j, "trials", "");
  if (j.contains("exclude")) cfg.exclude = get<std::size_t>(j, "exclude", "");
  if (j.contains("seed")) cfg.seed = get<std::uint64_t>(j, "seed", "");
  if (j.contains("out")) cfg.out = get<std::string>(j, "out", "");
  if (j.contains("pair_demo")) cfg.pair_demo = get<bool>(j, "pair_demo", "");
  if (j.contains("speakers")) cfg.speakers = parse_speakers(j["speakers"]);
  if (j.contains("vowels")) {
    for (const auto& v : get<std::vector<std::string>>(j, "vowels", "")) {
      cfg.vowels.push_back(parse_vowel(v));
    }
  }
  if (j.contains("synth")) {
    const json& s = j["synth"];
    reject_unknown(s, {"duration", "fs", "baseline_vtl_cm"}, "synth.");
    if (s.contains("duration")) {
      cfg.corpus.duration = get<double>(s, "duration", "synth.");
    }
    if (s.contains("fs")) cfg.corpus.fs = get<double>(s, "fs", "synth.");
    if (s.contains("baseline_vtl_cm")) {
      cfg.corpus.baseline_vtl_cm = get<double>(s, "baseline_vtl_cm", "synth.");
    }
  }
  if (!(cfg.h_max >= 0.0)) throw ConfigError("config field 'hmax' must be >= 0");
  return cfg;
}

RunConfig load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Vocal tract length estimation from vowels with an F0-adaptive "
      "spectral weight"};
  app.name("vtlssi");
  app.require_subcommand(1);

  struct Flags {
    std::string config, rep, f0, manifest;
    double hmax = 0.0;
    std::uint64_t seed = 0;
    std::size_t trials = 0, exclude = 0;
    std::string out;
    std::vector<std::string> reps;
    std::string audio;
  } f;
  // Options that override the config file only when given.
  std::map<std::string, CLI::Option*> given;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", f.config, "JSON run configuration");
  };

  CLI::App* synth = app.add_subcommand("synth", "Synthesise a vowel corpus");
  common(synth);
  given["synth.out"] = synth->add_option("--out", f.out, "Corpus directory");
  bool pair_demo = false;
  given["pair-demo"] = synth->add_flag(
      "--pair-demo", pair_demo,
      "Two speakers: 15.0 cm / 182 Hz and 18.5 cm / 101 Hz");

  CLI::App* analyze =
      app.add_subcommand("analyze", "Spectrum of one WAV file as CSV");
  common(analyze);
  analyze->add_option("audio", f.audio, "Input WAV")->required();
  given["analyze.rep"] =
      analyze->add_option("--rep", f.rep, "Representation id (e.g. Ep_SSI)");
  given["analyze.hmax"] = analyze->add_option("--hmax", f.hmax, "h_max");
  given["analyze.f0"] =
      analyze->add_option("--f0", f.f0, "auto, a value in Hz, or a CSV file");
  given["analyze.out"] =
      analyze->add_option("--out", f.out, "Output CSV (default: stdout)");

  CLI::App* estimate = app.add_subcommand(
      "estimate", "Relative shifts and lengths for a manifest");
  common(estimate);
  given["estimate.manifest"] =
      estimate->add_option("--manifest,manifest", f.manifest, "Manifest CSV");
  given["estimate.rep"] = estimate->add_option("--rep", f.rep, "Representation");
  given["estimate.hmax"] = estimate->add_option("--hmax", f.hmax, "h_max");
  given["estimate.f0"] = estimate->add_option("--f0", f.f0, "F0 source");
  given["estimate.out"] = estimate->add_option("--out", f.out, "Output dir");

  CLI::App* evaluate_cmd = app.add_subcommand(
      "evaluate", "Correlation, RMS and exclusion trials per representation");
  CLI::App* sweep = app.add_subcommand("sweep", "h_max sweep");
  for (CLI::App* sub : {evaluate_cmd, sweep}) {
    const std::string n = sub->get_name() + ".";
    common(sub);
    given[n + "manifest"] =
        sub->add_option("--manifest", f.manifest, "Manifest CSV");
    given[n + "rep"] = sub->add_option(
        "--rep", f.reps, "Representation id(s); 'all' for every one");
    given[n + "f0"] = sub->add_option("--f0", f.f0, "F0 source");
    given[n + "out"] = sub->add_option("--out", f.out, "Output dir");
  }
  given["evaluate.hmax"] = evaluate_cmd->add_option("--hmax", f.hmax, "h_max");
  given["evaluate.seed"] =
      evaluate_cmd->add_option("--seed", f.seed, "Exclusion RNG seed");
  given["evaluate.trials"] =
      evaluate_cmd->add_option("--trials", f.trials, "Exclusion trials");
  given["evaluate.exclude"] = evaluate_cmd->add_option(
      "--exclude", f.exclude, "Speakers excluded per trial");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; everything else is a usage error.
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string n = sub->get_name() + ".";
    RunConfig cfg = f.config.empty() ? RunConfig{} : load_config(f.config);
    const auto has = [&](const std::string& key) {
      const auto it = given.find(key);
      return it != given.end() && it->second->count() > 0;
    };
    if (has(n + "out")) cfg.out = f.out;
    if (has(n + "manifest")) cfg.manifest = f.manifest;
    if (has(n + "f0")) cfg.f0 = f.f0;
    if (has(n + "hmax")) {
      if (!(f.hmax >= 0.0)) throw ConfigError("--hmax must be >= 0");
      cfg.h_max = f.hmax;
    }
    if (has(n + "seed")) cfg.seed = f.seed;
    if (has(n + "trials")) cfg.trials = f.trials;
    if (has(n + "exclude")) cfg.exclude = f.exclude;
    if (has(n + "rep")) {
      cfg.representations = f.reps.empty() ? std::vector<std::string>{f.rep}
                                           : f.reps;
    }
    if (has("pair-demo")) cfg.pair_demo = pair_demo;

    const auto single_rep = [&] {
      if (cfg.representations.size() > 1) {
        throw ConfigError(sub->get_name() + " takes one representation");
      }
      return cfg.representations.empty() ? std::string("Ep_SSI")
                                         : cfg.representations.front();
    };
    if (sub == synth) {
      cmd_synth(cfg, out);
    } else if (sub == analyze) {
      cmd_analyze(cfg, f.audio, single_rep(), cfg.out, out, err);
    } else if (sub == estimate) {
      cmd_estimate(cfg, single_rep(), out);
    } else if (sub == evaluate_cmd) {
      cmd_evaluate(cfg, out);
    } else {
      cmd_sweep(cfg, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace vtlssi::cli
