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

// Subcommands of the vtlssi tool. Kept out of main() so tests can drive
// them with argument vectors and captured streams.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "vtlssi/representation.hpp"
#include "vtlssi/synth.hpp"

namespace vtlssi::cli {

// Everything a run can be configured with. Defaults are the standard
// analysis values; a JSON file (--config) overrides them and flags
// override the file.
struct RunConfig {
  AnalysisConfig analysis;
  std::string manifest;
  std::vector<std::string> representations;
  double h_max = 3.5;
  std::vector<double> hmax_grid;
  std::string f0 = "auto";
  std::size_t trials = 10;
  std::size_t exclude = 3;
  std::uint64_t seed = 1;
  std::filesystem::path out;
  // synth
  bool pair_demo = false;
  std::vector<SpeakerSpec> speakers;
  std::vector<Vowel> vowels;
  CorpusOptions corpus;
};

// Parses a JSON config file. Unknown keys are rejected so a typo cannot
// silently fall back to a default. Throws ConfigError.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(const std::string& json_text);

// Entry point. Returns the process exit code: 0 when every output was
// written, 1 on a processing error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace vtlssi::cli
