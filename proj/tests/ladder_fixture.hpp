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

// The standard eight-speaker, five-vowel ladder, synthesized once per test
// binary into a scratch directory.

#include <vector>

#include "test_support.hpp"
#include "vtlssi/eval.hpp"
#include "vtlssi/synth.hpp"

namespace vtlssi::testing {

struct Ladder {
  TempDir dir;
  std::vector<ManifestEntry> entries;
  Ladder() {
    entries = make_corpus(default_speakers(), {kAllVowels.begin(), kAllVowels.end()},
                          dir.path());
  }
};

inline const Ladder& ladder() {
  static const Ladder l;
  return l;
}

inline Corpus ladder_corpus() { return Corpus(ladder().entries, AnalysisConfig{}); }

}  // namespace vtlssi::testing
