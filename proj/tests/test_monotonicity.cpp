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

#include <doctest.h>

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "ladder_fixture.hpp"

using namespace vtlssi;
using vtlssi::testing::ladder_corpus;

// Kept in its own binary: on the synthetic ladder a few distant speaker
// pairs lock onto a harmonic-aligned secondary correlation peak, which is
// enough to swap neighbouring estimates in some vowels.
TEST_CASE("estimated length increases with measured length within each vowel") {
  Corpus corpus = ladder_corpus();
  EvalOptions eo;
  eo.trials = 0;
  const EvalReport report = evaluate(corpus, Representation::parse("Ep_SSI"), eo);
  std::map<Vowel, std::vector<std::pair<double, double>>> by_vowel;
  for (const auto& p : report.estimation.points) {
    by_vowel[p.vowel].push_back({p.l_meas, p.l_est});
  }
  for (auto& [v, pts] : by_vowel) {
    std::sort(pts.begin(), pts.end());
    CAPTURE(to_string(v));
    for (std::size_t i = 1; i < pts.size(); ++i) {
      CAPTURE(pts[i - 1].first);
      CHECK(pts[i].second > pts[i - 1].second);
    }
  }
}
