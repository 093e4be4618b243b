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

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "test_support.hpp"
#include "vtlssi/csv.hpp"
#include "vtlssi/errors.hpp"
#include "vtlssi/io.hpp"
#include "vtlssi/wav.hpp"

using namespace vtlssi;
using vtlssi::testing::TempDir;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("numbers round-trip through their text form") {
  for (double v : {0.0, 1.0, -2.5, 0.1, 1.0 / 3.0, 6.02214076e23, 1e-300,
                   15.835133287764865}) {
    CHECK(std::stod(csv::format_number(v)) == v);
  }
  CHECK(csv::format_number(1.0 / 3.0).size() >= 11);
  CHECK(csv::parse_number("2.5", "x") == 2.5);
  CHECK_THROWS_AS(csv::parse_number("2.5cm", "x"), InputError);
}

TEST_CASE("CSV tables") {
  TempDir dir;
  csv::Writer w;
  w.row({"a", "b"}).row({"1", "x"}).row({"2", "y"});
  csv::write_atomic(dir / "t.csv", w.str());
  CHECK_FALSE(std::filesystem::exists(dir / "t.csv.tmp"));
  const auto t = csv::read(dir / "t.csv");
  CHECK(t.header == std::vector<std::string>{"a", "b"});
  CHECK(t.rows.size() == 2);
  CHECK(t.column("b") == 1);
  CHECK_THROWS_AS(t.column("c"), InputError);
  CHECK_THROWS_AS(csv::read(dir / "missing.csv"), InputError);
}

TEST_CASE("WAV round trip") {
  TempDir dir;
  std::vector<double> x = {0.0, 0.5, -0.5, 0.25, -1.0, 0.999};
  SUBCASE("16-bit") {
    write_wav(dir / "a.wav", x, 16000.0);
    const Audio a = read_wav(dir / "a.wav");
    CHECK(a.fs == 16000.0);
    REQUIRE(a.samples.size() == x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      CHECK(std::abs(a.samples[i] - x[i]) <= 0.5 / 32768.0 + 1e-15);
    }
  }
  SUBCASE("float") {
    write_wav(dir / "f.wav", x, 48000.0, WavFormat::kFloat32);
    const Audio a = read_wav(dir / "f.wav");
    for (std::size_t i = 0; i < x.size(); ++i) {
      CHECK(a.samples[i] == static_cast<double>(static_cast<float>(x[i])));
    }
  }
  SUBCASE("bad files") {
    std::ofstream(dir / "junk.wav") << "not a wave file at all";
    CHECK_THROWS_AS(read_wav(dir / "junk.wav"), InputError);
    CHECK_THROWS_AS(read_wav(dir / "none.wav"), InputError);
  }
  SUBCASE("stereo is rejected") {
    // 44-byte canonical header, 2 channels, 16-bit, one frame.
    std::string h = "RIFF";
    auto u32 = [&](std::uint32_t v) {
      for (int k = 0; k < 4; ++k) h.push_back(static_cast<char>((v >> (8 * k)) & 0xff));
    };
    auto u16 = [&](std::uint16_t v) {
      for (int k = 0; k < 2; ++k) h.push_back(static_cast<char>((v >> (8 * k)) & 0xff));
    };
    u32(40);
    h += "WAVEfmt ";
    u32(16); u16(1); u16(2); u32(8000); u32(32000); u16(4); u16(16);
    h += "data";
    u32(4); u16(0); u16(0);
    std::ofstream(dir / "st.wav", std::ios::binary) << h;
    CHECK_THROWS_AS(read_wav(dir / "st.wav"), InputError);
  }
}

TEST_CASE("spectrum CSV round trip recovers the axis") {
  TempDir dir;
  for (const auto& axis : {canonical_erb_axis(), canonical_log_axis(),
                           canonical_mel_axis()}) {
    std::vector<double> v(axis.channels());
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = 0.5 + std::sin(0.1 * c) / 4;
    write_spectrum_csv(dir / "s.csv", Spectrum(v, axis));
    const Spectrum back = read_spectrum_csv(dir / "s.csv");
    CHECK(back.axis().kind() == axis.kind());
    CHECK(back.values() == v);
  }
  const std::string text =
      spectrum_csv(Spectrum({1.0, 2.0}, make_axis(AxisKind::kLog10Hz, 2, 100, 8000)));
  CHECK(text == "channel,center_hz,value\n0,100,1\n1,8000,2\n");
}

TEST_CASE("shift matrix and spectrogram CSV") {
  TempDir dir;
  ShiftMatrix m(2);
  m.set(0, 1, 1.5);
  write_shift_matrix_csv(dir / "m.csv", m);
  CHECK(slurp(dir / "m.csv") == "0,1.5\n-1.5,0\n");
  const Spectrogram sg({1, 2, 3, 4, 5, 6}, 3, make_axis(AxisKind::kLog10Hz, 2, 100, 200),
                       0.01, 0.005);
  write_spectrogram_csv(dir / "sg.csv", sg);
  CHECK(slurp(dir / "sg.csv") ==
        "channel,center_hz,0.005,0.015,0.025\n0,100,1,3,5\n1,200,2,4,6\n");
}
