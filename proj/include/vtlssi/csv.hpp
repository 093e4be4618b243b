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

// Small CSV helpers used by every exporter.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace vtlssi::csv {

// Shortest decimal form that round-trips the double exactly.
std::string format_number(double v);

// Writes `contents` to a temporary sibling and renames it over `path`.
void write_atomic(const std::filesystem::path& path,
                  const std::string& contents);

class Writer {
 public:
  Writer& row(const std::vector<std::string>& cells);
  const std::string& str() const { return buf_; }

 private:
  std::string buf_;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Column index by name; throws InputError when absent.
  std::size_t column(std::string_view name) const;
  bool has_column(std::string_view name) const;
};

// Comma-separated, first line is the header, blank lines skipped. No
// quoting support.
Table read(const std::filesystem::path& path);

double parse_number(std::string_view cell, std::string_view what);

}  // namespace vtlssi::csv
