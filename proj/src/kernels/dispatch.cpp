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

#include <cstdlib>
#include <string_view>

#include "vtlssi/kernels.hpp"

namespace vtlssi::kernels {

#ifndef VTLSSI_HAVE_AVX2
const KernelTable* avx2_kernels() { return nullptr; }
#endif

bool cpu_has_avx2() {
#if defined(VTLSSI_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable& table = [] () -> const KernelTable& {
    const char* env = std::getenv("VTLSSI_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") {
      return scalar_kernels();
    }
    if (const KernelTable* avx2 = avx2_kernels(); avx2 && cpu_has_avx2()) {
      return *avx2;
    }
    return scalar_kernels();
  }();
  return table;
}

}  // namespace vtlssi::kernels
