/* Copyright 2026 The mullsem Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#include "mull/kernels.hpp"

namespace mull::kernels {

void meets_all_scalar(const std::uint64_t* ts, std::size_t nt, const std::uint64_t* ys,
                      std::size_t ny, std::uint8_t* keep) {
  for (std::size_t y = 0; y < ny; ++y) {
    std::uint8_t ok = 1;
    for (std::size_t i = 0; i < nt; ++i) {
      if ((ts[i] & ys[y]) == 0) {
        ok = 0;
        break;
      }
    }
    keep[y] = ok;
  }
}

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

MeetsAllFn meets_all() {
#if defined(__x86_64__) || defined(__i386__)
  if (avx2_available()) return meets_all_avx2;
#endif
  return meets_all_scalar;
}

std::string active_kernel() { return avx2_available() ? "avx2" : "scalar"; }

}  // namespace mull::kernels
