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
#include <immintrin.h>

#include "mull/kernels.hpp"

namespace mull::kernels {

// Four candidates per lane group; each t is broadcast and tested against
// all four at once.
void meets_all_avx2(const std::uint64_t* ts, std::size_t nt, const std::uint64_t* ys,
                    std::size_t ny, std::uint8_t* keep) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t y = 0;
  for (; y + 4 <= ny; y += 4) {
    __m256i cand = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ys + y));
    __m256i dead = zero;
    for (std::size_t i = 0; i < nt; ++i) {
      __m256i t = _mm256_set1_epi64x(static_cast<long long>(ts[i]));
      __m256i hit = _mm256_cmpeq_epi64(_mm256_and_si256(t, cand), zero);
      dead = _mm256_or_si256(dead, hit);
      if ((i & 7) == 7 && _mm256_movemask_pd(_mm256_castsi256_pd(dead)) == 0xF) break;
    }
    int m = _mm256_movemask_pd(_mm256_castsi256_pd(dead));
    for (int k = 0; k < 4; ++k) keep[y + static_cast<std::size_t>(k)] = (m >> k & 1) ? 0 : 1;
  }
  if (y < ny) meets_all_scalar(ts, nt, ys + y, ny - y, keep + y);
}

}  // namespace mull::kernels
