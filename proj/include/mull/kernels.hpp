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
#ifndef MULL_KERNELS_HPP
#define MULL_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <string>

namespace mull::kernels {

// keep[y] = 1 iff (ts[i] & ys[y]) != 0 for every i, else 0.
using MeetsAllFn = void (*)(const std::uint64_t* ts, std::size_t nt, const std::uint64_t* ys,
                            std::size_t ny, std::uint8_t* keep);

void meets_all_scalar(const std::uint64_t* ts, std::size_t nt, const std::uint64_t* ys,
                      std::size_t ny, std::uint8_t* keep);
#if defined(__x86_64__) || defined(__i386__)
void meets_all_avx2(const std::uint64_t* ts, std::size_t nt, const std::uint64_t* ys,
                    std::size_t ny, std::uint8_t* keep);
#endif

bool avx2_available();
// The fastest variant supported by the running CPU.
MeetsAllFn meets_all();
std::string active_kernel();

}  // namespace mull::kernels

#endif  // MULL_KERNELS_HPP
