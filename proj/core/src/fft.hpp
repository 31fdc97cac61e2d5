/* Copyright 2026 The RankSeg Authors. All Rights Reserved.

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
#ifndef RANKSEG_SRC_FFT_HPP_
#define RANKSEG_SRC_FFT_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace rankseg::detail {

std::size_t next_pow2(std::size_t n);

// Real sequence of length n whose forward DFT has the given Hermitian half
// spectrum (n/2 + 1 bins). No scaling applied.
std::vector<double> real_from_half_spectrum(
    std::span<const std::complex<double>> half, std::size_t n);

// c[t] = sum_i a[i] * b[i + t] for t in [0, out_len), with b treated as zero
// past its end. Zero-padded to a power of two, so no wrap-around.
std::vector<double> cross_correlate(std::span<const double> a,
                                    std::span<const double> b,
                                    std::size_t out_len);

}  // namespace rankseg::detail

#endif  // RANKSEG_SRC_FFT_HPP_
