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
#ifndef RANKSEG_SRC_SCORING_UTIL_HPP_
#define RANKSEG_SRC_SCORING_UTIL_HPP_

#include <bit>
#include <cstdint>
#include <span>
#include <string>

#include "rankseg/error.hpp"
#include "rankseg/prob_vector.hpp"
#include "rankseg/ranking.hpp"

namespace rankseg::detail {

// Auto mode scores exactly up to this many pixels.
inline constexpr std::size_t kAutoExactMaxPixels = 500;

// gamma * sum_l P(l) / (tau + l + gamma) over a mass window starting at
// count `offset`. The single 0/0 term (tau = l = gamma = 0) follows zz.
inline double smoothing_sum(std::span<const double> mass, std::size_t offset,
                            std::size_t tau, double gamma, ZeroOverZero zz) {
  if (gamma == 0.0) {
    return (tau == 0 && offset == 0 && zz == ZeroOverZero::one && !mass.empty())
               ? mass[0]
               : 0.0;
  }
  const double base = static_cast<double>(tau + offset) + gamma;
  double acc = 0.0;
  for (std::size_t i = 0; i < mass.size(); ++i) {
    acc += mass[i] / (base + static_cast<double>(i));
  }
  return gamma * acc;
}

// E[f(|y & v|, |y|, |v|)] over independent y_j ~ Bernoulli(q_j), by
// enumerating all 2^d label vectors.
template <typename F>
double enumerate_expectation(const SuccessProbVector& q, const SegMask& mask,
                             F f) {
  const std::size_t d = q.size();
  if (mask.size() != d) {
    throw Error(Errc::shape_mismatch, "mask and probability lengths differ");
  }
  if (d > 20) {
    throw Error(Errc::size_exceeded,
                "enumeration oracle limited to 20 pixels, got " + std::to_string(d));
  }
  std::uint32_t v = 0;
  for (std::size_t j = 0; j < d; ++j) {
    if (mask.bits[j]) v |= 1u << j;
  }
  const double nv = static_cast<double>(std::popcount(v));
  double total = 0.0;
  for (std::uint32_t y = 0; y < (1u << d); ++y) {
    double prob = 1.0;
    for (std::size_t j = 0; j < d && prob != 0.0; ++j) {
      prob *= ((y >> j) & 1u) ? q[j] : 1.0 - q[j];
    }
    if (prob == 0.0) continue;
    total += prob * f(static_cast<double>(std::popcount(y & v)),
                      static_cast<double>(std::popcount(y)), nv);
  }
  return total;
}

}  // namespace rankseg::detail

#endif  // RANKSEG_SRC_SCORING_UTIL_HPP_
