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
#include "rankseg/prob_vector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rankseg/error.hpp"

namespace rankseg {

SuccessProbVector::SuccessProbVector(std::vector<double> probs)
    : probs_(std::move(probs)) {
  for (std::size_t j = 0; j < probs_.size(); ++j) {
    const double p = probs_[j];
    // Written so that NaN fails the check.
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(Errc::invalid_argument,
                  "probability at index " + std::to_string(j) +
                      " is not in [0,1]: " + std::to_string(p));
    }
  }
}

SuccessProbVector::SuccessProbVector(std::initializer_list<double> probs)
    : SuccessProbVector(std::vector<double>(probs)) {}

SuccessProbVector SuccessProbVector::from_span(std::span<const double> probs) {
  return SuccessProbVector(std::vector<double>(probs.begin(), probs.end()));
}

std::size_t SegMask::count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(bits.begin(), bits.end(), [](std::uint8_t b) { return b != 0; }));
}

}  // namespace rankseg
