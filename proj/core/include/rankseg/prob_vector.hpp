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
#ifndef RANKSEG_PROB_VECTOR_HPP_
#define RANKSEG_PROB_VECTOR_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace rankseg {

/// Per-pixel success probabilities q in [0,1]^d. Validated on construction
/// (NaN, Inf and out-of-range values throw); immutable afterwards.
class SuccessProbVector {
 public:
  SuccessProbVector() = default;
  explicit SuccessProbVector(std::vector<double> probs);
  SuccessProbVector(std::initializer_list<double> probs);

  static SuccessProbVector from_span(std::span<const double> probs);

  std::size_t size() const noexcept { return probs_.size(); }
  bool empty() const noexcept { return probs_.empty(); }
  double operator[](std::size_t j) const noexcept { return probs_[j]; }
  std::span<const double> values() const noexcept { return probs_; }

 private:
  std::vector<double> probs_;
};

/// Binary segmentation mask, one byte (0 or 1) per pixel.
struct SegMask {
  std::vector<std::uint8_t> bits;

  SegMask() = default;
  explicit SegMask(std::size_t d) : bits(d, 0) {}
  explicit SegMask(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

  std::size_t size() const noexcept { return bits.size(); }
  std::size_t count() const noexcept;

  friend bool operator==(const SegMask&, const SegMask&) = default;
};

}  // namespace rankseg

#endif  // RANKSEG_PROB_VECTOR_HPP_
