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
#ifndef RANKSEG_SRC_PB_ACCUMULATOR_HPP_
#define RANKSEG_SRC_PB_ACCUMULATOR_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace rankseg::detail {

// Poisson-binomial mass stored on its support window only:
// P(count == offset + i) = mass[i]. Certain and impossible terms shift or
// leave the window without widening it.
class PmfAccumulator {
 public:
  PmfAccumulator() : mass_{1.0} {}

  void add(double q);
  void add_all(std::span<const double> q) {
    for (double v : q) add(v);
  }
  // Drops leading/trailing entries below `floor`. Used by the scoring
  // engine only; the reference DP never trims.
  void trim(double floor = 1e-300);

  std::size_t offset() const noexcept { return offset_; }
  std::size_t terms() const noexcept { return terms_; }
  const std::vector<double>& window() const noexcept { return mass_; }
  double at(std::size_t l) const noexcept {
    return (l < offset_ || l - offset_ >= mass_.size()) ? 0.0 : mass_[l - offset_];
  }
  // Dense table over counts 0..terms().
  std::vector<double> dense() const;

 private:
  std::size_t offset_ = 0;
  std::size_t terms_ = 0;
  std::vector<double> mass_;
};

// Visits, for s = 0..items.size()-1 in increasing order, the law of
// base + sum of items except items[s]. Only ever adds Bernoulli factors
// (divide and conquer over the item list), never divides one out.
void for_each_leave_one_out(
    const PmfAccumulator& base, std::span<const double> items,
    const std::function<void(std::size_t, const PmfAccumulator&)>& visit);

}  // namespace rankseg::detail

#endif  // RANKSEG_SRC_PB_ACCUMULATOR_HPP_
