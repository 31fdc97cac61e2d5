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
#include "pb_accumulator.hpp"

#include <algorithm>

namespace rankseg::detail {

void PmfAccumulator::add(double q) {
  ++terms_;
  if (q <= 0.0) return;
  if (q >= 1.0) {
    ++offset_;
    return;
  }
  const double p = 1.0 - q;
  mass_.push_back(0.0);
  for (std::size_t i = mass_.size() - 1; i > 0; --i) {
    mass_[i] = mass_[i] * p + mass_[i - 1] * q;
  }
  mass_[0] *= p;
}

void PmfAccumulator::trim(double floor) {
  std::size_t lead = 0;
  while (lead + 1 < mass_.size() && mass_[lead] < floor) ++lead;
  std::size_t end = mass_.size();
  while (end > lead + 1 && mass_[end - 1] < floor) --end;
  if (lead == 0 && end == mass_.size()) return;
  mass_.erase(mass_.begin() + static_cast<std::ptrdiff_t>(end), mass_.end());
  mass_.erase(mass_.begin(), mass_.begin() + static_cast<std::ptrdiff_t>(lead));
  offset_ += lead;
}

std::vector<double> PmfAccumulator::dense() const {
  std::vector<double> out(terms_ + 1, 0.0);
  for (std::size_t i = 0; i < mass_.size(); ++i) out[offset_ + i] = mass_[i];
  return out;
}

namespace {

void sweep(const PmfAccumulator& acc, std::span<const double> items,
           std::size_t lo, std::size_t hi,
           const std::function<void(std::size_t, const PmfAccumulator&)>& visit) {
  if (hi - lo == 1) {
    visit(lo, acc);
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  {
    PmfAccumulator left = acc;
    left.add_all(items.subspan(mid, hi - mid));
    left.trim();
    sweep(left, items, lo, mid, visit);
  }
  PmfAccumulator right = acc;
  right.add_all(items.subspan(lo, mid - lo));
  right.trim();
  sweep(right, items, mid, hi, visit);
}

}  // namespace

void for_each_leave_one_out(
    const PmfAccumulator& base, std::span<const double> items,
    const std::function<void(std::size_t, const PmfAccumulator&)>& visit) {
  if (items.empty()) return;
  sweep(base, items, 0, items.size(), visit);
}

}  // namespace rankseg::detail
