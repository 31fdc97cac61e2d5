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
#ifndef RANKSEG_RANKIOU_HPP_
#define RANKSEG_RANKIOU_HPP_

// IoU-optimal volume search. Scores depend on the law of the positives left
// outside the selected set, so there is no blind (shared-law) mode here.

#include <cstddef>
#include <optional>

#include "rankseg/prob_vector.hpp"
#include "rankseg/ranking.hpp"

namespace rankseg {

using IoUScoreTable = VolumeSearchResult;

enum class IoUMode { exact, trna };

// Smallest volume past which expected IoU cannot improve; d if never hit.
std::size_t shrink_iou_bound(const RankedProbs& r, double gamma,
                             std::optional<std::size_t> d_cap = std::nullopt);

// trna needs variance >= 25 for the unselected set at every volume <= d0.
IoUScoreTable score_iou(const RankedProbs& r, double gamma, std::size_t d0,
                        IoUMode mode, double eps = 1e-4,
                        ZeroOverZero zz = ZeroOverZero::zero);

struct IoUPrediction {
  SegMask mask;
  IoUScoreTable search;
};

// Auto: exact up to 500 pixels or when the unselected variance is too low,
// trna otherwise. Algorithm::ba is rejected.
IoUPrediction predict_iou(const SuccessProbVector& q, const RankSegConfig& cfg,
                          bool force = false);

double expected_iou_oracle(const SuccessProbVector& q, const SegMask& mask,
                           double gamma, ZeroOverZero zz = ZeroOverZero::zero);

}  // namespace rankseg

#endif  // RANKSEG_RANKIOU_HPP_
